"""Dense real-statevector simulation of Ry/X circuits.

A gate on target t pairs index i (bit t clear) with i + 2**t and rotates or
swaps the two amplitudes whenever every control bit of i is set.  This is
the verification oracle for synthesized circuits.
"""

from __future__ import annotations

import math

import numpy as np

from ._kernels import apply_ry as _kernel_ry
from ._kernels import apply_x as _kernel_x
from .circuits import RY, Circuit, Gate
from .errors import DimensionMismatch, IndexOutOfRange
from .states import RealState

__all__ = ["apply_gate", "run", "max_abs_diff"]


def _control_mask(controls: tuple[int, ...]) -> int:
    mask = 0
    for c in controls:
        mask |= 1 << c
    return mask


def _apply_inplace(amps: np.ndarray, gate: Gate) -> None:
    if gate.kind == RY:
        half = 0.5 * gate.angle
        _kernel_ry(amps, gate.target, _control_mask(gate.controls), math.cos(half), math.sin(half))
    else:
        _kernel_x(amps, gate.target, _control_mask(gate.controls))


def apply_gate(state: RealState, gate: Gate) -> RealState:
    """One gate applied to one state; the state itself is untouched."""
    if gate.max_index >= state.n_qubits:
        raise IndexOutOfRange(
            f"gate touches qubit {gate.max_index} but the state has {state.n_qubits} qubits"
        )
    amps = np.array(state.amplitudes, dtype=np.float64)
    _apply_inplace(amps, gate)
    return RealState(state.n_qubits, tuple(amps.tolist()))


def run(circuit: Circuit) -> RealState:
    """Apply every gate in order to |0...0> and return the prepared state."""
    amps = np.zeros(1 << circuit.n_qubits, dtype=np.float64)
    amps[0] = 1.0
    for gate in circuit.gates:
        _apply_inplace(amps, gate)
    return RealState(circuit.n_qubits, tuple(amps.tolist()))


def max_abs_diff(a: RealState, b: RealState) -> float:
    """L-infinity distance between two states on the same qubit count."""
    if a.n_qubits != b.n_qubits:
        raise DimensionMismatch(f"cannot compare {a.n_qubits}-qubit and {b.n_qubits}-qubit states")
    return max(abs(p - q) for p, q in zip(a.amplitudes, b.amplitudes))
