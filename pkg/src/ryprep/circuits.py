"""Immutable gate and circuit values over the real gate family.

Two gate kinds suffice for real statevector preparation: Ry rotations and X,
each optionally conditioned on any set of positive-polarity controls.
Circuits are value objects; every operation returns a new circuit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    ControlCollision,
    ControlEqualsTarget,
    DomainError,
    FormatError,
    IndexOutOfRange,
)

__all__ = ["RY", "X", "Gate", "Circuit", "ry", "x"]

RY = "ry"
X = "x"


@dataclass(frozen=True)
class Gate:
    kind: str
    target: int
    controls: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in (RY, X):
            raise DomainError(f"unknown gate kind {self.kind!r}")
        if not isinstance(self.target, int) or self.target < 0:
            raise IndexOutOfRange(f"target must be a nonnegative integer, got {self.target!r}")
        controls = tuple(sorted(int(c) for c in self.controls))
        if any(c < 0 for c in controls):
            raise IndexOutOfRange(f"controls must be nonnegative, got {controls}")
        if len(set(controls)) != len(controls):
            raise ControlCollision(f"duplicate control in {controls}")
        if self.target in controls:
            raise ControlEqualsTarget(f"qubit {self.target} is both target and control")
        object.__setattr__(self, "controls", controls)
        if self.kind == RY:
            if self.angle is None or not math.isfinite(self.angle):
                raise DomainError(f"ry needs a finite angle, got {self.angle!r}")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise DomainError("x takes no angle")

    @property
    def max_index(self) -> int:
        return max(self.controls + (self.target,))

    def with_control(self, control: int) -> "Gate":
        """Copy of this gate conditioned on one more qubit."""
        if control == self.target or control in self.controls:
            raise ControlCollision(f"qubit {control} already used by this gate")
        return Gate(self.kind, self.target, self.controls + (control,), self.angle)


def ry(angle: float, target: int, controls: Iterable[int] = ()) -> Gate:
    return Gate(RY, target, tuple(controls), float(angle))


def x(target: int, controls: Iterable[int] = ()) -> Gate:
    return Gate(X, target, tuple(controls))


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise DomainError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for gate in gates:
            if gate.max_index >= self.n_qubits:
                raise IndexOutOfRange(
                    f"gate touches qubit {gate.max_index} but the circuit has "
                    f"{self.n_qubits} qubits"
                )

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def append(self, gate: Gate) -> "Circuit":
        """New circuit with the gate added at the end."""
        return Circuit(self.n_qubits, self.gates + (gate,))

    def add_control(self, control: int) -> "Circuit":
        """New circuit with every gate conditioned on one extra qubit."""
        if not 0 <= control < self.n_qubits:
            raise IndexOutOfRange(f"control {control} outside 0..{self.n_qubits - 1}")
        return Circuit(self.n_qubits, tuple(g.with_control(control) for g in self.gates))

    def to_json(self) -> str:
        gates = []
        for g in self.gates:
            doc: dict = {"kind": g.kind}
            if g.kind == RY:
                doc["angle"] = g.angle
            doc["target"] = g.target
            doc["controls"] = list(g.controls)
            gates.append(doc)
        return json.dumps({"n_qubits": self.n_qubits, "gates": gates})

    @classmethod
    def from_json(cls, text: str) -> "Circuit":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid circuit JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise FormatError("circuit JSON must be an object")
        try:
            n_qubits = doc["n_qubits"]
            gate_docs = doc["gates"]
        except KeyError as exc:
            raise FormatError(f"circuit JSON missing key {exc}") from exc
        if not isinstance(n_qubits, int) or isinstance(n_qubits, bool):
            raise FormatError("n_qubits must be an integer")
        if not isinstance(gate_docs, list):
            raise FormatError("gates must be a list")
        gates = []
        for gd in gate_docs:
            if not isinstance(gd, dict) or "kind" not in gd or "target" not in gd:
                raise FormatError(f"malformed gate entry {gd!r}")
            kind = gd["kind"]
            target = gd["target"]
            controls = gd.get("controls", [])
            if not isinstance(target, int) or not isinstance(controls, list):
                raise FormatError(f"malformed gate entry {gd!r}")
            angle = gd.get("angle")
            if angle is not None and (isinstance(angle, bool) or not isinstance(angle, (int, float))):
                raise FormatError(f"gate angle must be a number, got {angle!r}")
            gates.append(Gate(kind, target, tuple(controls), angle))
        return cls(n_qubits, tuple(gates))
