"""Real unit statevectors and the nested spherical-angle codec.

A real unit vector of length 2**n factors into 2**n - 1 angles: entry k is
``prod(sin(a_j / 2) for j < k) * cos(a_k / 2)`` and the final entry is the
full sine product.  ``to_angles`` and ``from_angles`` invert each other up
to floating-point roundoff, which is what makes circuit synthesis exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .errors import AllZeroInput, DomainError, FormatError, NotPowerOfTwo
from .tolerances import NORM_ATOL

__all__ = ["RealState", "AngleList", "normalize", "to_angles", "from_angles"]

_TWO_PI = 2.0 * math.pi


def _is_pow2(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0


@dataclass(frozen=True)
class RealState:
    """Unit-norm real amplitudes; bit k of the index is qubit k (little-endian)."""

    n_qubits: int
    amplitudes: tuple[float, ...]

    def __post_init__(self) -> None:
        amps = tuple(float(a) for a in self.amplitudes)
        object.__setattr__(self, "amplitudes", amps)
        if not isinstance(self.n_qubits, int) or self.n_qubits < 0:
            raise DomainError(f"n_qubits must be a nonnegative integer, got {self.n_qubits!r}")
        if len(amps) != 1 << self.n_qubits:
            raise DomainError(
                f"{self.n_qubits} qubits need {1 << self.n_qubits} amplitudes, got {len(amps)}"
            )
        norm_sq = math.fsum(a * a for a in amps)
        if not abs(norm_sq - 1.0) <= NORM_ATOL:
            raise DomainError(f"amplitudes are not unit norm: sum of squares = {norm_sq!r}")

    def to_json(self) -> str:
        return json.dumps({"n_qubits": self.n_qubits, "amplitudes": list(self.amplitudes)})

    @classmethod
    def from_json(cls, text: str) -> "RealState":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid state JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise FormatError("state JSON must be an object")
        try:
            n_qubits = doc["n_qubits"]
            amplitudes = doc["amplitudes"]
        except KeyError as exc:
            raise FormatError(f"state JSON missing key {exc}") from exc
        if not isinstance(n_qubits, int) or isinstance(n_qubits, bool):
            raise FormatError("n_qubits must be an integer")
        if not isinstance(amplitudes, list) or not all(
            isinstance(a, (int, float)) and not isinstance(a, bool) for a in amplitudes
        ):
            raise FormatError("amplitudes must be a list of numbers")
        return cls(n_qubits, tuple(float(a) for a in amplitudes))


@dataclass(frozen=True)
class AngleList:
    """Spherical angles of a real unit vector; length is 2**n - 1 for n >= 1.

    Every angle except the last lies in [0, 2*pi]; the last lies in
    (-2*pi, 2*pi] because it alone carries the sign of the final amplitude
    pair.
    """

    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        angles = tuple(float(a) for a in self.angles)
        object.__setattr__(self, "angles", angles)
        if not angles or not _is_pow2(len(angles) + 1):
            raise DomainError(f"angle count must be 2**n - 1 with n >= 1, got {len(angles)}")
        for a in angles[:-1]:
            if not 0.0 <= a <= _TWO_PI:
                raise DomainError(f"angle {a!r} outside [0, 2*pi]")
        last = angles[-1]
        if not -_TWO_PI < last <= _TWO_PI:
            raise DomainError(f"final angle {last!r} outside (-2*pi, 2*pi]")

    @property
    def n_qubits(self) -> int:
        return (len(self.angles) + 1).bit_length() - 1

    def __len__(self) -> int:
        return len(self.angles)


def normalize(values: Iterable[float]) -> RealState:
    """Scale a nonzero vector of power-of-two length onto the unit sphere."""
    vals = [float(v) for v in values]
    if len(vals) < 2 or not _is_pow2(len(vals)):
        raise NotPowerOfTwo(f"vector length must be a power of two >= 2, got {len(vals)}")
    norm = math.sqrt(math.fsum(v * v for v in vals))
    if norm == 0.0:
        raise AllZeroInput("all-zero vector cannot be normalized")
    return RealState(len(vals).bit_length() - 1, tuple(v / norm for v in vals))


def _suffix_norms_sq(amps: tuple[float, ...]) -> list[float]:
    """Running sums of squared amplitudes from each index to the end.

    Accumulated back to front with Neumaier compensation so the result is
    accurate to one ulp regardless of vector length; terms are nonnegative,
    so a sum of exactly 0.0 means every remaining amplitude squares to zero.
    """
    n = len(amps)
    sums = [0.0] * (n + 1)
    total = 0.0
    comp = 0.0
    for k in range(n - 1, -1, -1):
        x = amps[k] * amps[k]
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
        sums[k] = total + comp
    return sums


def to_angles(state: RealState) -> AngleList:
    """Extract the 2**n - 1 spherical angles of a state.

    Angle k is ``2 * atan2(r_{k+1}, c_k)`` where r is the norm of the
    remaining tail, except the last angle, which is ``2 * atan2(c_last,
    c_secondlast)`` so it can carry a sign.  Once the tail norm hits exactly
    zero the remaining angles are emitted as exact zeros; this canonical
    form avoids atan2's branch cut at (0, -0.0) and makes pruning reliable.
    """
    if state.n_qubits < 1:
        raise DomainError("angle extraction needs at least one qubit")
    c = state.amplitudes
    n = len(c)
    suffix = _suffix_norms_sq(c)
    angles = [0.0] * (n - 1)
    for k in range(n - 1):
        if suffix[k] == 0.0:
            break
        if k < n - 2:
            angles[k] = 2.0 * math.atan2(math.sqrt(suffix[k + 1]), c[k])
        else:
            angles[k] = 2.0 * math.atan2(c[n - 1], c[n - 2])
    return AngleList(tuple(angles))


def from_angles(angles: AngleList) -> RealState:
    """Expand angles back into amplitudes via the running sine product."""
    a = angles.angles
    amps = [0.0] * (len(a) + 1)
    prod = 1.0
    for k, angle in enumerate(a):
        half = 0.5 * angle
        amps[k] = prod * math.cos(half)
        prod *= math.sin(half)
    amps[-1] = prod
    return RealState(angles.n_qubits, tuple(amps))
