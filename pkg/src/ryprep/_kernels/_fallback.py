"""Pure-NumPy pairwise amplitude updates, used when the compiled core is absent."""

import numpy as np


def _pair_base(n_amps: int, target: int, cmask: int) -> np.ndarray:
    """Indices with the target bit clear and every control bit set."""
    g = np.arange(n_amps >> 1, dtype=np.intp)
    low = (1 << target) - 1
    i0 = ((g >> target) << (target + 1)) | (g & low)
    if cmask:
        # controls never include the target, so checking i0 suffices
        i0 = i0[(i0 & cmask) == cmask]
    return i0


def apply_ry(amps: np.ndarray, target: int, cmask: int, cos_half: float, sin_half: float) -> None:
    i0 = _pair_base(amps.size, target, cmask)
    i1 = i0 + (1 << target)
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = cos_half * a0 - sin_half * a1
    amps[i1] = sin_half * a0 + cos_half * a1


def apply_x(amps: np.ndarray, target: int, cmask: int) -> None:
    i0 = _pair_base(amps.size, target, cmask)
    i1 = i0 + (1 << target)
    a0 = amps[i0]
    amps[i0] = amps[i1]
    amps[i1] = a0
