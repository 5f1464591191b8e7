# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled pairwise amplitude-update kernels, the hot loop of the simulator.

Signatures mirror ``_fallback`` exactly so the two are interchangeable.
"""


def apply_ry(double[::1] amps, Py_ssize_t target, unsigned long long cmask,
             double cos_half, double sin_half):
    cdef Py_ssize_t half = amps.shape[0] >> 1
    cdef Py_ssize_t low = ((<Py_ssize_t>1) << target) - 1
    cdef Py_ssize_t step = (<Py_ssize_t>1) << target
    cdef Py_ssize_t g, i0, i1
    cdef double a0, a1
    for g in range(half):
        i0 = ((g >> target) << (target + 1)) | (g & low)
        if cmask != 0 and (<unsigned long long>i0 & cmask) != cmask:
            continue
        i1 = i0 + step
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = cos_half * a0 - sin_half * a1
        amps[i1] = sin_half * a0 + cos_half * a1


def apply_x(double[::1] amps, Py_ssize_t target, unsigned long long cmask):
    cdef Py_ssize_t half = amps.shape[0] >> 1
    cdef Py_ssize_t low = ((<Py_ssize_t>1) << target) - 1
    cdef Py_ssize_t step = (<Py_ssize_t>1) << target
    cdef Py_ssize_t g, i0, i1
    cdef double a0
    for g in range(half):
        i0 = ((g >> target) << (target + 1)) | (g & low)
        if cmask != 0 and (<unsigned long long>i0 & cmask) != cmask:
            continue
        i1 = i0 + step
        a0 = amps[i0]
        amps[i0] = amps[i1]
        amps[i1] = a0
