"""Timing comparison of the compiled and NumPy gate kernels.

Applies identical random gate workloads to statevectors of increasing size
with each backend and reports per-gate timings.  Run after an editable
install:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --qubits 10 16 20 --gates 400
"""

import argparse
import math
import time

import numpy as np

from ryprep._kernels import _fallback

try:
    from ryprep._kernels import _core
except ImportError:
    _core = None


def make_workload(rng, n_qubits, n_gates):
    ops = []
    for _ in range(n_gates):
        target = int(rng.integers(n_qubits))
        others = [q for q in range(n_qubits) if q != target]
        rng.shuffle(others)
        cmask = 0
        for q in others[: int(rng.integers(3))]:
            cmask |= 1 << q
        if rng.random() < 0.7:
            theta = float(rng.uniform(-2 * math.pi, 2 * math.pi))
            ops.append(("ry", target, cmask, math.cos(theta / 2), math.sin(theta / 2)))
        else:
            ops.append(("x", target, cmask))
    return ops


def run_workload(impl, amps, ops):
    start = time.perf_counter()
    for op in ops:
        if op[0] == "ry":
            impl.apply_ry(amps, op[1], op[2], op[3], op[4])
        else:
            impl.apply_x(amps, op[1], op[2])
    return time.perf_counter() - start


def bench(n_qubits, n_gates, repeats, seed):
    rng = np.random.default_rng(seed)
    ops = make_workload(rng, n_qubits, n_gates)
    vec = rng.normal(size=1 << n_qubits)
    vec /= np.linalg.norm(vec)

    results = {}
    final = {}
    backends = [("python", _fallback)] + ([("cython", _core)] if _core else [])
    for name, impl in backends:
        best = math.inf
        for _ in range(repeats):
            amps = vec.copy()
            best = min(best, run_workload(impl, amps, ops))
        results[name] = best
        final[name] = amps
    if _core is not None:
        drift = float(np.max(np.abs(final["python"] - final["cython"])))
        assert drift == 0.0, f"backends disagree by {drift}"
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--qubits", type=int, nargs="+", default=[8, 12, 16, 18])
    parser.add_argument("--gates", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    if _core is None:
        print("compiled core not built; timing the NumPy fallback only")
    header = f"{'qubits':>6} {'gates':>6} {'python us/gate':>15} {'cython us/gate':>15} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in args.qubits:
        res = bench(n, args.gates, args.repeats, args.seed)
        py = res["python"] / args.gates * 1e6
        if "cython" in res:
            cy = res["cython"] / args.gates * 1e6
            print(f"{n:>6} {args.gates:>6} {py:>15.2f} {cy:>15.2f} {py / cy:>7.2f}x")
        else:
            print(f"{n:>6} {args.gates:>6} {py:>15.2f} {'-':>15} {'-':>8}")


if __name__ == "__main__":
    main()
