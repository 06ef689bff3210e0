"""Time the numba and numpy enumeration kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from checkdigit3 import kernels
from checkdigit3.composite import crt36, family_seq, mod37_code


def workloads():
    yield "decimal family (8 x Q=10)", [t.members() for t in family_seq("seq38")]
    yield "CRT base-36 (27 x Q=36)", [crt36(i, j).members() for i in (1, 2, 3) for j in range(9)]
    yield "mod-37 (36 x Q=36)", [mod37_code(K).members() for K in range(1, 37)]


def timed(backend, cubes, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [kernels.count_patterns(m, backend=backend) for m in cubes]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if kernels.HAVE_NUMBA:
        t0 = time.perf_counter()
        kernels.count_patterns(np.zeros((3, 3, 3), dtype=bool), backend="numba")
        print(f"numba warm-up (compile or cache load): {time.perf_counter() - t0:.3f} s")
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends) + "  agree")
    for name, cubes in workloads():
        times, results = [], []
        for b in backends:
            t, out = timed(b, cubes, args.repeat)
            times.append(t)
            results.append(out)
        agree = all(np.array_equal(x, y) for x, y in zip(results[0], results[-1]))
        print(f"{name:<28}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + f"  {agree}")


if __name__ == "__main__":
    main()
