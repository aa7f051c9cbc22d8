#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure-Python fallback.

Times full eigensolves of gcd and lcm matrices on {1..n} for a few sizes
and reports per-backend medians plus the speedup. Run after installing:

    python benchmarks/bench_jacobi.py
    python benchmarks/bench_jacobi.py --sizes 50,100,300 --repeats 5
"""

import argparse
import statistics
import time

from smith_spectra.eig import available_backends, jacobi_eigenvalues
from smith_spectra.matrices import IntegerSet, gcd_matrix, lcm_matrix


def time_solve(matrix, backend: str, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        jacobi_eigenvalues(matrix, backend=backend)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="50,100,200",
                        help="comma-separated matrix orders")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = list(available_backends())
    print(f"backends: {', '.join(backends)}")
    header = f"{'family':<6} {'n':>5} " + " ".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for n in sizes:
        s = IntegerSet.first_n(n)
        for family, build in (("gcd", gcd_matrix), ("lcm", lcm_matrix)):
            matrix = build(s)
            times = [time_solve(matrix, b, args.repeats) for b in backends]
            row = f"{family:<6} {n:>5} " + " ".join(f"{t:>11.4f}s" for t in times)
            if len(times) == 2:
                row += f" {times[1] / times[0]:>8.1f}x"
            print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
