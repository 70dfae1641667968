"""Time the compiled kernels against the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import sys
import timeit

from squeeze import _pykernels, kernels

CASES = [
    ("diophantine_parts d=2..20", lambda k: [sorted(map(tuple, k.diophantine_parts(d, d - 1))) for d in range(2, 21)]),
    ("triangle_count 200 triangles", lambda k: [k.triangle_count(A, B, 13, 2, -1)
                                                for A in range(0, 200, 10) for B in range(0, 100, 10)]),
    ("diagonal_ratio_max 25/4, 10^4 terms", lambda k: k.diagonal_ratio_max(25, 4, 10 ** 4)),
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    compiled = kernels._compiled
    if compiled is None:
        print("compiled kernels not built; run `pip install -e .` with Cython available", file=sys.stderr)
        return 1
    print(f"{'case':40} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in CASES:
        assert fn(_pykernels) == fn(compiled), name
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        cy = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:40} {py:10.4f} {cy:10.4f} {py / cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
