"""Compare the compiled permutation kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--max-k 6]

Each row times one workload on both backends (best of ``--repeat`` runs)
and checks that the results are identical.
"""

from __future__ import annotations

import argparse
import sys
import timeit

from symchar import _kernels_py as pure

try:
    from symchar import _kernels as compiled
except ImportError:
    compiled = None


def workloads(max_k: int):
    rot = lambda n: list(range(1, n)) + [0]  # noqa: E731
    yield f"normal_form_sweep({max_k})", lambda m: m.normal_form_sweep(max_k)
    yield f"kappa_pair_counts(S_{max_k + 1} cycle)", lambda m: m.kappa_pair_counts(rot(max_k + 1))
    yield f"cycle_product_counts(S_{max_k + 2})", lambda m: m.cycle_product_counts([1, 0, 3, 2] + list(range(4, max_k + 2)))
    yield f"length_distribution({max_k + 2})", lambda m: m.length_distribution(max_k + 2)


def _norm(x):
    if isinstance(x, dict):
        return sorted(x.items())
    return list(x) if not isinstance(x, (int, bool)) else x


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':<36} {'python [s]':>11} {'cython [s]':>11} {'speed-up':>9}")
    for name, fn in workloads(args.max_k):
        if _norm(fn(pure)) != _norm(fn(compiled)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        tp = min(timeit.repeat(lambda: fn(pure), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=args.repeat))
        print(f"{name:<36} {tp:11.4f} {tc:11.4f} {tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
