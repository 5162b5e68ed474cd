"""Compare the compiled kernels with the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``.  Both backends are timed
on the same inputs and their outputs are compared for equality first.
"""
import argparse
import timeit

from nuschroder import _pykernels
from nuschroder.enumeration import _bounds
from nuschroder.paths import BasePath, rational_base

try:
    from nuschroder import _ckernels
except ImportError:  # extension not built
    _ckernels = None

CASES = [
    ("(NE)^6", BasePath("NE" * 6)),
    ("E^6N^6", BasePath("E" * 6 + "N" * 6)),
    ("nu(5,7)", rational_base(5, 7)),
    ("E^7N^7", BasePath("E" * 7 + "N" * 7)),
]


def _time(fn, args, repeat):
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    opts = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not available; only the fallback is timed")
    header = f"{'case':10} {'kernel':14} {'python s':>10} {'cython s':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, nu in CASES:
        min_e, min_d = _bounds(nu, "small")
        args = (nu.a, nu.b, min_e, min_d)
        for kernel in ("enum_words", "count_by_diag"):
            py = getattr(_pykernels, kernel)
            t_py = _time(py, args, opts.repeat)
            if _ckernels is None:
                print(f"{name:10} {kernel:14} {t_py:10.4f} {'-':>10} {'-':>8}")
                continue
            cy = getattr(_ckernels, kernel)
            if cy(*args) != py(*args):
                raise SystemExit(f"backends disagree on {name} / {kernel}")
            t_cy = _time(cy, args, opts.repeat)
            print(f"{name:10} {kernel:14} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
