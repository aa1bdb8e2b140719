"""Compare the pure-Python and compiled two-sided-closure sweeps.

Runs both backends on the same mask problems, asserts byte-identical
results, and prints a timing table.  The F4 case (2^24 masks) is behind
a flag because the pure-Python side takes minutes there.

Usage: python benchmarks/bench_biclosed.py [--f4]
"""

from __future__ import annotations

import argparse
import time

from catx import _biclosed_py
from catx.rootsystem import build_root_system

try:
    from catx import _biclosed_cy
except ImportError:
    _biclosed_cy = None

TYPES = ["A2", "B2", "G2", "A3", "B3", "C3", "D4", "A4", "B4"]


def run(types: list[str]) -> None:
    header = f"{'type':>5} {'roots':>6} {'masks':>10} {'python_s':>10} {'cython_s':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for t in types:
        rs = build_root_system(t, allow_large=True)
        n = len(rs.positive_roots)
        triples = rs.sum_triples()

        t0 = time.perf_counter()
        py = _biclosed_py.biclosed_masks(n, triples)
        t_py = time.perf_counter() - t0

        if _biclosed_cy is None:
            print(f"{t:>5} {n:>6} {2**n:>10} {t_py:>10.3f} {'missing':>10} {'':>8}")
            continue

        t0 = time.perf_counter()
        cy = _biclosed_cy.biclosed_masks(n, triples)
        t_cy = time.perf_counter() - t0

        assert list(py) == list(cy), f"backend mismatch on {t}"
        speedup = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{t:>5} {n:>6} {2**n:>10} {t_py:>10.3f} {t_cy:>10.3f} {speedup:>7.1f}x")
    if _biclosed_cy is None:
        print("\ncompiled backend not built; install with the Cython toolchain to compare")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--f4", action="store_true", help="include the 2^24-mask F4 sweep")
    args = ap.parse_args()
    types = TYPES + (["F4"] if args.f4 else [])
    run(types)


if __name__ == "__main__":
    main()
