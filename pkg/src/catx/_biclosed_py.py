"""Pure-Python brute-force sweep for two-sided closed subsets.

Reference implementation of the mask enumeration; catx.kernels swaps in
the compiled twin when it is available.  Both backends must return the
identical list for the same input.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def biclosed_masks(
    n_roots: int, triples: Sequence[tuple[int, int, int]]
) -> list[int]:
    """Masks X over n_roots bits with X and its complement both closed.

    A triple (i, j, k) records root_i + root_j = root_k.  X is closed
    when every triple with i and j in X also has k in X.  Returns the
    passing masks in increasing order.
    """
    full = (1 << n_roots) - 1
    bits = [(1 << i, 1 << j, 1 << k) for i, j, k in triples]
    out = []
    for mask in range(full + 1):
        comp = full ^ mask
        ok = True
        for bi, bj, bk in bits:
            if mask & bi and mask & bj and not mask & bk:
                ok = False
                break
            if comp & bi and comp & bj and not comp & bk:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def closed_masks_agree(
    n_roots: int,
    triples: Iterable[tuple[int, int, int]],
    other: Sequence[int],
) -> bool:
    """Convenience equality check used by the benchmark."""
    return biclosed_masks(n_roots, tuple(triples)) == list(other)
