"""Independent brute-force oracles for the test suite.

Everything here recomputes from first principles (arrow lists and the
defining formulas) without calling the library's enumeration code, so the
tests compare two genuinely different routes.
"""

from __future__ import annotations

import itertools

import numpy as np


def euler_value(n: int, arrows: list[tuple[int, int]], r, s=None) -> int:
    """<r, s> = sum r_i s_i - sum over arrows r_src * s_dst, from scratch."""
    if s is None:
        s = r
    total = sum(a * b for a, b in zip(r, s))
    for i, j in arrows:
        total -= r[i] * s[j]
    return total


def box_scan_roots(n: int, arrows: list[tuple[int, int]], box, max_value: int = 1) -> set[tuple[int, ...]]:
    """Exhaustive scan of the coordinate box for 0 != r with <r,r> <= max_value.

    Vectorized in chunks so the 7^8 E8 box stays fast; exact integer
    arithmetic throughout (int64 is ample at these sizes).
    """
    box = tuple(box)
    m = np.eye(n, dtype=np.int64)
    for i, j in arrows:
        m[i, j] -= 1
    split = max(0, n - 4)
    tail_ranges = [np.arange(b + 1) for b in box[split:]]
    tail = np.array(np.meshgrid(*tail_ranges, indexing="ij")).reshape(len(tail_ranges), -1).T
    found: set[tuple[int, ...]] = set()
    heads = itertools.product(*[range(b + 1) for b in box[:split]]) if split else [()]
    for head in heads:
        if split:
            rows = np.hstack([np.tile(np.array(head, dtype=np.int64), (len(tail), 1)), tail])
        else:
            rows = tail
        q = np.einsum("ri,ij,rj->r", rows, m, rows)
        mask = (q <= max_value) & (rows.sum(axis=1) > 0)
        for row in rows[mask]:
            found.add(tuple(int(x) for x in row))
    return found


def box_scan_real_roots(n: int, arrows: list[tuple[int, int]], bound: int) -> set[tuple[int, ...]]:
    """All 0 != r in [0, bound]^n with <r,r> exactly 1."""
    roots = box_scan_roots(n, arrows, (bound,) * n, max_value=1)
    return {r for r in roots if euler_value(n, arrows, r) == 1}
