"""Exact linear algebra: fraction-free integer elimination and rational nullspaces.

Everything here works over Python big ints and fractions.Fraction; no floats
anywhere. The Bareiss scheme keeps intermediate entries to exact minors, so
divisions are always exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

__all__ = [
    "int_row_echelon",
    "nullspace",
    "frac_rref",
    "scale_to_integers",
    "dot",
]


def int_row_echelon(rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """Bareiss row echelon of an integer matrix.

    Returns (echelon_rows, pivot_columns); only the nonzero echelon rows are
    kept, so the rank is len(pivot_columns).
    """
    m = [[int(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: List[int] = []
    prev = 1
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        prow = m[row]
        for r in range(row + 1, nrows):
            mr = m[r]
            mrc = mr[col]
            for c in range(col + 1, ncols):
                mr[c] = (mr[c] * pv - mrc * prow[c]) // prev
            mr[col] = 0
        prev = pv
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    return m[:row], pivots


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : M x = 0} for an integer matrix M, one vector per free column.

    Each basis vector carries a 1 in its free coordinate, giving a canonical,
    deterministic basis.
    """
    ech, pivots = int_row_echelon(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis: List[Tuple[Fraction, ...]] = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            row = ech[i]
            acc = Fraction(0)
            for c in range(p + 1, ncols):
                if row[c] and vec[c]:
                    acc += row[c] * vec[c]
            vec[p] = -acc / row[p]
        basis.append(tuple(vec))
    return basis


def frac_rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Fraction; returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def scale_to_integers(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    """Scale a rational vector by a positive rational so entries are coprime ints."""
    fracs = [Fraction(x) for x in vec]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def dot(a: Sequence, b: Sequence):
    """Exact dot product of two equal-length vectors."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x * y for x, y in zip(a, b))
