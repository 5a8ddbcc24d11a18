"""Integer kernels with a compiled fast path and pure-Python fallbacks.

The compiled extension (frobtope._core) is selected at import when available;
set FROBTOPE_PURE=1 to skip it. The compiled Bareiss works in guarded 64-bit
arithmetic and raises OverflowError when exact minors outgrow the guard, in
which case the dispatcher transparently reruns the pure big-int path.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from typing import Iterator, List, Sequence

__all__ = [
    "BACKEND",
    "compiled_available",
    "force_pure",
    "matrix_rank",
    "matrix_rank_py",
    "gram_table",
    "gram_table_py",
]

_FORCE_PURE_ENV = os.environ.get("FROBTOPE_PURE", "") not in ("", "0")

try:
    if _FORCE_PURE_ENV:
        raise ImportError("pure backend forced via FROBTOPE_PURE")
    from frobtope import _core as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "pure-python"

_pure_only = False


def compiled_available() -> bool:
    """True when the compiled extension was importable and not disabled."""
    return _compiled is not None


@contextmanager
def force_pure() -> Iterator[None]:
    """Temporarily route all kernel calls through the pure-Python paths."""
    global _pure_only
    saved = _pure_only
    _pure_only = True
    try:
        yield
    finally:
        _pure_only = saved


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix."""
    if _compiled is not None and not _pure_only:
        try:
            return _compiled.rank_int(rows)
        except OverflowError:
            pass
    return matrix_rank_py(rows)


def matrix_rank_py(rows: Sequence[Sequence[int]]) -> int:
    """Pure big-int Bareiss rank; no overflow is possible."""
    m = [[int(x) for x in r] for r in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
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
        row += 1
        if row == nrows:
            break
    return row


def gram_table(images: Sequence[Sequence[int]]) -> List[List[int]]:
    """Pairwise agreement counts between rows of an integer table."""
    if _compiled is not None and not _pure_only:
        return _compiled.gram_table(images)
    return gram_table_py(images)


def gram_table_py(images: Sequence[Sequence[int]]) -> List[List[int]]:
    """Pure-Python agreement table, identical output to the compiled path."""
    out: List[List[int]] = []
    for a, ra in enumerate(images):
        row = [0] * len(images)
        for b, rb in enumerate(images):
            if b < a:
                row[b] = out[b][a]
            else:
                row[b] = sum(x == y for x, y in zip(ra, rb))
        out.append(row)
    return out
