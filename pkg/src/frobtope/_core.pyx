# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Machine-integer kernels: guarded Bareiss rank and permutation agreement tables.

Intermediate Bareiss entries are exact minors, which can outgrow 64 bits; every
stored value is checked against a 2**30 magnitude guard so that all products
stay within long long range, and OverflowError is raised past the guard. The
caller (frobtope.kernels) falls back to the pure big-int path on overflow.
"""

from libc.stdlib cimport free, malloc

cdef long long GUARD = (<long long>1) << 30


def rank_int(rows):
    """Rank over Q of an integer matrix given as a sequence of int sequences."""
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0
    cdef Py_ssize_t ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t r, c, row, piv, col
    cdef long long v, pv, prev, mrc, val, tmp
    try:
        for r in range(nrows):
            rowobj = rows[r]
            if len(rowobj) != ncols:
                raise ValueError("ragged matrix")
            for c in range(ncols):
                v = rowobj[c]
                if v > GUARD or v < -GUARD:
                    raise OverflowError("matrix entry exceeds guarded range")
                m[r * ncols + c] = v
        prev = 1
        row = 0
        for col in range(ncols):
            piv = -1
            for r in range(row, nrows):
                if m[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != row:
                for c in range(ncols):
                    tmp = m[row * ncols + c]
                    m[row * ncols + c] = m[piv * ncols + c]
                    m[piv * ncols + c] = tmp
            pv = m[row * ncols + col]
            for r in range(row + 1, nrows):
                mrc = m[r * ncols + col]
                for c in range(col + 1, ncols):
                    val = (m[r * ncols + c] * pv - mrc * m[row * ncols + c]) // prev
                    if val > GUARD or val < -GUARD:
                        raise OverflowError("minor exceeds guarded range")
                    m[r * ncols + c] = val
                m[r * ncols + col] = 0
            prev = pv
            row += 1
            if row == nrows:
                break
        return row
    finally:
        free(m)


def gram_table(images):
    """Pairwise agreement counts: out[a][b] = #{j : images[a][j] == images[b][j]}."""
    cdef Py_ssize_t t = len(images)
    if t == 0:
        return []
    cdef Py_ssize_t n = len(images[0])
    cdef long *buf = <long *> malloc(t * n * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t a, b, j
    cdef long count
    try:
        for a in range(t):
            rowobj = images[a]
            if len(rowobj) != n:
                raise ValueError("ragged image table")
            for j in range(n):
                buf[a * n + j] = rowobj[j]
        out = []
        for a in range(t):
            outrow = [0] * t
            for b in range(t):
                if b < a:
                    outrow[b] = out[b][a]
                    continue
                count = 0
                for j in range(n):
                    if buf[a * n + j] == buf[b * n + j]:
                        count += 1
                outrow[b] = count
            out.append(outrow)
        return out
    finally:
        free(buf)
