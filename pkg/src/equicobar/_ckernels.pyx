# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field elimination kernel (see ``_kernels_py`` for the contract)."""

from libc.stdlib cimport malloc, free


cdef long long _inv(long long a, long long p):
    cdef long long result = 1, e = p - 2
    a %= p
    while e:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result


cdef list _rref(long long *m, Py_ssize_t nrows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef long long inv, c, tmp
    cdef long long *prow
    cdef long long *row
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r * ncols + j]
                m[r * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = tmp
        prow = m + r * ncols
        inv = _inv(prow[col], p)
        if inv != 1:
            for j in range(col, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i != r:
                row = m + i * ncols
                c = row[col]
                if c:
                    for j in range(col, ncols):
                        if prow[j]:
                            row[j] = (row[j] - c * prow[j]) % p
                            if row[j] < 0:
                                row[j] += p
        pivots.append(col)
        r += 1
    return pivots


def rref_mod_p(rows, Py_ssize_t ncols, long long p):
    """Reduce ``rows`` in place; return the pivot column list."""
    cdef Py_ssize_t nrows = len(rows), i, j
    if nrows == 0 or ncols == 0:
        return []
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            row = rows[i]
            for j in range(ncols):
                m[i * ncols + j] = (<long long> row[j]) % p
        pivots = _rref(m, nrows, ncols, p)
        for i in range(nrows):
            rows[i] = [m[i * ncols + j] for j in range(ncols)]
        return pivots
    finally:
        free(m)


def rank_mod_p(rows, Py_ssize_t ncols, long long p):
    work = [list(r) for r in rows]
    return len(rref_mod_p(work, ncols, p))
