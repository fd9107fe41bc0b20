"""Pure-Python reference for the prime-field elimination kernel.

Same contract as the compiled ``_ckernels`` module: rows are lists of ints
in ``range(p)``; they are reduced in place to reduced row echelon form.
"""


def rref_mod_p(rows, ncols, p):
    """Reduce ``rows`` in place; return the pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if rows[i][col] % p:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[col], p - 2, p)
        if inv != 1:
            for j in range(col, ncols):
                prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i != r:
                row = rows[i]
                c = row[col] % p
                if c:
                    for j in range(col, ncols):
                        if prow[j]:
                            row[j] = (row[j] - c * prow[j]) % p
        pivots.append(col)
        r += 1
    return pivots


def rank_mod_p(rows, ncols, p):
    work = [list(r) for r in rows]
    return len(rref_mod_p(work, ncols, p))
