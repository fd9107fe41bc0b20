"""Independent brute-force oracles, written without the package's linear algebra."""

import itertools

from equicobar.simplicial import identity_surj


def boundary_mod_p(X, n, p):
    """Normalized boundary of degree ``n`` as a dict of columns, read off face data directly."""
    src = X.nondeg.get(n, [])
    tgt = X.nondeg.get(n - 1, [])
    idx = {y: j for j, y in enumerate(tgt)}
    cols = []
    for x in src:
        col = [0] * len(tgt)
        for i in range(n + 1):
            eta, y = X.face(i, (identity_surj(n), x))
            if tuple(eta) == identity_surj(n - 1):
                col[idx[y]] = (col[idx[y]] + (-1) ** i) % p
        cols.append(col)
    return cols


def _apply(cols, vec, rows, p):
    out = [0] * rows
    for c, col in zip(vec, cols):
        if c:
            for j, a in enumerate(col):
                out[j] = (out[j] + c * a) % p
    return tuple(out)


def homology_by_enumeration(X, p, top):
    """``dim H_n(X; F_p)`` by counting cycles and boundaries among all vectors."""
    dims = []
    for n in range(top + 1):
        k = len(X.nondeg.get(n, []))
        k_down = len(X.nondeg.get(n - 1, [])) if n else 0
        d_n = boundary_mod_p(X, n, p) if n else [[] for _ in range(k)]
        cycles = sum(
            1 for v in itertools.product(range(p), repeat=k) if not any(_apply(d_n, v, k_down, p))
        )
        k_up = len(X.nondeg.get(n + 1, []))
        d_up = boundary_mod_p(X, n + 1, p) if k_up else []
        boundaries = len({_apply(d_up, v, k, p) for v in itertools.product(range(p), repeat=k_up)})
        dims.append(_log(cycles, p) - _log(boundaries, p))
    return dims


def _log(x, p):
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


def euler_characteristic(X):
    return sum((-1) ** n * len(v) for n, v in X.nondeg.items())


def brute_grouplikes(C):
    """Every vector ``v`` with ``Delta v = v (x) v`` and ``eps v = 1``, found by enumeration."""
    F = C.F
    out = []
    for v in itertools.product(list(F.elements()), repeat=C.dim):
        eps = F.zero
        for i, c in enumerate(v):
            eps = F.add(eps, F.mul(c, C.counit[i]))
        if eps != F.one:
            continue
        lhs = {}
        for i, c in enumerate(v):
            if c != F.zero:
                for key, a in C.delta[i].items():
                    lhs[key] = F.add(lhs.get(key, F.zero), F.mul(c, a))
        rhs = {(j, k): F.mul(v[j], v[k]) for j in range(C.dim) for k in range(C.dim)}
        if all(lhs.get(key, F.zero) == val for key, val in rhs.items()) and all(
            key in rhs for key, val in lhs.items() if val != F.zero
        ):
            out.append(tuple(v))
    return sorted(out)
