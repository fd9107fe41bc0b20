"""Cocommutative coalgebras, simplicial coalgebras and the chains/points pair.

A :class:`Coalgebra` is held by structure constants: ``delta[i]`` maps
``(j, k)`` to the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``. Linear
maps are lists of sparse columns (``cols[i]`` is the image of ``e_i``).
"""

from __future__ import annotations

import itertools

from . import linalg
from .errors import FieldMismatch, Inconclusive, SimplicialError
from .linalg import Subspace, kernel_vectors
from .polys import Factorization, poly_factor, trim
from .simplicial import SimplicialSet, format_simplex, identity_surj

BRUTE_FORCE_LIMIT = 2**16


def _vadd(F, acc, key, c):
    v = F.add(acc.get(key, F.zero), c)
    if v == F.zero:
        acc.pop(key, None)
    else:
        acc[key] = v


class Coalgebra:
    """Finite-dimensional coalgebra over ``F`` with named basis.

    ``keys`` are hashable labels (simplices for chains coalgebras) and
    ``names`` their printable forms.
    """

    def __init__(self, F, keys, delta, counit, names=None, diagonal=None):
        self.F = F
        self.keys = list(keys)
        self.names = list(names) if names is not None else [str(k) for k in self.keys]
        self.delta = [{jk: c for jk, c in d.items() if c != F.zero} for d in delta]
        self.counit = list(counit)
        if diagonal is None:
            diagonal = all(d == {(i, i): F.one} for i, d in enumerate(self.delta)) and all(
                c == F.one for c in self.counit
            )
        self.diagonal = diagonal

    @property
    def dim(self):
        return len(self.keys)

    def index(self, key):
        if not hasattr(self, "_index"):
            self._index = {k: i for i, k in enumerate(self.keys)}
        return self._index[key]

    def apply_delta(self, v):
        F = self.F
        out = {}
        for i, vi in enumerate(v):
            if vi == F.zero:
                continue
            for jk, c in self.delta[i].items():
                _vadd(F, out, jk, F.mul(vi, c))
        return out

    def eps(self, v):
        F = self.F
        acc = F.zero
        for a, b in zip(v, self.counit):
            if a != F.zero and b != F.zero:
                acc = F.add(acc, F.mul(a, b))
        return acc

    def basis_vector(self, i):
        F = self.F
        v = [F.zero] * self.dim
        v[i] = F.one
        return v

    def is_grouplike(self, v):
        F = self.F
        if self.eps(v) != F.one:
            return False
        lhs = self.apply_delta(v)
        rhs = {}
        for j, a in enumerate(v):
            if a == F.zero:
                continue
            for k, b in enumerate(v):
                if b != F.zero:
                    _vadd(F, rhs, (j, k), F.mul(a, b))
        return lhs == rhs

    # -- axioms --------------------------------------------------------------
    def check(self):
        """Exact coassociativity, counit and cocommutativity; returns a list of failures."""
        F = self.F
        errs = []
        for i, d in enumerate(self.delta):
            if any((k, j) not in d or d[(k, j)] != c for (j, k), c in d.items()):
                errs.append(f"cocommutativity fails on {self.names[i]}")
            left, right = {}, {}
            for (j, k), c in d.items():
                for (a, b), c2 in self.delta[j].items():
                    _vadd(F, left, (a, b, k), F.mul(c, c2))
                for (a, b), c2 in self.delta[k].items():
                    _vadd(F, right, (j, a, b), F.mul(c, c2))
            if left != right:
                errs.append(f"coassociativity fails on {self.names[i]}")
            l1, r1 = {}, {}
            for (j, k), c in d.items():
                if self.counit[j] != F.zero:
                    _vadd(F, l1, k, F.mul(c, self.counit[j]))
                if self.counit[k] != F.zero:
                    _vadd(F, r1, j, F.mul(c, self.counit[k]))
            if l1 != {i: F.one} or r1 != {i: F.one}:
                errs.append(f"counit law fails on {self.names[i]}")
        return errs

    def keyed(self):
        """Basis-order-free description, for data-level comparison."""
        K = self.keys
        return {
            K[i]: (frozenset(((K[j], K[k]), c) for (j, k), c in d.items()), self.counit[i])
            for i, d in enumerate(self.delta)
        }

    def to_json(self):
        F = self.F
        return {
            "schema": 1,
            "field": F.to_json(),
            "basis": self.names,
            "delta": [[i, j, k, _jsonable(c)] for i, d in enumerate(self.delta) for (j, k), c in sorted(d.items())],
            "counit": [_jsonable(c) for c in self.counit],
        }

    @classmethod
    def from_json(cls, data, F):
        names = list(data["basis"])
        delta = [dict() for _ in names]
        for i, j, k, c in data["delta"]:
            delta[i][(j, k)] = linalg.raw(F, _from_jsonable(c))
        counit = [linalg.raw(F, _from_jsonable(c)) for c in data["counit"]]
        return cls(F, names, delta, counit, names)

    def __repr__(self):
        return f"<Coalgebra over {self.F.name} dim={self.dim}>"


def _jsonable(c):
    from fractions import Fraction

    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else c.numerator
    return c


def _from_jsonable(c):
    from fractions import Fraction

    return Fraction(c) if isinstance(c, str) else c


def diagonal_coalgebra(F, names):
    n = len(names)
    return Coalgebra(F, names, [{(i, i): F.one} for i in range(n)], [F.one] * n, names, diagonal=True)


# -- linear maps ----------------------------------------------------------------

class LinearMap:
    def __init__(self, source, target, cols):
        self.source = source
        self.target = target
        self.cols = [dict(c) for c in cols]

    def __call__(self, v):
        F = self.source.F
        out = [F.zero] * self.target.dim
        for i, a in enumerate(v):
            if a == F.zero:
                continue
            for j, c in self.cols[i].items():
                out[j] = F.add(out[j], F.mul(a, c))
        return out

    def compose(self, other):
        """``self o other``."""
        F = self.source.F
        cols = []
        for col in other.cols:
            acc = {}
            for j, a in col.items():
                for k, b in self.cols[j].items():
                    _vadd(F, acc, k, F.mul(a, b))
            cols.append(acc)
        return LinearMap(other.source, self.target, cols)

    def is_coalgebra_morphism(self):
        C, D = self.source, self.target
        F = C.F
        for i in range(C.dim):
            img = self.cols[i]
            lhs = {}
            for j, a in img.items():
                for jk, c in D.delta[j].items():
                    _vadd(F, lhs, jk, F.mul(a, c))
            rhs = {}
            for (j, k), c in C.delta[i].items():
                for a, x in self.cols[j].items():
                    for b, y in self.cols[k].items():
                        _vadd(F, rhs, (a, b), F.mul(c, F.mul(x, y)))
            if lhs != rhs:
                return False
            e = F.zero
            for j, a in img.items():
                e = F.add(e, F.mul(a, D.counit[j]))
            if e != C.counit[i]:
                return False
        return True

    def is_identity(self):
        return all(c == {i: self.source.F.one} for i, c in enumerate(self.cols))


def basis_map(C, D, index_map):
    """Linear map sending ``e_i`` to ``e_{index_map[i]}``."""
    F = C.F
    return LinearMap(C, D, [{index_map[i]: F.one} for i in range(C.dim)])


# -- simplicial coalgebras ---------------------------------------------------------

class SimplicialCoalgebra:
    """Degreewise coalgebras ``C[0..D]`` with face and degeneracy maps.

    ``faces[n][i]: C_n -> C_{n-1}`` (``n >= 1``) and
    ``degens[n][i]: C_n -> C_{n+1}`` (``n < D``).
    """

    def __init__(self, F, C, faces, degens, label=None):
        self.F = F
        self.C = list(C)
        self.faces = faces
        self.degens = degens
        self.label = label

    @property
    def dim_bound(self):
        return len(self.C) - 1

    def dims(self):
        return [c.dim for c in self.C]

    @property
    def connected(self):
        C0 = self.C[0]
        return C0.dim == 1 and C0.delta[0] == {(0, 0): self.F.one} and C0.counit[0] == self.F.one

    def coaugmentation(self, n):
        """Image of the degree-0 group-like under ``s_0^n``."""
        v = [self.F.one]
        for m in range(n):
            v = self.degens[m][0](v)
        return v

    def check(self):
        """All structural identities; returns a list of failures."""
        errs = []
        for n, c in enumerate(self.C):
            errs += [f"degree {n}: {e}" for e in c.check()]
        for n in range(1, len(self.C)):
            for i, m in enumerate(self.faces[n]):
                if not m.is_coalgebra_morphism():
                    errs.append(f"d{i} in degree {n} is not a coalgebra map")
        for n in range(len(self.C) - 1):
            for i, m in enumerate(self.degens[n]):
                if not m.is_coalgebra_morphism():
                    errs.append(f"s{i} in degree {n} is not a coalgebra map")
        errs += self._identities()
        return errs

    def _identities(self):
        errs = []
        D = self.dim_bound

        def eq(a, b):
            return a.cols == b.cols

        for n in range(2, D + 1):
            for j in range(1, n + 1):
                for i in range(j):
                    if not eq(self.faces[n - 1][i].compose(self.faces[n][j]), self.faces[n - 1][j - 1].compose(self.faces[n][i])):
                        errs.append(f"d{i}d{j} identity fails in degree {n}")
        for n in range(0, D - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if not eq(self.degens[n + 1][i].compose(self.degens[n][j]), self.degens[n + 1][j + 1].compose(self.degens[n][i])):
                        errs.append(f"s{i}s{j} identity fails in degree {n}")
        for n in range(0, D):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = self.faces[n + 1][i].compose(self.degens[n][j])
                    if i < j:
                        if n == 0:
                            continue
                        rhs = self.degens[n - 1][j - 1].compose(self.faces[n][i])
                    elif i in (j, j + 1):
                        if not lhs.is_identity():
                            errs.append(f"d{i}s{j} != id in degree {n}")
                        continue
                    else:
                        if n == 0:
                            continue
                        rhs = self.degens[n - 1][j].compose(self.faces[n][i - 1])
                    if not eq(lhs, rhs):
                        errs.append(f"d{i}s{j} identity fails in degree {n}")
        return errs

    def __repr__(self):
        return f"<SimplicialCoalgebra over {self.F.name} dims={self.dims()}>"


def chains(X, F, D=None):
    """``F[X]``: basis all simplices, diagonal coproduct, counit 1."""
    D = X.dim_bound if D is None else D
    if D > X.dim_bound:
        X = X.with_bound(D)
    degrees = []
    for n in range(D + 1):
        keys = X.simplices(n)
        degrees.append(Coalgebra(F, keys, [{(i, i): F.one} for i in range(len(keys))], [F.one] * len(keys),
                                 [format_simplex(k) for k in keys], diagonal=True))
    faces = [None]
    for n in range(1, D + 1):
        src, tgt = degrees[n], degrees[n - 1]
        faces.append([basis_map(src, tgt, [tgt.index(X.face(i, k)) for k in src.keys]) for i in range(n + 1)])
    degens = []
    for n in range(D):
        src, tgt = degrees[n], degrees[n + 1]
        degens.append([basis_map(src, tgt, [tgt.index(X.degeneracy(i, k)) for k in src.keys]) for i in range(n + 1)])
    out = SimplicialCoalgebra(F, degrees, faces, degens, label=f"F[{X.label or 'X'}]")
    out.space = X
    return out


def induced_chain_map(f, CX, CY):
    """Degreewise linear maps ``F[X] -> F[Y]`` induced by a simplicial map."""
    out = []
    for n in range(min(CX.dim_bound, CY.dim_bound) + 1):
        src, tgt = CX.C[n], CY.C[n]
        out.append(basis_map(src, tgt, [tgt.index(f(k)) for k in src.keys]))
    return out


# -- group-like elements -----------------------------------------------------------

class GroupLikes(list):
    """Group-like vectors found, with ``complete`` telling whether the list is exhaustive."""

    def __init__(self, vectors=(), complete=True, method=""):
        super().__init__(vectors)
        self.complete = complete
        self.method = method


def grouplikes(C, method="auto"):
    """All group-like elements of ``C`` over its base field.

    ``method`` is ``"auto"``, ``"diagonal"``, ``"brute"`` or ``"characters"``.
    Automatic selection uses the diagonal fast path when the basis is
    already group-like, exhaustive search for small finite fields, and
    otherwise characters of the dual algebra.
    """
    F = C.F
    if method == "auto":
        if C.diagonal:
            method = "diagonal"
        elif F.is_finite and F.order ** C.dim <= BRUTE_FORCE_LIMIT:
            method = "brute"
        else:
            method = "characters"
    if method == "diagonal":
        if not C.diagonal:
            raise ValueError("coalgebra basis is not group-like")
        return GroupLikes([C.basis_vector(i) for i in range(C.dim)], True, "diagonal")
    if method == "brute":
        return GroupLikes(_brute_grouplikes(C), True, "brute")
    if method == "characters":
        return _character_grouplikes(C)
    raise ValueError(f"unknown method {method!r}")


def _brute_grouplikes(C):
    F = C.F
    if not F.is_finite:
        raise TypeError("exhaustive search needs a finite field")
    if F.order ** C.dim > BRUTE_FORCE_LIMIT:
        raise Inconclusive(f"{F.order}^{C.dim} vectors exceed the exhaustive-search limit", cap="brute force")
    out = []
    for v in itertools.product(range(F.order), repeat=C.dim):
        v = list(v)
        if C.is_grouplike(v):
            out.append(v)
    return out


def _field_roots(F, f):
    f = trim(F, f)
    if len(f) <= 1:
        return []
    if F.kind == "rational":
        from .polys import _primitive_int, _rational_roots

        return [r for r in _rational_roots(_primitive_int(f))]
    fac: Factorization = poly_factor(F, f)
    return sorted(set(fac.roots(F)))


def _min_poly_on(F, op, basis, n):
    """Minimal polynomial of ``op`` restricted to the span of ``basis``."""
    from .polys import lcm

    result = (F.one,)
    for v in basis:
        seq = [list(v)]
        while True:
            mat = [[seq[t][i] for t in range(len(seq))] for i in range(n)]
            ker = kernel_vectors(F, mat, len(seq))
            if ker:
                result = lcm(F, result, trim(F, ker[0]))
                break
            seq.append(op(seq[-1]))
    return result


def _character_grouplikes(C):
    F = C.F
    n = C.dim
    if n == 0:
        return GroupLikes([], True, "characters")

    def T(j):
        def op(x):
            out = [F.zero] * n
            for i, xi in enumerate(x):
                if xi == F.zero:
                    continue
                for (jj, k), c in C.delta[i].items():
                    if jj == j:
                        out[k] = F.add(out[k], F.mul(c, xi))
            return out

        return op

    pieces = [([C.basis_vector(i) for i in range(n)], [])]
    for j in range(n):
        op = T(j)
        nxt = []
        for basis, eig in pieces:
            mp = _min_poly_on(F, op, basis, n)
            for mu in _field_roots(F, mp):
                cols = [[F.sub(a, F.mul(mu, b)) for a, b in zip(op(w), w)] for w in basis]
                mat = [[cols[t][i] for t in range(len(basis))] for i in range(n)]
                ker = kernel_vectors(F, mat, len(basis))
                if not ker:
                    continue
                sub = []
                for coeffs in ker:
                    v = [F.zero] * n
                    for a, w in zip(coeffs, basis):
                        if a != F.zero:
                            v = [F.add(x, F.mul(a, y)) for x, y in zip(v, w)]
                    sub.append(v)
                nxt.append((sub, eig + [mu]))
        pieces = nxt
        if not pieces:
            break
    out = []
    for _, eig in pieces:
        if len(eig) == n and C.is_grouplike(eig) and eig not in out:
            out.append(list(eig))
    out.sort()
    return GroupLikes(out, True, "characters")


def vector_name(C, v):
    F = C.F
    support = [(i, c) for i, c in enumerate(v) if c != F.zero]
    if len(support) == 1 and support[0][1] == F.one:
        return C.names[support[0][0]]
    parts = []
    for i, c in support:
        parts.append(C.names[i] if c == F.one else f"{F.format(c)}*{C.names[i]}")
    return "+".join(parts) if parts else "0"


# -- the points functor ------------------------------------------------------------

def points(SC, method="auto"):
    """``P(C)``: group-likes in each degree, with induced operators.

    The result may fail to be reduced (e.g. no group-likes in degree 0);
    ``result.flags`` lists such problems and ``result.vectors[n]`` records
    the group-like behind every simplex.
    """
    D = SC.dim_bound
    glike = []
    for n in range(D + 1):
        gl = grouplikes(SC.C[n], method)
        if not gl.complete:
            raise Inconclusive(f"group-like search incomplete in degree {n}", cap="group-like search")
        glike.append([tuple(v) for v in gl])
    canon = []
    nondeg, faces = {}, {}
    used = set()
    for n in range(D + 1):
        table = {}
        for v in glike[n]:
            hit = None
            if n > 0:
                for i in range(n):
                    for w in glike[n - 1]:
                        if tuple(SC.degens[n - 1][i](list(w))) == v:
                            eta_w, z = canon[n - 1][w]
                            sig = tuple(j if j <= i else j - 1 for j in range(n + 1))
                            hit = (tuple(eta_w[s] for s in sig), z)
                            break
                    if hit:
                        break
            if hit is None:
                name = vector_name(SC.C[n], list(v))
                while name in used:
                    name += "'"
                used.add(name)
                nondeg.setdefault(n, []).append(name)
                hit = (identity_surj(n), name)
                if n > 0:
                    fs = []
                    for i in range(n + 1):
                        img = tuple(SC.faces[n][i](list(v)))
                        if img not in canon[n - 1]:
                            raise SimplicialError("face of a group-like is not group-like")
                        fs.append(canon[n - 1][img])
                    faces[name] = fs
            table[v] = hit
        canon.append(table)
    X = SimplicialSet(nondeg, faces, D, f"P({SC.label or 'C'})")
    X.vectors = [{s: v for v, s in canon[n].items()} for n in range(D + 1)]
    X.flags = []
    if X.count(0) != 1:
        X.flags.append(f"not reduced: {X.count(0)} group-likes in degree 0")
    return X


def unit_map(X, SC=None, F=None):
    """``X -> P(F[X])``, sending a simplex to its basis vector."""
    from .simplicial import SimplicialMap

    SC = SC or chains(X, F)
    P = points(SC)
    images = {}
    for x in X.names():
        key = X.nd(x)
        idx = SC.C[X.dim[x]].index(key)
        vec = tuple(SC.C[X.dim[x]].basis_vector(idx))
        images[x] = _canon_lookup(P, X.dim[x], vec)
    return SimplicialMap(X, P, images), P


def _canon_lookup(P, n, vec):
    for s, v in P.vectors[n].items():
        if v == vec:
            return s
    raise SimplicialError("basis vector is not a group-like")


def unit_check(X, F):
    """The unit is a degreewise bijection commuting with every operator."""
    SC = chains(X, F)
    eta, P = unit_map(X, SC)
    v = eta.validate()
    if not v.ok:
        return False, f"unit is not simplicial: {v.message}"
    for n in range(X.dim_bound + 1):
        imgs = {eta(s) for s in X.simplices(n)}
        if len(imgs) != len(X.simplices(n)) or len(imgs) != len(P.simplices(n)):
            return False, f"unit is not bijective in degree {n}"
        for s in X.simplices(n):
            for i in range(n + 1):
                if n < X.dim_bound and eta(X.degeneracy(i, s)) != P.degeneracy(i, eta(s)):
                    return False, f"unit does not commute with s{i} in degree {n}"
    return True, "ok"


# -- subcoalgebras and fixed points -------------------------------------------------

def largest_subcoalgebra(C, W):
    """Largest subcoalgebra contained in ``span(W)``.

    Returns ``(D, basis)``: the subcoalgebra with its own basis, and that
    basis as vectors of ``C`` (in reduced echelon form).
    """
    F = C.F
    n = C.dim
    V = Subspace(F, n, [list(w) for w in W])
    while True:
        basis = V.basis()
        if not basis:
            break
        ann = kernel_vectors(F, basis, n) if len(basis) < n else []
        if not ann:
            break
        rows = []
        for f in ann:
            # (f (x) id) Delta and (id (x) f) Delta, as functionals of v
            for side in (0, 1):
                per_k = [dict() for _ in range(n)]
                for i in range(n):
                    for (j, k), c in C.delta[i].items():
                        a, b = (j, k) if side == 0 else (k, j)
                        if f[a] != F.zero:
                            _vadd(F, per_k[b], i, F.mul(f[a], c))
                for k in range(n):
                    if per_k[k]:
                        rows.append([sum_row(F, per_k[k], w) for w in basis])
        ker = kernel_vectors(F, rows, len(basis)) if rows else [[F.one if s == t else F.zero for s in range(len(basis))] for t in range(len(basis))]
        if len(ker) == len(basis):
            break
        vecs = []
        for coeffs in ker:
            v = [F.zero] * n
            for a, w in zip(coeffs, basis):
                if a != F.zero:
                    v = [F.add(x, F.mul(a, y)) for x, y in zip(v, w)]
            vecs.append(v)
        V = Subspace(F, n, vecs)
    return restrict_coalgebra(C, V), V


def sum_row(F, coeffs, w):
    acc = F.zero
    for i, c in coeffs.items():
        if w[i] != F.zero:
            acc = F.add(acc, F.mul(c, w[i]))
    return acc


def restrict_coalgebra(C, V):
    """The coalgebra structure on a subcoalgebra ``V`` (a :class:`Subspace`)."""
    F = C.F
    piv = V.pivots
    pos = {p: t for t, p in enumerate(piv)}
    basis = V.basis()
    delta, counit, keys, names = [], [], [], []
    for t, b in enumerate(basis):
        d = C.apply_delta(b)
        sub = {}
        for (j, k), c in d.items():
            if j in pos and k in pos:
                sub[(pos[j], pos[k])] = c
        # membership in V (x) V
        recon = {}
        for (u, w), c in sub.items():
            for a, x in enumerate(basis[u]):
                if x == F.zero:
                    continue
                for bb, y in enumerate(basis[w]):
                    if y != F.zero:
                        _vadd(F, recon, (a, bb), F.mul(c, F.mul(x, y)))
        if recon != d:
            raise ValueError("subspace is not a subcoalgebra")
        delta.append(sub)
        counit.append(C.eps(b))
        keys.append(tuple(b))
        names.append(vector_name(C, b))
    out = Coalgebra(F, keys, delta, counit, names)
    out.ambient = C
    out.embedding = basis
    return out


def restrict_map(m, src_sub, tgt_sub):
    """Restrict a linear map between coalgebras to subcoalgebras (asserting it lands)."""
    F = m.source.F
    tpos = {p: t for t, p in enumerate(tgt_sub.pivots)}
    cols = []
    tgt_space = tgt_sub
    for b in src_sub.basis():
        img = m(b)
        if not tgt_space.contains(img):
            raise ValueError("operator does not preserve the subcoalgebras")
        cols.append({tpos[p]: img[p] for p in tgt_sub.pivots if img[p] != F.zero})
    return cols


class GSimplicialCoalgebra:
    """A simplicial coalgebra with ``action[g][n]`` a coalgebra automorphism of ``C_n``."""

    def __init__(self, G, SC, action):
        self.G = G
        self.SC = SC
        self.action = action

    def check(self):
        errs = []
        G = self.G
        for g in range(G.order):
            for n, m in enumerate(self.action[g]):
                if not m.is_coalgebra_morphism():
                    errs.append(f"{G.elements[g]} is not a coalgebra map in degree {n}")
        for g in range(G.order):
            for h in range(G.order):
                gh = G.mul(g, h)
                for n in range(len(self.SC.C)):
                    if self.action[g][n].compose(self.action[h][n]).cols != self.action[gh][n].cols:
                        errs.append("action is not a homomorphism")
        for g in range(G.order):
            for n in range(1, len(self.SC.C)):
                for i, d in enumerate(self.SC.faces[n]):
                    if d.compose(self.action[g][n]).cols != self.action[g][n - 1].compose(d).cols:
                        errs.append(f"action does not commute with d{i}")
        return errs


def chains_equivariant(Y, F, D=None):
    """``F_G[Y]``: chains of the underlying set with the linearised action."""
    SC = chains(Y.X, F, D)
    action = []
    for g in range(Y.G.order):
        per = []
        for C in SC.C:
            per.append(basis_map(C, C, [C.index((k[0], Y.action[g][k[1]])) for k in C.keys]))
        action.append(per)
    return GSimplicialCoalgebra(Y.G, SC, action)


def trivial_coalgebra_action(G, SC):
    return GSimplicialCoalgebra(G, SC, [[basis_map(C, C, list(range(C.dim))) for C in SC.C] for _ in range(G.order)])


def invariants(F, maps, n):
    """Common fixed vectors of a list of linear maps on ``F^n``."""
    rows = []
    for m in maps:
        for r in range(n):
            row = [F.zero] * n
            for i in range(n):
                c = m.cols[i].get(r, F.zero)
                row[i] = c
            row[r] = F.sub(row[r], F.one)
            if any(x != F.zero for x in row):
                rows.append(row)
    if not rows:
        return [[F.one if i == j else F.zero for i in range(n)] for j in range(n)]
    return kernel_vectors(F, rows, n)


def coalg_fixed_points(GC, H):
    """Degreewise largest subcoalgebra inside the ``H``-invariant vectors."""
    SC = GC.SC
    F = SC.F
    H = sorted(H.elements if hasattr(H, "elements") else H)
    subs, coalgs = [], []
    for n, C in enumerate(SC.C):
        inv = invariants(F, [GC.action[h][n] for h in H], C.dim)
        D, V = largest_subcoalgebra(C, inv)
        subs.append(V)
        coalgs.append(D)
    faces = [None]
    for n in range(1, len(coalgs)):
        faces.append([LinearMap(coalgs[n], coalgs[n - 1], restrict_map(d, subs[n], subs[n - 1])) for d in SC.faces[n]])
    degens = []
    for n in range(len(coalgs) - 1):
        degens.append([LinearMap(coalgs[n], coalgs[n + 1], restrict_map(s, subs[n], subs[n + 1])) for s in SC.degens[n]])
    out = SimplicialCoalgebra(F, coalgs, faces, degens, label=f"{SC.label}^H")
    out.subspaces = subs
    return out


def is_split(C):
    """Whether the group-likes of ``C`` form a basis (so ``C`` is a chains coalgebra on them)."""
    gl = grouplikes(C)
    return gl.complete and len(gl) == C.dim and linalg.rank(C.F, [list(v) for v in gl], C.dim) == C.dim


# -- wedge sums ---------------------------------------------------------------------

def _relabel_key(key, label, base_key):
    if key == base_key:
        return key
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[1], str):
        eta, name = key
        return (eta, f"{label}|{name}")
    return (label, key)


def wedge_sum(parts, labels=None):
    """Coproduct of connected simplicial coalgebras.

    Degreewise direct sum with all coaugmentation lines identified. Each
    coaugmentation element must be a basis vector (true for chains and for
    wedge sums of them). Basis keys of summand ``i`` are relabelled with
    ``labels[i]`` the same way the simplicial wedge renames simplices, so
    ``wedge_sum`` of chains coincides with chains of the wedge.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("empty wedge sum")
    F = parts[0].F
    for P in parts:
        if P.F != F:
            raise FieldMismatch("wedge summands over different fields")
        if not P.connected:
            raise ValueError("wedge summands must be connected")
    labels = labels or [str(i) for i in range(len(parts))]
    D = min(P.dim_bound for P in parts)
    degrees, maps_in = [], []
    for n in range(D + 1):
        keys, names, delta, counit = [], [], [], []
        base_idx = None
        where = []
        for lab, P in zip(labels, parts):
            C = P.C[n]
            u = P.coaugmentation(n)
            support = [i for i, c in enumerate(u) if c != F.zero]
            if len(support) != 1 or u[support[0]] != F.one:
                raise ValueError("coaugmentation is not a basis vector")
            b = support[0]
            idx = []
            for i in range(C.dim):
                if i == b and base_idx is not None:
                    idx.append(base_idx)
                    continue
                idx.append(len(keys))
                if i == b:
                    base_idx = len(keys)
                    keys.append(C.keys[i])
                    names.append(C.names[i])
                else:
                    keys.append(_relabel_key(C.keys[i], lab, None))
                    names.append(format_simplex(keys[-1]) if _is_simplex_key(C.keys[i]) else f"{lab}|{C.names[i]}")
                delta.append(None)
                counit.append(None)
            for i in range(C.dim):
                t = idx[i]
                if delta[t] is None:
                    delta[t] = {(idx[j], idx[k]): c for (j, k), c in C.delta[i].items()}
                    counit[t] = C.counit[i]
            where.append(idx)
        degrees.append(Coalgebra(F, keys, delta, counit, names))
        maps_in.append(where)
    faces = [None]
    for n in range(1, D + 1):
        per = []
        for i in range(n + 1):
            cols = [None] * degrees[n].dim
            for P, src_idx, tgt_idx in zip(parts, maps_in[n], maps_in[n - 1]):
                for a, col in enumerate(P.faces[n][i].cols):
                    cols[src_idx[a]] = {tgt_idx[j]: c for j, c in col.items()}
            per.append(LinearMap(degrees[n], degrees[n - 1], cols))
        faces.append(per)
    degens = []
    for n in range(D):
        per = []
        for i in range(n + 1):
            cols = [None] * degrees[n].dim
            for P, src_idx, tgt_idx in zip(parts, maps_in[n], maps_in[n + 1]):
                for a, col in enumerate(P.degens[n][i].cols):
                    cols[src_idx[a]] = {tgt_idx[j]: c for j, c in col.items()}
            per.append(LinearMap(degrees[n], degrees[n + 1], cols))
        degens.append(per)
    out = SimplicialCoalgebra(F, degrees, faces, degens, label="wedge_sum")
    out.summand_index = maps_in
    return out


def _is_simplex_key(k):
    return isinstance(k, tuple) and len(k) == 2 and isinstance(k[1], str) and isinstance(k[0], tuple)


def indexed_wedge_sum(S, SC):
    """``G/H``-indexed wedge sum of ``SC`` with ``G`` permuting the summands."""
    W = wedge_sum([SC] * len(S), labels=list(S.points))
    action = []
    for g in range(S.G.order):
        per = []
        for n, C in enumerate(W.C):
            idx = [None] * C.dim
            for i, src in enumerate(W.summand_index[n]):
                j = S.act[g][i]
                for a, t in enumerate(src):
                    idx[t] = W.summand_index[n][j][a]
            per.append(basis_map(C, C, idx))
        action.append(per)
    return GSimplicialCoalgebra(S.G, W, action)


def same_data(A, B):
    """Data-level equality of simplicial coalgebras up to basis order (by keys)."""
    if A.F != B.F or len(A.C) != len(B.C):
        return False
    for n in range(len(A.C)):
        if A.C[n].keyed() != B.C[n].keyed():
            return False
        if n:
            for a, b in zip(A.faces[n], B.faces[n]):
                if _keyed_map(a) != _keyed_map(b):
                    return False
        if n < len(A.C) - 1:
            for a, b in zip(A.degens[n], B.degens[n]):
                if _keyed_map(a) != _keyed_map(b):
                    return False
    return True


def _keyed_map(m):
    S, T = m.source.keys, m.target.keys
    return {S[i]: frozenset((T[j], c) for j, c in col.items()) for i, col in enumerate(m.cols)}


def same_action(A, B):
    """Data-level equality of two G-simplicial coalgebras (by basis keys)."""
    if not same_data(A.SC, B.SC) or A.G != B.G:
        return False
    for g in range(A.G.order):
        for a, b in zip(A.action[g], B.action[g]):
            if _keyed_map(a) != _keyed_map(b):
                return False
    return True
