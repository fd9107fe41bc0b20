"""Normalized chains, homology and the truncated cobar construction.

Normalized chains are the quotient of ``C_n`` by the span of degenerate
images; a quotient basis is read off from the non-pivot columns of that
span in reduced echelon form. Coproducts use the Alexander-Whitney
front/back faces.

Cobar words are tuples of generator indices. The complex keeps words of
degree ``<= N`` and length ``<= L``; dropping longer words is a quotient by
an ideal that the differential preserves, and dropping higher degrees is a
truncation, so ``d^2 = 0`` survives and ``H_n`` is exact for ``n <= N - 1``
relative to the length cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coalgebra import _vadd, chains
from .errors import CapExceeded, Inconclusive
from .linalg import Subspace, kernel_vectors, rank
from .presentation import Presentation


class DgCoalgebra:
    """Connected dg coalgebra in degrees ``0..D``.

    ``d[n]`` holds sparse columns ``N_n -> N_{n-1}``; ``delta[n][(p, q)]``
    holds, per basis element of ``N_n``, the dict ``{(a, b): c}`` of its
    ``N_p (x) N_q`` component.
    """

    def __init__(self, F, names, d, delta, label=None):
        self.F = F
        self.names = names
        self.d = d
        self.delta = delta
        self.label = label

    @property
    def dim_bound(self):
        return len(self.names) - 1

    def dims(self):
        return [len(b) for b in self.names]

    def boundary_rows(self, n):
        """Matrix of ``d_n`` as rows indexed by ``N_{n-1}``."""
        rows = [dict() for _ in self.names[n - 1]]
        for i, col in enumerate(self.d[n]):
            for j, c in col.items():
                rows[j][i] = c
        return rows

    def check(self):
        """``d^2 = 0``, coassociativity and the Leibniz rule for the coproduct."""
        F = self.F
        errs = []
        for n in range(2, self.dim_bound + 1):
            for i, col in enumerate(self.d[n]):
                acc = {}
                for j, c in col.items():
                    for k, c2 in self.d[n - 1][j].items():
                        _vadd(F, acc, k, F.mul(c, c2))
                if acc:
                    errs.append(f"d^2 != 0 on {self.names[n][i]}")
        for n in range(self.dim_bound + 1):
            for i in range(len(self.names[n])):
                left, right = {}, {}
                for p in range(n + 1):
                    q = n - p
                    for (a, b), c in self.delta[n][(p, q)][i].items():
                        for r in range(p + 1):
                            for (x, y), c2 in self.delta[p][(r, p - r)][a].items():
                                _vadd(F, left, (r, x, y, b), F.mul(c, c2))
                        for r in range(q + 1):
                            for (x, y), c2 in self.delta[q][(r, q - r)][b].items():
                                _vadd(F, right, (p, a, x, y), F.mul(c, c2))
                if left != right:
                    errs.append(f"coassociativity fails on {self.names[n][i]}")
        for n in range(1, self.dim_bound + 1):
            for i in range(len(self.names[n])):
                lhs = {}
                for j, c in self.d[n][i].items():
                    for p in range(n):
                        for (a, b), c2 in self.delta[n - 1][(p, n - 1 - p)][j].items():
                            _vadd(F, lhs, (p, a, b), F.mul(c, c2))
                rhs = {}
                for p in range(n + 1):
                    q = n - p
                    for (a, b), c in self.delta[n][(p, q)][i].items():
                        if p >= 1:
                            for x, c2 in self.d[p][a].items():
                                _vadd(F, rhs, (p - 1, x, b), F.mul(c, c2))
                        if q >= 1:
                            sign = F.one if p % 2 == 0 else F.neg(F.one)
                            for y, c2 in self.d[q][b].items():
                                _vadd(F, rhs, (p, a, y), F.mul(sign, F.mul(c, c2)))
                if lhs != rhs:
                    errs.append(f"coproduct is not a chain map on {self.names[n][i]}")
        return errs


def _front(SC, n, p):
    """Columns of the front-face map ``d_{p+1} ... d_n : C_n -> C_p``."""
    m = None
    for k in range(n, p, -1):
        f = SC.faces[k][k]
        m = f if m is None else f.compose(m)
    return m


def _back(SC, n, p):
    """Columns of ``d_0^p : C_n -> C_{n-p}``."""
    m = None
    for k in range(n, n - p, -1):
        f = SC.faces[k][0]
        m = f if m is None else f.compose(m)
    return m


def normalized_chains(SC):
    """``N_*(C)`` with the alternating-face differential and Alexander-Whitney coproduct."""
    F = SC.F
    D = SC.dim_bound
    quot = []
    names = []
    for n, C in enumerate(SC.C):
        if n == 0:
            deg = Subspace(F, C.dim, [])
        else:
            vecs = []
            for s in SC.degens[n - 1]:
                for col in s.cols:
                    v = [F.zero] * C.dim
                    for j, c in col.items():
                        v[j] = c
                    vecs.append(v)
            deg = Subspace(F, C.dim, vecs)
        keep = deg.complement_indices()
        quot.append((deg, keep, {c: t for t, c in enumerate(keep)}))
        names.append([C.names[c] for c in keep])

    def project(n, vec):
        deg, keep, pos = quot[n]
        r = deg.reduce(vec)
        return {pos[c]: r[c] for c in keep if r[c] != F.zero}

    def project_col(n, col):
        C = SC.C[n]
        v = [F.zero] * C.dim
        for j, c in col.items():
            v[j] = c
        return project(n, v)

    d = [[]]
    for n in range(1, D + 1):
        cols = []
        for c in quot[n][1]:
            acc = {}
            for i, face in enumerate(SC.faces[n]):
                sign = F.one if i % 2 == 0 else F.neg(F.one)
                for j, x in face.cols[c].items():
                    _vadd(F, acc, j, F.mul(sign, x))
            cols.append(project_col(n - 1, acc))
        d.append(cols)

    delta = []
    for n in range(D + 1):
        C = SC.C[n]
        per = {}
        fronts = {p: _front(SC, n, p) for p in range(n + 1)}
        backs = {q: _back(SC, n, n - q) for q in range(n + 1)}
        for p in range(n + 1):
            q = n - p
            comps = []
            for c in quot[n][1]:
                acc = {}
                for (j, k), coef in C.delta[c].items():
                    fj = project_col(p, fronts[p].cols[j]) if fronts[p] is not None else project_col(p, {j: F.one})
                    bk = project_col(q, backs[q].cols[k]) if backs[q] is not None else project_col(q, {k: F.one})
                    for a, x in fj.items():
                        for b, y in bk.items():
                            _vadd(F, acc, (a, b), F.mul(coef, F.mul(x, y)))
                comps.append(acc)
            per[(p, q)] = comps
        delta.append(per)
    out = DgCoalgebra(F, names, d, delta, label=f"N({SC.label or 'C'})")
    out.source = SC
    out.quotient = quot
    return out


def normalized(X, F, D=None):
    """``N_*(F[X])`` straight from a simplicial set."""
    return normalized_chains(chains(X, F, D))


# -- homology ------------------------------------------------------------------

@dataclass
class HomologyGroup:
    degree: int
    dim: int
    representatives: list = field(default_factory=list)


def _complex_homology(F, dims, rows_of, n):
    """Homology at ``n`` of a complex whose ``d_k`` rows are ``rows_of(k)``."""
    if dims[n] == 0:
        return 0, []
    if n == 0:
        ker = [[F.one if i == j else F.zero for i in range(dims[0])] for j in range(dims[0])]
    else:
        ker = kernel_vectors(F, rows_of(n), dims[n])
    if n + 1 < len(dims) and dims[n + 1]:
        rows = rows_of(n + 1)
        image_cols = [[rows[r].get(c, F.zero) for r in range(dims[n])] for c in range(dims[n + 1])]
        im = Subspace(F, dims[n], image_cols)
    else:
        im = Subspace(F, dims[n], [])
    reps = []
    span = Subspace(F, dims[n], im.basis())
    for v in ker:
        if not span.contains(v):
            reps.append(v)
            span = Subspace(F, dims[n], span.basis() + [v])
    return len(ker) - len(im), reps


def homology(dg, n):
    """``H_n`` of normalized chains: ``dim ker d_n - rank d_{n+1}`` with representatives."""
    if n + 1 > dg.dim_bound:
        raise CapExceeded(f"H_{n} needs chains through degree {n + 1}; bound is {dg.dim_bound}")
    dims = dg.dims()
    dim, reps = _complex_homology(dg.F, dims, dg.boundary_rows, n)
    return HomologyGroup(n, dim, reps)


def homology_dims(X, F, top=None):
    """``[dim H_0, ..., dim H_top]`` of ``N_*(F[X])`` (``top`` defaults to ``X``'s top dimension)."""
    top = X.top_dim if top is None else top
    dg = normalized(X, F, max(top + 1, X.dim_bound))
    return [homology(dg, n).dim for n in range(top + 1)]


def chain_map_on_normalized(f, dgX, dgY):
    """Matrices (as row dicts over ``N_n(Y)``) of the map induced by a simplicial map."""
    F = dgX.F
    SX, SY = dgX.source, dgY.source
    out = []
    for n in range(min(dgX.dim_bound, dgY.dim_bound) + 1):
        _, keepX, _ = dgX.quotient[n]
        deg, keepY, pos = dgY.quotient[n]
        cols = []
        for c in keepX:
            key = SX.C[n].keys[c]
            j = SY.C[n].index(f(key))
            v = [F.zero] * SY.C[n].dim
            v[j] = F.one
            r = deg.reduce(v)
            cols.append({pos[k]: r[k] for k in keepY if r[k] != F.zero})
        out.append(cols)
    return out


def induced_homology_map(f, dgX, dgY, n):
    """Rank data of ``H_n(f)``: returns ``(dim H_n X, dim H_n Y, rank of H_n(f))``."""
    F = dgX.F
    hx, hy = homology(dgX, n), homology(dgY, n)
    cols = chain_map_on_normalized(f, dgX, dgY)[n]
    dimY = len(dgY.names[n])
    images = []
    for rep in hx.representatives:
        v = [F.zero] * dimY
        for i, a in enumerate(rep):
            if a == F.zero:
                continue
            for j, c in cols[i].items():
                v[j] = F.add(v[j], F.mul(a, c))
        images.append(v)
    if n + 1 <= dgY.dim_bound and len(dgY.names[n + 1]):
        rows = dgY.boundary_rows(n + 1)
        bnd = [[rows[r].get(c, F.zero) for r in range(dimY)] for c in range(len(dgY.names[n + 1]))]
    else:
        bnd = []
    r_all = rank(F, bnd + images, dimY) if (bnd or images) else 0
    r_bnd = rank(F, bnd, dimY) if bnd else 0
    return hx.dim, hy.dim, r_all - r_bnd


# -- cobar ----------------------------------------------------------------------------

class FreeDgAlgebraTruncated:
    """Truncated cobar construction on a connected dg coalgebra.

    ``gens[t] = (k, i)``: the desuspension of basis element ``i`` of ``N_k``,
    living in degree ``k - 1``.
    """

    def __init__(self, dg, N, L):
        self.dg = dg
        self.F = dg.F
        if dg.dim_bound < N + 1:
            raise CapExceeded(f"cobar degree cap {N} needs chains through degree {N + 1}; bound is {dg.dim_bound}")
        self.N = N
        self.gens = [(k, i) for k in range(1, N + 2) for i in range(len(dg.names[k]))]
        self.gen_names = [f"s^-1[{dg.names[k][i]}]" for k, i in self.gens]
        self.gdeg = [k - 1 for k, _ in self.gens]
        self.has_degree_zero = any(g == 0 for g in self.gdeg)
        self.requested_L = L
        self.L = L if self.has_degree_zero else max(L, N)
        self.exact = not self.has_degree_zero
        self._index = {g: t for t, g in enumerate(self.gens)}
        self._dgen = [self._gen_differential(t) for t in range(len(self.gens))]
        self._words = {}

    def _gen_differential(self, t):
        F = self.F
        dg = self.dg
        k, i = self.gens[t]
        out = {}
        for j, c in dg.d[k][i].items():
            if k - 1 >= 1:
                _vadd(F, out, (self._index[(k - 1, j)],), F.neg(c))
        for p in range(1, k):
            q = k - p
            sign = F.one if p % 2 == 0 else F.neg(F.one)
            for (a, b), c in dg.delta[k][(p, q)][i].items():
                _vadd(F, out, (self._index[(p, a)], self._index[(q, b)]), F.mul(sign, c))
        return out

    def words(self, n):
        """Retained words of degree ``n`` in a fixed order."""
        if n in self._words:
            return self._words[n]
        out = []

        def grow(prefix, remaining):
            if remaining == 0:
                out.append(tuple(prefix))
            if len(prefix) >= self.L:
                return
            for t, dgt in enumerate(self.gdeg):
                if dgt <= remaining:
                    prefix.append(t)
                    grow(prefix, remaining - dgt)
                    prefix.pop()

        if n >= 0:
            grow([], n)
        out = sorted(set(out), key=lambda w: (len(w), w))
        self._words[n] = out
        return out

    def differential(self, word):
        F = self.F
        out = {}
        sdeg = 0
        for pos, t in enumerate(word):
            sign = F.one if sdeg % 2 == 0 else F.neg(F.one)
            for w, c in self._dgen[t].items():
                new = word[:pos] + w + word[pos + 1:]
                if len(new) <= self.L:
                    _vadd(F, out, new, F.mul(sign, c))
            sdeg += self.gdeg[t]
        return out

    def boundary_rows(self, n):
        src = self.words(n)
        tgt = self.words(n - 1)
        idx = {w: i for i, w in enumerate(tgt)}
        rows = [dict() for _ in tgt]
        for i, w in enumerate(src):
            for w2, c in self.differential(w).items():
                rows[idx[w2]][i] = c
        return rows

    def check_d2(self):
        """``d^2 = 0`` on every retained word of degree ``<= N``; returns failures."""
        F = self.F
        errs = []
        for n in range(1, self.N + 1):
            for w in self.words(n):
                acc = {}
                for w2, c in self.differential(w).items():
                    for w3, c2 in self.differential(w2).items():
                        _vadd(F, acc, w3, F.mul(c, c2))
                if acc:
                    errs.append(f"d^2 != 0 on {self.format_word(w)}")
        return errs

    def homology_dim(self, n):
        if n > self.N - 1:
            raise CapExceeded(f"H_{n} needs cobar degree cap >= {n + 1}")
        dims = {m: len(self.words(m)) for m in range(0, n + 2)}
        return _complex_homology(self.F, [dims[m] for m in range(n + 2)], self.boundary_rows, n)[0]

    def homology_dims(self):
        return [self.homology_dim(n) for n in range(self.N)]

    def format_word(self, w):
        return " ".join(self.gen_names[t] for t in w) if w else "1"

    def caps(self):
        return {
            "degree_cap": self.N,
            "length_cap": self.L,
            "requested_length_cap": self.requested_L,
            "regime": "simply-connected" if self.exact else "length-relative",
        }


def cobar(dg, N, L):
    return FreeDgAlgebraTruncated(dg, N, L)


# -- H0 presentations ---------------------------------------------------------------------

def _edge_word(X, face):
    eta, y = face
    if X.dim[y] == 0:
        return ()
    return (y,)


def h0_presentation(X):
    """Generators: nondegenerate edges. One relation ``d1 = d2 . d0`` per nondegenerate 2-simplex."""
    if hasattr(X, "source") and hasattr(X.source, "space"):
        X = X.source.space
    if not X.reduced:
        raise ValueError("H0 presentation needs a reduced simplicial set")
    gens = list(X.nondeg.get(1, []))
    rels = []
    for s in X.nondeg.get(2, []):
        d0, d1, d2 = X.faces[s]
        rel = (_edge_word(X, d1), _edge_word(X, d2) + _edge_word(X, d0))
        if rel[0] != rel[1]:
            rels.append(rel)
    return Presentation(gens, rels, chains_type=True)


def marked_elements(P):
    """Monoid-like generator classes: every generator of a chains-type presentation."""
    if not P.chains_type:
        raise Inconclusive("monoid-like detection is only available for chains-type presentations", cap="marking")
    return list(P.generators)


def localize_h0(P, marks=None):
    """Adjoin a formal inverse for every mark."""
    marks = marked_elements(P) if marks is None else list(marks)
    return P.localize(marks)


def h0_cobar_relation(cb, sigma_index):
    """Degree-0 image of ``d(s^-1 sigma)`` for a basis element of ``N_2``, as ``{word names: coef}``."""
    t = cb._index[(2, sigma_index)]
    out = {}
    for w, c in cb._dgen[t].items():
        out[tuple(cb.dg.names[cb.gens[g][0]][cb.gens[g][1]] for g in w)] = c
    return out


def words_up_to(letters, n):
    for k in range(n + 1):
        yield from itertools.product(letters, repeat=k)


def induced_cobar_homology(f, cbX, cbY, n):
    """``(dim H_n(Omega X), dim H_n(Omega Y), rank of the induced map)`` for a simplicial map."""
    F = cbX.F
    cmap = chain_map_on_normalized(f, cbX.dg, cbY.dg)
    gen_img = []
    for k, i in cbX.gens:
        gen_img.append({(cbY._index[(k, j)],): c for j, c in cmap[k][i].items()})
    src, tgt = cbX.words(n), cbY.words(n)
    tidx = {w: t for t, w in enumerate(tgt)}
    dimsX = [len(cbX.words(m)) for m in range(n + 2)]
    hx, reps = _complex_homology(F, dimsX, cbX.boundary_rows, n)
    dimsY = [len(cbY.words(m)) for m in range(n + 2)]
    hy, _ = _complex_homology(F, dimsY, cbY.boundary_rows, n)

    def word_image(w):
        acc = {(): F.one}
        for t in w:
            nxt = {}
            for u, c in acc.items():
                for v, c2 in gen_img[t].items():
                    _vadd(F, nxt, u + v, F.mul(c, c2))
            acc = nxt
        return acc

    images = []
    for rep in reps:
        v = [F.zero] * len(tgt)
        for a, w in zip(rep, src):
            if a == F.zero:
                continue
            for u, c in word_image(w).items():
                if u in tidx:
                    v[tidx[u]] = F.add(v[tidx[u]], F.mul(a, c))
        images.append(v)
    if dimsY[n + 1]:
        rows = cbY.boundary_rows(n + 1)
        bnd = [[rows[r].get(c, F.zero) for r in range(len(tgt))] for c in range(dimsY[n + 1])]
    else:
        bnd = []
    r_all = rank(F, bnd + images, len(tgt)) if (bnd or images) and tgt else 0
    r_bnd = rank(F, bnd, len(tgt)) if bnd and tgt else 0
    return hx, hy, r_all - r_bnd
