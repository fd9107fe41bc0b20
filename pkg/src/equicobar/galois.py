"""Frobenius-semilinear actions on chains coalgebras and their fixed forms.

For an extension ``F_q < K = F_{q^m}`` the Galois group is cyclic of order
``m``, generated by ``sigma(a) = a^q``. A permutation ``gen`` of a finite set
``S`` whose order divides ``m`` makes ``K[S]`` semilinear:
``sigma . sum a_s s = sum sigma(a_s) gen(s)``. Its fixed vectors are an
``F_q``-coalgebra of dimension ``|S|``; base change back to ``K`` recovers
``K[S]``, and the group-likes over ``K`` recover ``S`` with its action.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coalgebra import Coalgebra, _vadd, grouplikes
from .equivariant import Report
from .errors import EquicobarError, FieldMismatch, Inconclusive, InputError
from .fields import GF, embedding
from .linalg import invert, kernel_vectors, rank
from .simplicial import format_simplex


class FieldExtension:
    """``F_{p^k_base} < F_{p^k_top}`` with the canonical embedding and Frobenius."""

    def __init__(self, p, k_base, k_top):
        if k_top % k_base:
            raise FieldMismatch(f"F{p}^{k_base} is not a subfield of F{p}^{k_top}")
        self.p, self.k_base, self.k_top = p, k_base, k_top
        self.base = GF(p, k_base)
        self.top = GF(p, k_top)
        self.m = k_top // k_base
        self.q = p**k_base
        self.embed = embedding(self.base, self.top)
        self._back = {self.embed(a): a for a in self.base.elements()}

    def sigma(self, a):
        return self.top.frobenius(a, self.q)

    def sigma_power(self, a, k):
        for _ in range(k % self.m):
            a = self.sigma(a)
        return a

    def restrict(self, a):
        """Inverse of the embedding; raises if ``a`` is not in the base field."""
        if a not in self._back:
            raise EquicobarError(f"{self.top.format(a)} is not in {self.base}")
        return self._back[a]

    def check(self):
        B, K, e = self.base, self.top, self.embed
        for a in B.elements():
            for b in B.elements():
                if e(B.add(a, b)) != K.add(e(a), e(b)) or e(B.mul(a, b)) != K.mul(e(a), e(b)):
                    return False
        fixed = [a for a in K.elements() if self.sigma(a) == a]
        return sorted(fixed) == sorted(self._back) and all(self.sigma_power(a, self.m) == a for a in K.elements())

    def to_json(self):
        return {"p": self.p, "k_base": self.k_base, "k_top": self.k_top}

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["p"]), int(data.get("k_base", 1)), int(data["k_top"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad extension data: {exc}") from exc

    def __repr__(self):
        return f"{self.base} < {self.top}"


@dataclass
class SemilinearGSet:
    """A finite set with the action of a Frobenius generator, as a permutation."""

    points: list
    gen: list

    def __post_init__(self):
        self.points = [str(s) for s in self.points]
        if sorted(self.gen) != list(range(len(self.points))):
            raise InputError("generator action is not a permutation")

    def __len__(self):
        return len(self.points)

    def order(self):
        k, cur = 1, list(self.gen)
        while cur != list(range(len(self))):
            cur = [self.gen[i] for i in cur]
            k += 1
        return k

    def orbits(self):
        seen, out = set(), []
        for i in range(len(self)):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self.gen[j]
            out.append(orb)
        return out

    def check(self, E):
        if E.m % self.order():
            raise InputError(f"action of order {self.order()} does not factor through Gal of order {E.m}")
        return self

    def to_json(self):
        return {"points": self.points, "generator": list(self.gen)}

    @classmethod
    def from_json(cls, data):
        try:
            gen = data["generator"]
            points = data.get("points") or [str(i) for i in range(len(gen))]
            if isinstance(gen, dict):
                idx = {s: i for i, s in enumerate(points)}
                gen = [idx[gen[s]] for s in points]
            return cls(points, [int(i) for i in gen])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad Galois set: {exc}") from exc


def action_types(n, m):
    """One G-set per isomorphism type: partitions of ``n`` into orbit sizes dividing ``m``."""
    sizes = [d for d in range(1, m + 1) if m % d == 0]

    def parts(rest, largest):
        if rest == 0:
            yield []
            return
        for d in sizes:
            if d <= min(rest, largest):
                for tail in parts(rest - d, d):
                    yield [d] + tail

    for shape in parts(n, n):
        gen, start = [], 0
        for d in shape:
            gen += [start + (i + 1) % d for i in range(d)]
            start += d
        yield SemilinearGSet([f"s{i}" for i in range(n)], gen)


# -- fixed forms -----------------------------------------------------------------------

def _digits(K, a):
    out = []
    for _ in range(K.k):
        out.append(a % K.p)
        a //= K.p
    return out


def semilinear_fixed_vectors(S, E):
    """``F_q``-basis of the fixed vectors, as vectors of ``K^S``.

    Restriction of scalars turns ``a_{gen(s)} = sigma(a_s)`` into a linear
    system over ``F_p``; a ``K``-independent subset of its solutions is then
    an ``F_q``-basis.
    """
    K = E.top
    Fp = GF(E.p)
    n, k = len(S), K.k
    sig = [_digits(K, E.sigma(K.pow(K.p, d) if d else 1)) for d in range(k)]
    rows = []
    for s in range(n):
        t = S.gen[s]
        for r in range(k):
            row = [0] * (n * k)
            row[t * k + r] = 1
            for d in range(k):
                row[s * k + d] = Fp.sub(row[s * k + d], sig[d][r])
            rows.append(row)
    sols = kernel_vectors(Fp, rows, n * k)
    basis = []
    for sol in sols:
        vec = [sum(sol[s * k + d] * K.p**d for d in range(k)) for s in range(n)]
        if rank(K, basis + [vec], n) > len(basis):
            basis.append(vec)
        if len(basis) == n:
            break
    return basis


def galois_fixed_coalgebra(S, E):
    """``K[S]^Gal`` as a coalgebra over the base field."""
    S.check(E)
    K, B = E.top, E.base
    basis = semilinear_fixed_vectors(S, E)
    n = len(S)
    if len(basis) != n:
        raise AssertionError(f"fixed space has dimension {len(basis)}, expected {n}")
    M = [[basis[j][s] for j in range(n)] for s in range(n)]
    Minv = invert(K, M)
    delta, counit = [], []
    for i, b in enumerate(basis):
        d = {}
        for s in range(n):
            if b[s] == K.zero:
                continue
            for j in range(n):
                if Minv[j][s] == K.zero:
                    continue
                for l in range(n):
                    c = K.mul(b[s], K.mul(Minv[j][s], Minv[l][s]))
                    _vadd(K, d, (j, l), c)
        delta.append({key: E.restrict(c) for key, c in d.items()})
        eps = K.zero
        for x in b:
            eps = K.add(eps, x)
        counit.append(E.restrict(eps))
    names = [f"f{i}" for i in range(n)]
    A = Coalgebra(B, list(range(n)), delta, counit, names)
    A.top_basis = basis
    A.extension = E
    A.gset = S
    return A


def base_change(A, E):
    """``A (x) K`` with the same structure constants."""
    K, e = E.top, E.embed
    delta = [{key: e(c) for key, c in d.items()} for d in A.delta]
    counit = [e(c) for c in A.counit]
    return Coalgebra(K, list(A.keys), delta, counit, list(A.names))


def descent_check(S, E):
    """``A (x) K -> K[S]``, ``f_i |-> b_i``, is a coalgebra isomorphism over ``K``."""
    A = galois_fixed_coalgebra(S, E)
    K, e = E.top, E.embed
    n = len(S)
    basis = A.top_basis
    if rank(K, basis, n) != n:
        return Report(False, "canonical map is not bijective")
    for i, b in enumerate(basis):
        lhs = {}
        for s, c in enumerate(b):
            if c != K.zero:
                lhs[(s, s)] = c
        rhs = {}
        for (j, l), c in A.delta[i].items():
            for s, x in enumerate(basis[j]):
                if x == K.zero:
                    continue
                for t, y in enumerate(basis[l]):
                    if y != K.zero:
                        _vadd(K, rhs, (s, t), K.mul(e(c), K.mul(x, y)))
        if lhs != rhs:
            return Report(False, f"coproduct not preserved on f{i}")
        eps = K.zero
        for x in b:
            eps = K.add(eps, x)
        if eps != e(A.counit[i]):
            return Report(False, f"counit not preserved on f{i}")
    return Report(True, "descent isomorphism", [{"dim": n, "coalgebra_errors": A.check()}])


def frobenius_on(E, v):
    return tuple(E.sigma(x) for x in v)


def points_galois(A, E, method="auto"):
    """Group-likes of ``A (x) K`` with the Frobenius permutation."""
    AK = base_change(A, E)
    gl = grouplikes(AK, method)
    if not gl.complete:
        raise Inconclusive("group-like search incomplete", cap="group-like search")
    vecs = sorted(tuple(v) for v in gl)
    idx = {v: i for i, v in enumerate(vecs)}
    gen = [idx[frobenius_on(E, v)] for v in vecs]
    out = SemilinearGSet([f"g{i}" for i in range(len(vecs))], gen)
    out.vectors = vecs
    return out


def unit_check(S, E, method="auto"):
    """``S -> P_Gal(K[S]^Gal)`` is an equivariant bijection."""
    A = galois_fixed_coalgebra(S, E)
    P = points_galois(A, E, method)
    K, n = E.top, len(S)
    M = [[A.top_basis[j][s] for j in range(n)] for s in range(n)]
    unit = {}
    for i, v in enumerate(P.vectors):
        img = [K.zero] * n
        for s in range(n):
            for j in range(n):
                img[s] = K.add(img[s], K.mul(M[s][j], v[j]))
        support = [s for s in range(n) if img[s] != K.zero]
        if len(support) != 1 or img[support[0]] != K.one:
            return Report(False, f"group-like g{i} is not a basis vector of K[S]")
        unit[support[0]] = i
    if sorted(unit) != list(range(n)):
        return Report(False, f"{len(unit)} group-likes for {n} points")
    for s in range(n):
        if P.gen[unit[s]] != unit[S.gen[s]]:
            return Report(False, f"unit is not equivariant at {S.points[s]}")
    return Report(True, "unit is an equivariant bijection", [{"unit": {S.points[s]: P.points[unit[s]] for s in range(n)}}])


def base_grouplike_count(S, E, method="auto"):
    """Group-likes over the base field and over the top field."""
    A = galois_fixed_coalgebra(S, E)
    return len(grouplikes(A, method)), len(grouplikes(base_change(A, E), method))


def naturality_check(f, S, T, E):
    """An equivariant map ``f: S -> T`` (list of indices) commutes with the unit."""
    for s in range(len(S)):
        if f[S.gen[s]] != T.gen[f[s]]:
            raise InputError("map of Galois sets is not equivariant")
    A, B = galois_fixed_coalgebra(S, E), galois_fixed_coalgebra(T, E)
    K, n, m = E.top, len(S), len(T)
    # K[f] restricted to fixed vectors, written in the fixed bases
    Mt = [[B.top_basis[j][t] for j in range(m)] for t in range(m)]
    Minv = invert(K, Mt)
    cols = []
    for b in A.top_basis:
        img = [K.zero] * m
        for s, c in enumerate(b):
            img[f[s]] = K.add(img[f[s]], c)
        coords = [K.zero] * m
        for j in range(m):
            for t in range(m):
                coords[j] = K.add(coords[j], K.mul(Minv[j][t], img[t]))
        cols.append([E.restrict(c) for c in coords])
    PA, PB = points_galois(A, E), points_galois(B, E)
    # the induced map on group-likes must send the unit of s to the unit of f(s)
    uA, uB = _unit_table(A, PA, E), _unit_table(B, PB, E)
    for s in range(n):
        v = PA.vectors[uA[s]]
        w = [K.zero] * m
        for j, col in enumerate(cols):
            for t, c in enumerate(col):
                w[t] = K.add(w[t], K.mul(E.embed(c), v[j]))
        if tuple(w) != PB.vectors[uB[f[s]]]:
            return Report(False, f"naturality fails at {S.points[s]}")
    return Report(True, "naturality square commutes")


def _unit_table(A, P, E):
    K = E.top
    n = len(A.top_basis)
    unit = {}
    for i, v in enumerate(P.vectors):
        img = [K.zero] * n
        for j, b in enumerate(A.top_basis):
            for s in range(n):
                img[s] = K.add(img[s], K.mul(b[s], v[j]))
        (s,) = [s for s in range(n) if img[s] != K.zero]
        unit[s] = i
    return unit


# -- simplicial version ---------------------------------------------------------------

def equivariant_descent(Y, galois, E, top=None):
    """Degreewise descent for a G-simplicial set with a commuting Galois permutation.

    ``galois`` is a permutation of nondegenerate names giving the Frobenius
    generator's action. Checks commutation, descent in each degree, that the
    G-action and face maps descend to the base field, and that points recover
    the simplices with both actions.
    """
    X, G = Y.X, Y.G
    names = X.names()
    if sorted(galois) != sorted(names) or sorted(galois.values()) != sorted(names):
        raise InputError("Galois action must permute the nondegenerate simplices")
    for x in names:
        if X.faces.get(x) is not None:
            for i, (eta, y) in enumerate(X.faces[x]):
                if X.faces[galois[x]][i] != (eta, galois[y]):
                    raise InputError(f"Galois action is not simplicial at {x!r}")
    for g in range(G.order):
        for x in names:
            if Y.action[g][galois[x]] != galois[Y.action[g][x]]:
                raise InputError("group and Galois actions do not commute")
    top = X.top_dim if top is None else top
    entries = []
    ok = True
    K = E.top
    prev = None
    for n in range(top + 1):
        simp = X.simplices(n)
        index = {s: i for i, s in enumerate(simp)}
        S = SemilinearGSet([format_simplex(s) for s in simp], [index[(s[0], galois[s[1]])] for s in simp])
        S.check(E)
        A = galois_fixed_coalgebra(S, E)
        desc = descent_check(S, E)
        unit = unit_check(S, E)
        M = [[A.top_basis[j][s] for j in range(len(simp))] for s in range(len(simp))]
        Minv = invert(K, M)
        g_ok = all(
            _descends(E, Minv, A.top_basis, [index[(s[0], Y.action[g][s[1]])] for s in simp]) for g in range(G.order)
        )
        f_ok = True
        if prev is not None:
            pidx, pA, pMinv = prev
            for i in range(n + 1):
                perm = [pidx[X.face(i, s)] for s in simp]
                if not _descends(E, pMinv, A.top_basis, perm):
                    f_ok = False
        entry = {"degree": n, "size": len(simp), "descent": desc.ok, "unit": unit.ok, "group_action": g_ok, "faces": f_ok}
        entries.append(entry)
        ok = ok and desc.ok and unit.ok and g_ok and f_ok
        prev = (index, A, Minv)
    return Report(ok, "equivariant descent" if ok else "equivariant descent failed", entries)


def _descends(E, Minv_target, source_basis, perm):
    """``K``-linear map induced by ``perm`` has base-field matrix in the fixed bases."""
    K = E.top
    m = len(Minv_target)
    for b in source_basis:
        img = [K.zero] * m
        for s, c in enumerate(b):
            img[perm[s]] = K.add(img[perm[s]], c)
        for j in range(m):
            acc = K.zero
            for t in range(m):
                acc = K.add(acc, K.mul(Minv_target[j][t], img[t]))
            if E.sigma(acc) != acc:
                return False
    return True


def swap_set():
    return SemilinearGSet(["s", "t"], [1, 0])


def all_small_checks(E, max_size=6):
    """``(size, orbit shape, dim, descent, unit)`` for every action type up to ``max_size``."""
    out = []
    for n in range(1, max_size + 1):
        for S in action_types(n, E.m):
            A = galois_fixed_coalgebra(S, E)
            out.append((n, sorted(len(o) for o in S.orbits()), A.dim, descent_check(S, E).ok, unit_check(S, E).ok))
    return out
