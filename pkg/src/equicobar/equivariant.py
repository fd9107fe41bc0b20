"""Finite groups acting on reduced simplicial sets and the orbit category.

Group elements are indices ``0 .. |G|-1`` into a multiplication table.
Actions on simplicial sets are automorphisms, so they are stored as
permutations of nondegenerate simplex names.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import CapExceeded, InputError, SimplicialError
from .simplicial import (
    SimplicialMap,
    SimplicialSet,
    identity_surj,
    pushout,
    pushout_map,
    standard_model,
    union_chain,
    wedge,
)

GROUP_BOUND = 24


class FiniteGroup:
    def __init__(self, elements, table, identity=None, name=None):
        self.elements = [str(e) for e in elements]
        n = len(self.elements)
        self.table = [list(map(int, row)) for row in table]
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise InputError("multiplication table must be square of the group's order")
        if identity is None:
            identity = next((e for e in range(n) if self.table[e] == list(range(n))), None)
            if identity is None:
                raise InputError("table has no identity element")
        self.e = int(identity)
        self.name = name
        self._inv = [next((j for j in range(n) if self.table[i][j] == self.e), None) for i in range(n)]
        self.check()

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return self.order

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def prod(self, *xs):
        out = self.e
        for x in xs:
            out = self.table[out][x]
        return out

    def check(self):
        n = self.order
        r = range(n)
        if any(self.table[self.e][a] != a or self.table[a][self.e] != a for a in r):
            raise InputError("identity law fails")
        if any(i is None for i in self._inv):
            raise InputError("some element has no inverse")
        for a, b, c in itertools.product(r, r, r):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise InputError(f"associativity fails at ({self.elements[a]}, {self.elements[b]}, {self.elements[c]})")
        return self

    def closure(self, gens):
        seen = {self.e}
        frontier = [self.e]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def conjugate(self, H, g):
        """``g H g^-1``."""
        gi = self.inv(g)
        return frozenset(self.prod(g, h, gi) for h in H)

    def trivial_subgroup(self):
        return Subgroup(self, frozenset([self.e]))

    def whole(self):
        return Subgroup(self, frozenset(range(self.order)))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table and self.e == other.e

    def __hash__(self):
        return hash((self.order, self.e, tuple(map(tuple, self.table))))

    def __repr__(self):
        return f"<FiniteGroup {self.name or ''} order={self.order}>"

    def to_json(self):
        return {"schema": 1, "elements": self.elements, "table": self.table}

    @classmethod
    def from_json(cls, data):
        try:
            elements = data["elements"]
            table = data["table"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"group JSON needs 'elements' and 'table': {exc}") from None
        index = {str(e): i for i, e in enumerate(elements)}
        rows = [[index[str(v)] if str(v) in index and not isinstance(v, int) else v for v in row] for row in table]
        return cls(elements, rows, name=data.get("name"))


def cyclic_group(n):
    return FiniteGroup([f"g{i}" if i else "e" for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)], 0, f"C{n}")


def symmetric_group(n):
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    names = ["".join(str(v + 1) for v in p) for p in perms]
    return FiniteGroup(names, table, 0, f"S{n}")


def trivial_group():
    return FiniteGroup(["e"], [[0]], 0, "1")


def named_group(name):
    if name in ("1", "trivial", "C1"):
        return trivial_group()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name.startswith("S") and name[1:].isdigit():
        return symmetric_group(int(name[1:]))
    raise KeyError(f"unknown group {name!r}")


@dataclass(frozen=True)
class Subgroup:
    group: FiniteGroup = field(compare=False, hash=False, repr=False)
    elements: frozenset
    conj_class: int = field(default=0, compare=False)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def label(self):
        G = self.group
        if len(self.elements) == 1:
            return "e"
        if len(self.elements) == G.order:
            return "G"
        return "<" + ",".join(G.elements[g] for g in sorted(self.elements)) + ">"


def subgroups(G, bound=GROUP_BOUND):
    """All subgroups, ordered by (order, elements), tagged with conjugacy class."""
    if G.order > bound:
        raise CapExceeded(f"|G| = {G.order} exceeds subgroup-enumeration bound {bound}")
    cyclic = {G.closure([g]) for g in range(G.order)}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for A in frontier:
            for C in cyclic:
                J = G.closure(A | C)
                if J not in found:
                    new.add(J)
        found |= new
        frontier = new
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    classes = {}
    out = []
    for S in ordered:
        cls = None
        for g in range(G.order):
            c = G.conjugate(S, g)
            if c in classes:
                cls = classes[c]
                break
        if cls is None:
            cls = len(set(classes.values()))
        classes[S] = cls
        out.append(Subgroup(G, S, cls))
    return out


def as_subgroup(G, H):
    if isinstance(H, Subgroup):
        return H
    S = frozenset(H)
    if G.closure(S) != S:
        raise InputError("element set is not a subgroup")
    return Subgroup(G, S)


# -- G-sets -----------------------------------------------------------------

class GSet:
    """A finite G-set: ``act[g][i]`` is the index of ``g . points[i]``."""

    def __init__(self, G, points, act):
        self.G = G
        self.points = list(points)
        self.act = [list(r) for r in act]
        n = len(self.points)
        for g in range(G.order):
            for h in range(G.order):
                for i in range(n):
                    if self.act[g][self.act[h][i]] != self.act[G.mul(g, h)][i]:
                        raise InputError("action is not a left action")
        if any(self.act[G.e][i] != i for i in range(n)):
            raise InputError("identity must act trivially")

    def __len__(self):
        return len(self.points)

    def fixed(self, H):
        return [i for i in range(len(self.points)) if all(self.act[h][i] == i for h in H)]

    def orbits(self):
        seen = set()
        out = []
        for i in range(len(self.points)):
            if i in seen:
                continue
            orb = sorted({self.act[g][i] for g in range(self.G.order)})
            seen.update(orb)
            out.append(orb)
        return out


def cosets(G, H):
    """Left cosets ``gH`` in order of their smallest element."""
    H = as_subgroup(G, H)
    out = []
    seen = set()
    for g in range(G.order):
        c = frozenset(G.mul(g, h) for h in H.elements)
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def coset_space(G, H):
    cs = cosets(G, H)
    index = {}
    for i, c in enumerate(cs):
        for g in c:
            index[g] = i
    act = [[index[G.mul(g, min(c))] for c in cs] for g in range(G.order)]
    return GSet(G, [f"c{i}" for i in range(len(cs))], act)


# -- G-simplicial sets ----------------------------------------------------------

class GSimplicialSet:
    """``X`` with ``action[g]`` a permutation ``{name: name}`` of nondegenerate simplices."""

    def __init__(self, G, X, action, check=True):
        self.G = G
        self.X = X
        self.action = [dict(a) for a in action]
        if check:
            self.check()

    def act(self, g, simplex):
        eta, x = simplex
        return (eta, self.action[g][x])

    def map_of(self, g, target=None):
        X = self.X
        return SimplicialMap(X, target or X, {x: X.nd(self.action[g][x]) for x in X.names()})

    def check(self):
        G, X = self.G, self.X
        if len(self.action) != G.order:
            raise InputError("one permutation per group element required")
        names = set(X.names())
        for g, perm in enumerate(self.action):
            if set(perm) != names or set(perm.values()) != names:
                raise InputError(f"action of {G.elements[g]} is not a permutation of simplex names")
            if any(X.dim[x] != X.dim[y] for x, y in perm.items()):
                raise InputError(f"action of {G.elements[g]} changes dimensions")
            v = self.map_of(g).validate()
            if not v.ok:
                raise SimplicialError(f"action of {G.elements[g]} is not simplicial: {v.message}")
        for g in range(G.order):
            for h in range(G.order):
                gh = G.mul(g, h)
                if any(self.action[g][self.action[h][x]] != self.action[gh][x] for x in names):
                    raise InputError("action is not a homomorphism")
        if X.reduced and any(self.action[g][X.basepoint] != X.basepoint for g in range(G.order)):
            raise InputError("basepoint must be fixed")
        return self

    def is_trivial(self):
        return all(all(k == v for k, v in a.items()) for a in self.action)

    def __eq__(self, other):
        return (
            isinstance(other, GSimplicialSet)
            and self.G == other.G
            and self.X == other.X
            and self.action == other.action
        )

    def to_json(self):
        G = self.G
        return {
            "schema": 1,
            "group": G.to_json(),
            "space": self.X.to_json(),
            "action": {G.elements[g]: dict(sorted(a.items())) for g, a in enumerate(self.action)},
        }

    @classmethod
    def from_json(cls, data, G=None):
        G = G or FiniteGroup.from_json(data["group"])
        X = SimplicialSet.from_json(data["space"])
        act = data.get("action")
        if act is None:
            return trivial_action(G, X)
        idx = {e: i for i, e in enumerate(G.elements)}
        action = [None] * G.order
        for g, perm in act.items():
            action[idx[g]] = perm
        for i in range(G.order):
            if action[i] is None:
                if i == G.e:
                    action[i] = {x: x for x in X.names()}
                else:
                    raise InputError(f"missing action for {G.elements[i]}")
        return cls(G, X, action)


def trivial_action(G, X):
    return GSimplicialSet(G, X, [{x: x for x in X.names()} for _ in range(G.order)])


def g_map_check(f, A, B):
    """``f: A.X -> B.X`` commutes with the actions."""
    G = A.G
    for g in range(G.order):
        for x in A.X.names():
            if f(A.act(g, A.X.nd(x))) != _act_simplex(B, g, f(A.X.nd(x))):
                return False
    return True


def _act_simplex(Y, g, simplex):
    return (simplex[0], Y.action[g][simplex[1]])


def fixed_points(Y, H):
    """``Y^H``: simplices fixed by every element of ``H``.

    A degenerate simplex is fixed exactly when its nondegenerate part is,
    so the subset is determined on nondegenerate names.
    """
    H = as_subgroup(Y.G, H)
    names = [x for x in Y.X.names() if all(Y.action[h][x] == x for h in H.elements)]
    return Y.X.sub(names, label=f"fixed[{H.label()}]")


def tensor_set(S, X, labels=None):
    """``S (x) X``: one wedge summand per point of ``S``, permuted by ``G``."""
    if not X.reduced:
        raise SimplicialError("tensor_set needs a reduced simplicial set")
    labels = labels or list(S.points)
    W, incs = wedge([X] * len(S), labels=labels)
    action = []
    for g in range(S.G.order):
        perm = {}
        for i, inc in enumerate(incs):
            j = S.act[g][i]
            for x in X.names():
                perm[inc.images[x][1]] = incs[j].images[x][1]
        action.append(perm)
    return GSimplicialSet(S.G, W, action)


def orbit_tensor(G, H, X):
    """``G/H (x) X`` with summands labelled by coset index."""
    return tensor_set(coset_space(G, H), X)


def g_wedge(objs):
    """Wedge of G-simplicial sets with the diagonal action."""
    G = objs[0].G
    W, incs = wedge([Y.X for Y in objs], labels=[str(i) for i in range(len(objs))])
    action = []
    for g in range(G.order):
        perm = {}
        for Y, inc in zip(objs, incs):
            for x in Y.X.names():
                perm[inc.images[x][1]] = inc.images[Y.action[g][x]][1]
        action.append(perm)
    return GSimplicialSet(G, W, action), incs


def g_pushout(f, g, A, Xg, Yg):
    """Pushout of G-maps ``Xg <-f- A -g-> Yg`` with the induced action."""
    P, iX, iY = pushout(f, g)
    G = A.G
    action = []
    for h in range(G.order):
        uX = iX.compose(Xg.map_of(h))
        uY = iY.compose(Yg.map_of(h))
        m = pushout_map(P, iX, iY, P, uX, uY)
        action.append({p: m.images[p][1] for p in P.names()})
    return GSimplicialSet(G, P, action), iX, iY


# -- orbit category and diagrams ------------------------------------------------

class OrbitCategory:
    """Objects: all subgroups. ``hom(H, K)``: cosets ``gK`` with ``g^-1 H g <= K``.

    The coset ``gK`` names the G-map ``G/H -> G/K, xH -> xgK``.
    """

    def __init__(self, G, bound=GROUP_BOUND):
        self.G = G
        self.objects = subgroups(G, bound)
        self._homs = {}

    def index(self, H):
        S = H.elements if isinstance(H, Subgroup) else frozenset(H)
        for i, K in enumerate(self.objects):
            if K.elements == S:
                return i
        raise KeyError("not a subgroup of this group")

    def hom(self, i, j):
        key = (i, j)
        if key not in self._homs:
            G = self.G
            H, K = self.objects[i].elements, self.objects[j].elements
            out = []
            for c in cosets(G, K):
                g = min(c)
                if G.conjugate(H, G.inv(g)) <= K:
                    out.append(c)
            self._homs[key] = out
        return self._homs[key]

    def compose(self, a, b, k):
        """``b o a`` for ``a = gK: G/H -> G/K`` and ``b = g'L: G/K -> G/L`` (as cosets of L = objects[k])."""
        G = self.G
        L = self.objects[k].elements
        g = G.mul(min(a), min(b))
        return frozenset(G.mul(g, l) for l in L)

    def identity(self, i):
        H = self.objects[i].elements
        return frozenset(H)

    def morphisms(self):
        n = len(self.objects)
        for i in range(n):
            for j in range(n):
                for c in self.hom(i, j):
                    yield i, j, c

    def check(self):
        n = len(self.objects)
        for i in range(n):
            if self.identity(i) not in self.hom(i, i):
                return False
        for i, j, a in self.morphisms():
            for k in range(n):
                for b in self.hom(j, k):
                    if self.compose(a, b, k) not in self.hom(i, k):
                        return False
        return True


class OrbitDiagram:
    """Contravariant diagram over the orbit category.

    ``objects[i]`` is the value at ``G/H_i``; ``maps[(i, j, coset)]`` is the
    map ``D(G/H_j) -> D(G/H_i)`` induced by that coset.
    """

    def __init__(self, cat, objects, maps):
        self.cat = cat
        self.objects = list(objects)
        self.maps = dict(maps)

    @property
    def G(self):
        return self.cat.G

    def arrow(self, i, j, c):
        return self.maps[(i, j, c)]

    def check(self):
        cat = self.cat
        n = len(cat.objects)
        for i, j, c in cat.morphisms():
            m = self.maps.get((i, j, c))
            if m is None:
                return Report(False, f"missing map for morphism {i}->{j}")
            if not m.validate().ok:
                return Report(False, f"map for {i}->{j} is not simplicial")
        for i in range(n):
            idm = self.maps[(i, i, cat.identity(i))]
            if any(idm.images[x] != self.objects[i].nd(x) for x in self.objects[i].names()):
                return Report(False, f"identity at object {i} not sent to identity")
        for i, j, a in cat.morphisms():
            for k in range(n):
                for b in cat.hom(j, k):
                    lhs = self.maps[(i, k, cat.compose(a, b, k))]
                    rhs = self.maps[(i, j, a)].compose(self.maps[(j, k, b)])
                    if lhs != rhs:
                        return Report(False, f"functoriality fails on {i}->{j}->{k}")
        return Report(True)

    def free_index(self):
        return self.cat.index(frozenset([self.G.e]))


@dataclass
class Report:
    ok: bool
    message: str = "ok"
    entries: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def phi(Y, cat=None):
    """``G/H -> Y^H``; the coset ``gK`` acts as ``y -> g.y : Y^K -> Y^H``."""
    cat = cat or OrbitCategory(Y.G)
    objs = [fixed_points(Y, H) for H in cat.objects]
    maps = {}
    for i, j, c in cat.morphisms():
        g = min(c)
        src, tgt = objs[j], objs[i]
        maps[(i, j, c)] = SimplicialMap(src, tgt, {x: tgt.nd(Y.action[g][x]) for x in src.names()})
    return OrbitDiagram(cat, objs, maps)


def theta(D):
    """Evaluate at ``G/e``; ``g`` acts through the self-map named by the coset ``{g}``."""
    cat = D.cat
    try:
        e = D.free_index()
    except KeyError:
        raise InputError("diagram has no free orbit G/e") from None
    X = D.objects[e]
    G = cat.G
    action = []
    for g in range(G.order):
        m = D.maps[(e, e, frozenset([g]))]
        perm = {}
        for x in X.names():
            eta, y = m.images[x]
            if eta != identity_surj(X.dim[x]):
                raise SimplicialError("self-map at G/e is not an automorphism")
            perm[x] = y
        action.append(perm)
    return GSimplicialSet(G, X, action)


def constant_diagram(cat, X):
    maps = {(i, j, c): SimplicialMap(X, X, {x: X.nd(x) for x in X.names()}) for i, j, c in cat.morphisms()}
    return OrbitDiagram(cat, [X] * len(cat.objects), maps)


def _rep_labels(cat, k, i):
    """Labels of the summands of the represented diagram at ``G/H_i`` (generator at ``G/H_k``)."""
    return [f"y{min(c)}" for c in cat.hom(i, k)]


def represented_diagram(cat, k, X):
    """``G/H_i -> Hom(G/H_i, G/H_k) (x) X`` with maps ``yH_k -> g y H_k``."""
    objs, incs = [], []
    for i in range(len(cat.objects)):
        hom = cat.hom(i, k)
        if hom:
            W, inc = wedge([X] * len(hom), labels=_rep_labels(cat, k, i))
        else:
            W, _ = wedge([standard_model("point", X.dim_bound)])
            inc = []
        objs.append(W)
        incs.append(inc)
    maps = {}
    for i, j, c in cat.morphisms():
        src, tgt = objs[j], objs[i]
        images = {src.basepoint: tgt.nd(tgt.basepoint)}
        for a, inc in zip(cat.hom(j, k), incs[j]):
            b = cat.compose(c, a, k)
            tinc = incs[i][cat.hom(i, k).index(b)]
            for x in X.names():
                images[inc.images[x][1]] = tinc.images[x]
        maps[(i, j, c)] = SimplicialMap(src, tgt, images)
    return OrbitDiagram(cat, objs, maps)


class CellDiagram(OrbitDiagram):
    """An orbit diagram built by attaching generator cells.

    Construction starts from the constant point diagram; each cell is
    ``Hom(-, G/H_k) (x) i`` for a monomorphism ``i: A -> B`` of reduced
    simplicial sets, glued along a map ``A -> D(G/H_k)`` (by Yoneda this
    determines the whole attaching map).
    """

    def __init__(self, cat, D=3):
        pt = standard_model("point", D)
        base = constant_diagram(cat, pt)
        super().__init__(cat, base.objects, base.maps)
        self.cells = []

    def attach(self, k, i_map, attach):
        """Attach ``Hom(-, G/H_k) (x) i_map`` along ``attach: A -> D(G/H_k)``."""
        cat = self.cat
        A, B = i_map.source, i_map.target
        if not i_map.is_injective():
            raise SimplicialError("cells attach along monomorphisms")
        if attach.source is not A and attach.source != A:
            raise SimplicialError("attaching map must start at the cell boundary")
        n = len(cat.objects)
        new_objs, legs = [], []
        for i in range(n):
            hom = cat.hom(i, k)
            labels = [f"e{len(self.cells)}.{lab}" for lab in _rep_labels(cat, k, i)]
            if hom:
                WA, incA = wedge([A] * len(hom), labels=labels)
                WB, incB = wedge([B] * len(hom), labels=labels)
            else:
                WA, incA = wedge([standard_model("point", A.dim_bound)])
                WB, incB = wedge([standard_model("point", B.dim_bound)])
                incA, incB = [], []
            D_i = self.objects[i]
            wi = {WA.basepoint: WB.nd(WB.basepoint)}
            att = {WA.basepoint: D_i.nd(D_i.basepoint)}
            for c, ia, ib in zip(hom, incA, incB):
                back = self.maps[(i, k, c)]
                for a in A.names():
                    wi[ia.images[a][1]] = ib(i_map.images[a])
                    att[ia.images[a][1]] = back(attach.images[a])
            f = SimplicialMap(WA, WB, wi)
            g = SimplicialMap(WA, D_i, att)
            P, iB, iD = pushout(f, g, label=f"cell{len(self.cells)}")
            new_objs.append(P)
            legs.append((iB, iD, incB, hom))
        new_maps = {}
        for i, j, c in cat.morphisms():
            iB_j, iD_j, incB_j, hom_j = legs[j]
            iB_i, iD_i, incB_i, hom_i = legs[i]
            uD = iD_i.compose(self.maps[(i, j, c)])
            imgs = {iB_j.source.basepoint: new_objs[i].nd(new_objs[i].basepoint)}
            for a, inc in zip(hom_j, incB_j):
                b = cat.compose(c, a, k)
                tinc = incB_i[hom_i.index(b)]
                for x in B.names():
                    imgs[inc.images[x][1]] = iB_i(tinc.images[x])
            uB = SimplicialMap(iB_j.source, new_objs[i], imgs)
            new_maps[(i, j, c)] = pushout_map(new_objs[j], iB_j, iD_j, new_objs[i], uB, uD)
        self.objects = new_objs
        self.maps = new_maps
        self.cells.append((k, i_map, attach))
        return self


def basepoint_inclusion(X):
    pt = standard_model("point", X.dim_bound)
    return SimplicialMap(pt, X, {pt.basepoint: X.nd(X.basepoint)})


def elmendorf_unit_check(D):
    """Check that ``eta: D -> Phi(Theta(D))`` is an isomorphism at every orbit.

    ``eta`` at ``G/H`` is ``D`` applied to the projection ``G/e -> G/H``.
    Only cell diagrams are in scope; anything else is rejected.
    """
    if not isinstance(D, CellDiagram):
        return Report(False, "rejected: only cell diagrams built from orbit generators are in scope", [{"rejected": True}])
    cat = D.cat
    chk = D.check()
    if not chk.ok:
        return Report(False, f"not a diagram: {chk.message}")
    Y = theta(D)
    target = phi(Y, cat)
    e = D.free_index()
    entries = []
    ok = True
    etas = []
    for i, H in enumerate(cat.objects):
        proj = frozenset(H.elements)
        eta = D.maps[(e, i, proj)]
        fixed = target.objects[i]
        imgs = [s for s in eta.images.values()]
        good = eta.is_injective() and {y for _, y in imgs} == set(fixed.names())
        etas.append(SimplicialMap(D.objects[i], fixed, eta.images))
        entries.append({"subgroup": H.label(), "iso": good})
        ok &= good
    for i, j, c in cat.morphisms():
        lhs = etas[i].compose(D.maps[(i, j, c)])
        rhs = target.maps[(i, j, c)].compose(etas[j])
        if lhs.images != rhs.images:
            ok = False
            entries.append({"naturality": (i, j), "ok": False})
    return Report(ok, "ok" if ok else "unit is not an isomorphism", entries)


# -- cellularity ----------------------------------------------------------------

def _iso_onto(m, target):
    return m.is_injective() and {y for _, y in m.images.values()} == set(target.names()) and m.validate().ok


def check_cellularity(G, X, f=None, bound=GROUP_BOUND):
    """Check the three cellularity conditions of ``(-)^H`` for every pair ``(H, K)``.

    (3) ``(G/H)^K (x) X -> (G/H (x) X)^K`` is an isomorphism.
    (1) ``(-)^H`` carries the pushout of ``G/K (x) f`` along the fold map
        ``G/K (x) A -> A`` to the pushout of fixed points.
    (2) ``(-)^H`` commutes with the union of the skeleton chain of
        ``G/K (x) X`` (length 3; a partial check of filtered colimits).
    """
    if f is None:
        f = basepoint_inclusion(X)
    subs = subgroups(G, bound)
    entries = []
    for H, K in itertools.product(subs, subs):
        entries.append(_condition3(G, H, K, X))
        entries.append(_condition1(G, H, K, f))
        entries.append(_condition2(G, H, K, X))
    ok = all(e["ok"] for e in entries)
    return Report(ok, "ok" if ok else "cellularity failure", entries)


def _condition3(G, H, K, X):
    S = coset_space(G, H)
    Y = tensor_set(S, X)
    fixed = fixed_points(Y, K)
    idx = S.fixed(K.elements)
    Z, incs = wedge([X] * len(idx), labels=[S.points[i] for i in idx]) if idx else wedge([standard_model("point", X.dim_bound)])
    images = {Z.basepoint: fixed.nd(fixed.basepoint)}
    for i, inc in zip(idx, incs if idx else []):
        for x in X.names():
            images[inc.images[x][1]] = fixed.nd(f"{S.points[i]}|{x}" if X.dim[x] else fixed.basepoint)
    m = SimplicialMap(Z, fixed, images)
    return {"condition": 3, "H": H.label(), "K": K.label(), "ok": _iso_onto(m, fixed)}


def _condition1(G, H, K, f):
    A, B = f.source, f.target
    S = coset_space(G, K)
    GA, GB = tensor_set(S, A), tensor_set(S, B)
    triv = trivial_action(G, A)
    fi = {}
    fold = {}
    for x in GA.X.names():
        if x == GA.X.basepoint:
            fi[x] = GB.X.nd(GB.X.basepoint)
            fold[x] = A.nd(A.basepoint)
            continue
        lab, a = x.split("|", 1)
        eta, b = f.images[a]
        fi[x] = (eta, b if b == B.basepoint else f"{lab}|{b}")
        fold[x] = A.nd(a)
    F = SimplicialMap(GA.X, GB.X, fi)
    Fold = SimplicialMap(GA.X, A, fold)
    P, iB, iA = g_pushout(F, Fold, GA, GB, triv)
    fixed_P = fixed_points(P, H)
    fA, fB, fT = fixed_points(GA, H), fixed_points(GB, H), fixed_points(triv, H)
    Fh = SimplicialMap(fA, fB, {x: F.images[x] for x in fA.names()})
    Gh = SimplicialMap(fA, fT, {x: Fold.images[x] for x in fA.names()})
    Q, jB, jA = pushout(Fh, Gh)
    uB = SimplicialMap(fB, fixed_P, {x: iB.images[x] for x in fB.names()})
    uA = SimplicialMap(fT, fixed_P, {x: iA.images[x] for x in fT.names()})
    try:
        m = pushout_map(Q, jB, jA, fixed_P, uB, uA)
        ok = _iso_onto(m, fixed_P)
    except SimplicialError:
        ok = False
    return {"condition": 1, "H": H.label(), "K": K.label(), "ok": ok}


def _condition2(G, H, K, X):
    Y = orbit_tensor(G, K, X)
    chain = []
    for n in range(3):
        names = [x for x in Y.X.names() if Y.X.dim[x] <= n]
        sub = Y.X.sub(names)
        chain.append(GSimplicialSet(G, sub, [{x: a[x] for x in names} for a in Y.action]))
    whole = union_chain([c.X for c in chain])
    top = GSimplicialSet(G, whole, [{x: a[x] for x in whole.names()} for a in Y.action])
    lhs = set(fixed_points(top, H).names())
    rhs = set().union(*(fixed_points(c, H).names() for c in chain))
    return {"condition": 2, "H": H.label(), "K": K.label(), "ok": lhs == rhs}
