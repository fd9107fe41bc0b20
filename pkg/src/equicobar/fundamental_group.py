"""Edge-path groups, coset enumeration and universal covers."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .dgcobar import _edge_word, homology_dims
from .equivariant import FiniteGroup, GSimplicialSet
from .errors import Inconclusive, SimplicialError
from .linalg import integer_smith_normal_form
from .presentation import Presentation, inverse_letter
from .simplicial import SimplicialMap, SimplicialSet, identity_surj

COSET_BOUND = 5000


def edge_path_presentation(X):
    """Generators: nondegenerate edges; relation ``d1 = d2 . d0`` per nondegenerate 2-simplex."""
    if not X.reduced:
        raise SimplicialError("edge-path presentation needs a reduced simplicial set")
    gens = list(X.nondeg.get(1, []))
    rels = []
    for s in X.nondeg.get(2, []):
        d0, d1, d2 = X.faces[s]
        rel = (_edge_word(X, d1), _edge_word(X, d2) + _edge_word(X, d0))
        if rel[0] != rel[1]:
            rels.append(rel)
    return Presentation(gens, rels, chains_type=True)


def spanning_tree_presentation(X):
    """Edge-path group of a connected, possibly non-reduced, simplicial set.

    Edges of a BFS spanning tree of the 1-skeleton become trivial.
    """
    verts = X.vertices()
    if not verts:
        raise SimplicialError("empty simplicial set")
    adj = {v: [] for v in verts}
    for e in X.nondeg.get(1, []):
        (_, t), (_, s) = X.faces[e]  # d0 = target, d1 = source
        adj[s].append((e, t))
        adj[t].append((e, s))
    tree = set()
    seen = {verts[0]}
    queue = deque([verts[0]])
    while queue:
        v = queue.popleft()
        for e, w in adj[v]:
            if w not in seen:
                seen.add(w)
                tree.add(e)
                queue.append(w)
    if len(seen) != len(verts):
        raise SimplicialError("1-skeleton is disconnected")

    def word(face):
        eta, y = face
        if X.dim[y] == 0 or y in tree:
            return ()
        return (y,)

    gens = [e for e in X.nondeg.get(1, []) if e not in tree]
    rels = []
    for s in X.nondeg.get(2, []):
        d0, d1, d2 = X.faces[s]
        rel = (word(d1), word(d2) + word(d0))
        if rel[0] != rel[1]:
            rels.append(rel)
    return Presentation(gens, rels)


def is_connected(X):
    try:
        spanning_tree_presentation(X)
    except SimplicialError:
        return False
    return True


# -- coset enumeration ------------------------------------------------------------------

@dataclass
class CosetTable:
    letters: list
    action: dict
    complete: bool = True

    @property
    def order(self):
        return len(next(iter(self.action.values()))) if self.action else 1

    def apply(self, c, word):
        for x in word:
            c = self.action[x][c]
        return c

    def satisfies(self, relators):
        return all(self.apply(c, r) == c for r in relators for c in range(self.order))

    def coset_words(self):
        """Shortest word reaching each coset from coset 0 (BFS, letters in order)."""
        words = {0: ()}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for x in self.letters:
                d = self.action[x][c]
                if d not in words:
                    words[d] = words[c] + (x,)
                    queue.append(d)
        return [words[c] for c in range(self.order)]


class _Enumerator:
    def __init__(self, gens, relators, bound):
        self.letters = []
        for g in gens:
            self.letters += [g, inverse_letter(g)]
        self.inv = {x: inverse_letter(x) for x in self.letters}
        self.relators = [tuple(r) for r in relators]
        self.bound = bound
        self.table = [{}]
        self.parent = [0]
        self.queue = []

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def alive(self, c):
        return self.parent[c] == c

    def define(self, c, x):
        if len(self.table) >= self.bound:
            raise Inconclusive(f"coset enumeration exceeded {self.bound} cosets", cap="coset bound")
        new = len(self.table)
        self.table.append({})
        self.parent.append(new)
        self.table[c][x] = new
        self.table[new][self.inv[x]] = c

    def merge(self, k, l):
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        self.parent[l] = k
        self.queue.append(l)

    def coincidence(self, a, b):
        self.merge(a, b)
        while self.queue:
            g = self.queue.pop(0)
            for x in self.letters:
                if x not in self.table[g]:
                    continue
                d = self.table[g].pop(x)
                xi = self.inv[x]
                if self.table[d].get(xi) == g:
                    del self.table[d][xi]
                m, n = self.rep(g), self.rep(d)
                if x in self.table[m]:
                    self.merge(n, self.table[m][x])
                elif xi in self.table[n]:
                    self.merge(m, self.table[n][xi])
                else:
                    self.table[m][x] = n
                    self.table[n][xi] = m

    def scan_and_fill(self, c, w):
        T = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and w[i] in T[f]:
                f = T[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.inv[w[j]] in T[b]:
                b = T[b][self.inv[w[j]]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f][w[i]] = b
                T[b][self.inv[w[i]]] = f
                return
            self.define(f, w[i])

    def run(self):
        c = 0
        while c < len(self.table):
            if self.alive(c):
                for r in self.relators:
                    if not self.alive(c):
                        break
                    self.scan_and_fill(c, r)
                if self.alive(c):
                    for x in self.letters:
                        if x not in self.table[c]:
                            self.define(c, x)
            c += 1
        live = [c for c in range(len(self.table)) if self.alive(c)]
        index = {c: i for i, c in enumerate(live)}
        action = {x: [index[self.rep(self.table[c][x])] for c in live] for x in self.letters}
        return CosetTable(self.letters, action)


def todd_coxeter(P, coset_bound=COSET_BOUND):
    """Regular permutation representation of the group presented by ``P``.

    Raises :class:`Inconclusive` when more than ``coset_bound`` cosets get
    defined. A returned table always satisfies every relator.
    """
    gens = list(P.generators)
    relators = P.group_relators()
    if not gens:
        return CosetTable([], {})
    table = _Enumerator(gens, relators, coset_bound).run()
    if not table.satisfies(relators):
        raise AssertionError("coset table violates a relator")
    return table


def group_from_table(table):
    """The group of a regular coset table, elements labelled by their coset words."""
    n = table.order
    words = table.coset_words()
    mult = [[table.apply(a, words[b]) for b in range(n)] for a in range(n)]
    names = [" ".join(w) if w else "e" for w in words]
    G = FiniteGroup(names, mult, 0, "pi1")
    G.words = words
    return G


@dataclass
class Abelianization:
    free_rank: int
    torsion: list = field(default_factory=list)

    @property
    def infinite(self):
        return self.free_rank > 0


def abelianization(P):
    gens = list(P.generators)
    idx = {g: i for i, g in enumerate(gens)}
    rows = []
    for r in P.group_relators():
        row = [0] * len(gens)
        for x in r:
            if x in idx:
                row[idx[x]] += 1
            else:
                row[idx[inverse_letter(x)]] -= 1
        rows.append(row)
    if not gens:
        return Abelianization(0, [])
    snf = integer_smith_normal_form(rows) if rows else None
    r = snf.rank if snf else 0
    return Abelianization(len(gens) - r, snf.torsion() if snf else [])


@dataclass
class Pi1:
    presentation: Presentation
    order: int | None
    table: CosetTable | None
    abelian: Abelianization
    certificate: str
    note: str = ""

    @property
    def finite(self):
        return self.order is not None

    def to_json(self):
        return {
            "presentation": self.presentation.format(),
            "order": self.order,
            "certificate": self.certificate,
            "abelianization": {"free_rank": self.abelian.free_rank, "torsion": self.abelian.torsion},
            "note": self.note,
        }


def fundamental_group(X, coset_bound=COSET_BOUND):
    """Presentation plus a finiteness or infiniteness certificate when one is found."""
    P = edge_path_presentation(X) if X.reduced else spanning_tree_presentation(X)
    ab = abelianization(P)
    try:
        table = todd_coxeter(P, coset_bound)
    except Inconclusive as exc:
        cert = "infinite" if ab.infinite else "unknown"
        return Pi1(P, None, None, ab, cert, str(exc))
    return Pi1(P, table.order, table, ab, "finite")


# -- universal cover -----------------------------------------------------------------------

@dataclass
class CoverData:
    base: SimplicialSet
    group: FiniteGroup
    total: SimplicialSet
    projection: SimplicialMap
    deck: GSimplicialSet
    generator_element: dict


def cover_name(G, g, x):
    return f"{x}@{g}"


def universal_cover(X, table=None):
    """Twisted product ``G x_tau X`` with ``tau(x)`` the class of the (0,1)-edge.

    ``d_0 (g, x) = (g tau(x), d_0 x)``; all other operators act on ``x``,
    and ``G`` acts freely by left multiplication.
    """
    if not X.reduced:
        raise SimplicialError("universal cover needs a reduced simplicial set")
    P = edge_path_presentation(X)
    if table is None:
        table = todd_coxeter(P)
    if not table.complete:
        raise Inconclusive("coset table is incomplete", cap="coset bound")
    if P.generators:
        G = group_from_table(table)
        gen_el = {g: table.action[g][0] for g in P.generators}
    else:
        G = FiniteGroup(["e"], [[0]], 0, "pi1")
        gen_el = {}

    def tau(x):
        n = X.dim[x]
        eta, e = X.apply((0, 1), (identity_surj(n), x))
        if X.dim[e] == 0:
            return G.e
        return gen_el[e]

    nondeg, faces = {}, {}
    for n in sorted(X.nondeg):
        for x in X.nondeg[n]:
            t = tau(x) if n else None
            for g in range(G.order):
                name = cover_name(G, g, x)
                nondeg.setdefault(n, []).append(name)
                if n:
                    fs = []
                    for i, (eta, y) in enumerate(X.faces[x]):
                        h = G.mul(g, t) if i == 0 else g
                        fs.append((eta, cover_name(G, h, y)))
                    faces[name] = fs
    total = SimplicialSet(nondeg, faces, X.dim_bound, f"cover({X.label or 'X'})")
    proj = SimplicialMap(total, X, {cover_name(G, g, x): X.nd(x) for x in X.names() for g in range(G.order)})
    action = [{cover_name(G, g, x): cover_name(G, G.mul(h, g), x) for x in X.names() for g in range(G.order)} for h in range(G.order)]
    deck = GSimplicialSet(G, total, action, check=False)
    return CoverData(X, G, total, proj, deck, gen_el)


def check_cover(cov):
    """Structural checks: validation, projection, free deck action, connectivity, simple connectivity."""
    out = {}
    out["valid"] = cov.total.validate().ok
    out["projection"] = cov.projection.validate().ok
    deck_ok = True
    try:
        cov.deck.check()
    except Exception:
        deck_ok = False
    G = cov.group
    free = all(
        cov.deck.action[h][x] != x for h in range(G.order) if h != G.e for x in cov.total.names()
    )
    out["deck"] = deck_ok and free
    fibers = {}
    for x in cov.total.names():
        fibers.setdefault(cov.projection.images[x][1], []).append(x)
    out["fibers"] = all(len(v) == G.order for v in fibers.values()) and len(fibers) == len(cov.base.names())
    out["connected"] = is_connected(cov.total)
    if out["connected"]:
        try:
            out["simply_connected"] = todd_coxeter(spanning_tree_presentation(cov.total)).order == 1
        except Inconclusive:
            out["simply_connected"] = False
    else:
        out["simply_connected"] = False
    return out


def cover_homology(X, F, top=None):
    """Homology of the universal cover; needs a finite fundamental group."""
    pi = fundamental_group(X)
    if not pi.finite:
        raise Inconclusive(f"fundamental group not certified finite ({pi.certificate})", cap="coset bound")
    cov = universal_cover(X, pi.table)
    return homology_dims(cov.total, F, top)
