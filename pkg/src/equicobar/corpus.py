"""Fixed corpus of spaces, maps and G-objects shared by the audit and the tests."""

from __future__ import annotations

import random

from .equivariant import (
    CellDiagram,
    GSimplicialSet,
    OrbitCategory,
    basepoint_inclusion,
    coset_space,
    named_group,
    subgroups,
    tensor_set,
    trivial_action,
)
from .fields import GF, QQ
from .simplicial import SimplicialMap, SimplicialSet, constant_map, identity_map, standard_model, wedge

MODELS = ["point", "S1", "S2", "RP2", "T2", "wedge_S1_S1"]
FIELDS = {"F2": GF(2), "F3": GF(3), "Q": QQ()}
BASE = "*"


def model(name, D=None):
    return standard_model(name, D)


def disk():
    """Reduced 2-disk: one edge ``a`` bounding one triangle."""
    faces = {
        "a": [((0,), BASE), ((0,), BASE)],
        "w": [((0, 0), BASE), ((0, 1), "a"), ((0, 0), BASE)],
    }
    return SimplicialSet({0: [BASE], 1: ["a"], 2: ["w"]}, faces, 3, "disk").check()


def rp2_with_disk():
    """``RP2`` with an extra edge ``c`` and a triangle forcing ``c = a``."""
    R = standard_model("RP2")
    nondeg = {n: list(v) for n, v in R.nondeg.items()}
    nondeg[1].append("c")
    nondeg[2].append("w")
    faces = dict(R.faces)
    faces["c"] = [((0,), BASE), ((0,), BASE)]
    faces["w"] = [((0, 0), BASE), ((0, 1), "a"), ((0, 1), "c")]
    return SimplicialSet(nondeg, faces, R.dim_bound, "RP2+disk").check()


def wedge_collapse():
    """``S1 v S1 -> S1`` sending both circles to the circle."""
    W, S = standard_model("wedge_S1_S1"), standard_model("S1")
    images = {BASE: S.nd(BASE), "a": S.nd("a"), "b": S.nd("a")}
    return SimplicialMap(W, S, images).check()


def rp2_disk_collapse():
    X, R = rp2_with_disk(), standard_model("RP2")
    images = {x: R.nd(x) for x in R.names()}
    images["c"] = R.nd("a")
    images["w"] = ((0, 1, 1), "a")
    return SimplicialMap(X, R, images).check()


def to_point(name):
    X = standard_model(name)
    return constant_map(X, standard_model("point", X.dim_bound))


def from_point(name):
    X = standard_model(name)
    pt = standard_model("point", X.dim_bound)
    return SimplicialMap(pt, X, {BASE: X.nd(BASE)})


def circle_into_wedge():
    W, S = standard_model("wedge_S1_S1"), standard_model("S1")
    return SimplicialMap(S, W, {BASE: W.nd(BASE), "a": W.nd("a")}).check()


def audit_corpus():
    """``(label, map, field)`` triples for the inclusion audit."""
    Q, F2, F3 = FIELDS["Q"], FIELDS["F2"], FIELDS["F3"]
    return [
        ("id T2", identity_map(standard_model("T2")), Q),
        ("id RP2", identity_map(standard_model("RP2")), F2),
        ("id S2", identity_map(standard_model("S2")), F3),
        ("RP2 -> point", to_point("RP2"), F3),
        ("RP2 -> point", to_point("RP2"), F2),
        ("S2 -> point", to_point("S2"), Q),
        ("S1 v S1 -> S1", wedge_collapse(), Q),
        ("S1 -> point", to_point("S1"), F2),
        ("point -> S1", from_point("S1"), Q),
        ("S1 -> S1 v S1", circle_into_wedge(), F3),
        ("RP2 + disk -> RP2", rp2_disk_collapse(), F2),
        ("T2 -> point", to_point("T2"), Q),
    ]


# -- equivariant objects --------------------------------------------------------------

def swap_wedge(G=None):
    G = G or named_group("C2")
    W = standard_model("wedge_S1_S1")
    return GSimplicialSet(G, W, [{x: x for x in W.names()}, {BASE: BASE, "a": "b", "b": "a"}])


def swap_torus(G=None):
    G = G or named_group("C2")
    T = standard_model("T2")
    swap = {BASE: BASE, "a": "b", "b": "a", "c": "c", "u": "v", "v": "u"}
    return GSimplicialSet(G, T, [{x: x for x in T.names()}, swap])


def swap_wedge_into_torus():
    A, B = swap_wedge(), swap_torus()
    return SimplicialMap(A.X, B.X, {x: B.X.nd(x) for x in A.X.names()}), A, B


def swap_collapse():
    A = swap_wedge()
    P = trivial_action(A.G, standard_model("point", A.X.dim_bound))
    return constant_map(A.X, P.X), A, P


def g_objects(G):
    """Trivial actions on the models plus orbit tensors ``G/H (x) S1``."""
    out = [trivial_action(G, standard_model(m)) for m in MODELS]
    S1 = standard_model("S1")
    for H in subgroups(G):
        out.append(tensor_set(coset_space(G, H), S1))
    if G.order == 2:
        out.append(swap_wedge(G))
        out.append(swap_torus(G))
    return out


def cell_diagrams(G):
    """Cell diagrams from the orbit generators.

    One attaches a circle at every orbit; the other attaches a circle at the
    free orbit and then fills one of its loops with a disk.
    """
    cat = OrbitCategory(G)
    S1 = standard_model("S1", 3)
    inc = basepoint_inclusion(S1)
    D = CellDiagram(cat)
    for k in range(len(cat.objects)):
        target = D.objects[k]
        D.attach(k, inc, SimplicialMap(inc.source, target, {BASE: target.nd(target.basepoint)}))
    out = [D]
    E = CellDiagram(cat)
    free = E.free_index()
    E.attach(free, inc, SimplicialMap(inc.source, E.objects[free], {BASE: E.objects[free].nd(BASE)}))
    Dk = disk()
    rim = SimplicialMap(standard_model("S1", 3), Dk, {BASE: Dk.nd(BASE), "a": Dk.nd("a")})
    target = E.objects[free]
    loop = target.nondeg[1][0]
    E.attach(free, rim, SimplicialMap(rim.source, target, {BASE: target.nd(BASE), "a": target.nd(loop)}))
    out.append(E)
    return out


# -- random inputs for property tests -------------------------------------------------

def random_reduced(seed, max_edges=3, max_triangles=3):
    """Random reduced simplicial set of dimension <= 2.

    With a single vertex every assignment of edges (or the degenerate edge)
    to the faces of a triangle satisfies the simplicial identities.
    """
    rng = random.Random(seed)
    edges = [f"e{i}" for i in range(rng.randint(0, max_edges))]
    tris = [f"t{i}" for i in range(rng.randint(0, max_triangles))]
    faces = {e: [((0,), BASE), ((0,), BASE)] for e in edges}
    choices = [((0, 0), BASE)] + [((0, 1), e) for e in edges]
    for t in tris:
        faces[t] = [rng.choice(choices) for _ in range(3)]
    nondeg = {0: [BASE]}
    if edges:
        nondeg[1] = edges
    if tris:
        nondeg[2] = tris
    return SimplicialSet(nondeg, faces, 3, f"random{seed}").check()


def random_wedge(seed):
    rng = random.Random(seed)
    names = rng.sample(MODELS[1:], 2)
    return wedge([standard_model(n) for n in names], labels=names)[0]
