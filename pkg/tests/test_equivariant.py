import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.equivariant import (
    OrbitCategory,
    check_cellularity,
    constant_diagram,
    coset_space,
    cosets,
    cyclic_group,
    elmendorf_unit_check,
    fixed_points,
    g_map_check,
    named_group,
    orbit_tensor,
    phi,
    represented_diagram,
    subgroups,
    tensor_set,
    theta,
    trivial_action,
)
from equicobar.simplicial import find_isomorphism, standard_model


def _brute_subgroups(G):
    out = set()
    for r in range(1, G.order + 1):
        for subset in itertools.combinations(range(G.order), r):
            S = set(subset)
            if all(G.mul(a, b) in S for a in S for b in S):
                out.add(frozenset(S))
    return out


def _conjugacy_classes(G, subs):
    classes = []
    for H in subs:
        if not any(H in c for c in classes):
            classes.append({frozenset(G.conjugate(H, g)) for g in range(G.order)})
    return classes


@pytest.mark.parametrize("name", ["C2", "C3", "S3"])
def test_group_tables_are_groups(name):
    assert named_group(name).check()


def test_subgroup_lattices():
    assert [H.order for H in subgroups(named_group("C2"))] == [1, 2]
    assert [H.order for H in subgroups(cyclic_group(4))] == [1, 2, 4]
    S3 = named_group("S3")
    subs = {H.elements for H in subgroups(S3)}
    assert subs == _brute_subgroups(S3)
    assert len(subs) == 6
    assert len(_conjugacy_classes(S3, subs)) == 4


def test_fixed_points_of_trivial_action():
    G = named_group("C2")
    X = standard_model("RP2")
    Y = trivial_action(G, X)
    for H in subgroups(G):
        assert fixed_points(Y, H) == X


def test_swap_fixed_points_are_a_point():
    Y = corpus.swap_wedge()
    P = fixed_points(Y, Y.G.whole())
    assert sum(P.counts()) == 1
    assert fixed_points(Y, Y.G.trivial_subgroup()) == Y.X


def test_tensor_with_one_point_orbit():
    G = named_group("C2")
    X = standard_model("S1")
    Y = orbit_tensor(G, G.whole(), X)
    assert Y.is_trivial()
    assert find_isomorphism(Y.X, X) is not None


def test_free_orbit_tensor_circle_is_swapped_wedge():
    G = named_group("C2")
    Y = orbit_tensor(G, G.trivial_subgroup(), standard_model("S1"))
    assert Y.X.counts()[:2] == [1, 2]
    assert not Y.is_trivial()
    assert sum(fixed_points(Y, G.whole()).counts()) == 1


def _brute_fixed_cosets(G, H, K):
    return [c for c in cosets(G, H) if all(frozenset(G.mul(k, g) for g in c) == c for k in K)]


@pytest.mark.parametrize("gname", ["C2", "C3", "S3"])
def test_orbit_tensor_fixed_counts(gname):
    G = named_group(gname)
    X = standard_model("T2")
    positive = sum(X.counts()[1:])
    for H in subgroups(G):
        Y = orbit_tensor(G, H, X)
        for K in subgroups(G):
            fixed = fixed_points(Y, K)
            assert sum(fixed.counts()[1:]) == len(_brute_fixed_cosets(G, H, K)) * positive
            assert len(coset_space(G, H).fixed(K)) == len(_brute_fixed_cosets(G, H, K))


def test_cellularity_small_cases():
    assert check_cellularity(named_group("C2"), standard_model("S1")).ok
    S3 = named_group("S3")
    S2 = standard_model("S2")
    assert check_cellularity(S3, S2).ok
    assert check_cellularity(named_group("trivial"), S2).ok


def test_orbit_category_is_a_category():
    for g in ("C2", "C3", "S3"):
        assert OrbitCategory(named_group(g)).check()


def test_phi_of_swap():
    Y = corpus.swap_wedge()
    D = phi(Y)
    cat = D.cat
    free, whole = cat.index(Y.G.trivial_subgroup()), cat.index(Y.G.whole())
    assert D.objects[free] == Y.X
    assert sum(D.objects[whole].counts()) == 1
    res = D.arrow(free, whole, cat.hom(free, whole)[0])
    assert res.images == {"*": Y.X.nd("*")}
    assert D.check().ok


def test_phi_of_free_circle():
    G = named_group("S3")
    Y = orbit_tensor(G, G.trivial_subgroup(), standard_model("S1"))
    D = phi(Y)
    for i, H in enumerate(D.cat.objects):
        if H.order > 1:
            assert sum(D.objects[i].counts()) == 1


@pytest.mark.parametrize("gname", ["C2", "S3"])
def test_theta_phi_is_identity(gname):
    G = named_group(gname)
    for Y in corpus.g_objects(G):
        assert theta(phi(Y)) == Y


def test_constant_diagram_gives_trivial_action():
    G = named_group("C2")
    X = standard_model("S1")
    Y = theta(constant_diagram(OrbitCategory(G), X))
    assert Y.is_trivial() and Y.X == X


def test_represented_free_diagram():
    G = named_group("C2")
    cat = OrbitCategory(G)
    X = standard_model("S1")
    D = represented_diagram(cat, cat.index(G.trivial_subgroup()), X)
    Y = theta(D)
    target = orbit_tensor(G, G.trivial_subgroup(), X)
    assert Y.X.counts() == target.X.counts()
    assert not Y.is_trivial()


def test_unit_on_cell_diagrams():
    for g in ("C2", "S3"):
        for D in corpus.cell_diagrams(named_group(g)):
            assert elmendorf_unit_check(D).ok


def test_constant_diagram_rejected_by_unit_check():
    G = named_group("C2")
    r = elmendorf_unit_check(constant_diagram(OrbitCategory(G), standard_model("S1")))
    assert not r.ok and "rejected" in r.message


def test_equivariant_maps():
    f, A, B = corpus.swap_wedge_into_torus()
    assert g_map_check(f, A, B)
    f, A, P = corpus.swap_collapse()
    assert g_map_check(f, A, P)


@given(st.integers(0, 1000), st.sampled_from(["C2", "C3"]))
def test_random_tensors_are_g_sets(seed, gname):
    G = named_group(gname)
    X = corpus.random_reduced(seed)
    for H in subgroups(G):
        Y = tensor_set(coset_space(G, H), X)
        assert Y.X.validate().ok
        assert Y.check() is Y
        for g in range(G.order):
            assert Y.map_of(g).is_isomorphism()
