import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.coalgebra import (
    chains,
    chains_equivariant,
    coalg_fixed_points,
    diagonal_coalgebra,
    grouplikes,
    indexed_wedge_sum,
    largest_subcoalgebra,
    points,
    same_action,
    same_data,
    trivial_coalgebra_action,
    unit_check,
    wedge_sum,
)
from equicobar.equivariant import coset_space, fixed_points, named_group, orbit_tensor, subgroups
from equicobar.fields import GF, QQ
from equicobar.simplicial import find_isomorphism, standard_model, wedge
from oracle_helpers import brute_grouplikes

F2, F3, F4, Q = GF(2), GF(3), GF(2, 2), QQ()


def test_chains_of_circle():
    C = chains(standard_model("S1"), F2)
    assert C.dims()[1] == 2
    a = C.C[1].index(((0, 1), "a"))
    assert C.C[1].apply_delta(C.C[1].basis_vector(a)) == {(a, a): 1}


def test_chains_of_point_is_one_dimensional():
    assert chains(standard_model("point", 4), Q).dims() == [1] * 5


def test_chains_of_rp2_degree_two():
    assert chains(standard_model("RP2"), F2).dims()[2] == 7


def test_single_grouplike():
    assert [tuple(v) for v in grouplikes(diagonal_coalgebra(F3, ["g"]))] == [(1,)]


@pytest.mark.parametrize("name,F", [("RP2", F2), ("RP2", F3), ("wedge_S1_S1", F3), ("T2", F2)])
def test_grouplikes_are_the_basis_by_enumeration(name, F):
    SC = chains(standard_model(name), F)
    for C in SC.C[:3]:
        found = sorted(tuple(v) for v in grouplikes(C))
        assert found == brute_grouplikes(C)
        assert len(found) == C.dim


def test_grouplike_methods_agree_over_f4():
    C = chains(standard_model("wedge_S1_S1"), F4).C[1]
    assert sorted(map(tuple, grouplikes(C, method="brute"))) == sorted(map(tuple, grouplikes(C)))


def test_points_of_point():
    P = points(chains(standard_model("point", 3), Q))
    assert sum(P.counts()) == 1


@pytest.mark.parametrize("name", corpus.MODELS)
def test_points_recover_space(name):
    X = standard_model(name)
    assert find_isomorphism(points(chains(X, F3)), X) is not None


def test_unit_checks():
    assert unit_check(standard_model("point"), F2)[0]
    assert unit_check(standard_model("S1"), Q)[0]
    assert unit_check(standard_model("RP2"), F3)[0]


def test_largest_subcoalgebra_drops_sum_of_loops():
    C = chains(standard_model("wedge_S1_S1"), F2).C[1]
    s0 = C.index(((0, 0), "*"))
    a, b = C.index(((0, 1), "a")), C.index(((0, 1), "b"))
    w1 = [0] * C.dim
    w1[s0] = 1
    w2 = [0] * C.dim
    w2[a] = w2[b] = 1
    D, V = largest_subcoalgebra(C, [w1, w2])
    assert V.basis() == [w1]
    assert D.dim == 1


def test_largest_subcoalgebra_extremes():
    C = chains(standard_model("S1"), F3).C[1]
    full = [[1 if i == j else 0 for i in range(C.dim)] for j in range(C.dim)]
    assert largest_subcoalgebra(C, full)[0].dim == C.dim
    assert largest_subcoalgebra(C, [])[0].dim == 0


def test_trivial_action_fixed_points_are_everything():
    SC = chains(standard_model("S1"), F2)
    G = named_group("C2")
    fixed = coalg_fixed_points(trivial_coalgebra_action(G, SC), G.whole())
    assert fixed.dims() == SC.dims()


@pytest.mark.parametrize("F", [F2, F3])
def test_swap_fixed_coalgebra_is_point(F):
    Y = corpus.swap_wedge()
    fixed = coalg_fixed_points(chains_equivariant(Y, F), Y.G.whole())
    assert fixed.dims() == chains(standard_model("point", Y.X.dim_bound), F).dims()
    assert not fixed.check()


@pytest.mark.parametrize("gname", ["C2"])
def test_coalgebra_and_simplicial_fixed_points_agree(gname):
    G = named_group(gname)
    for Y in corpus.g_objects(G):
        for H in subgroups(G):
            P = points(coalg_fixed_points(chains_equivariant(Y, F2), H))
            assert find_isomorphism(P, fixed_points(Y, H)) is not None


def test_wedge_sum_of_circles():
    S1 = standard_model("S1")
    CW = wedge_sum([chains(S1, F2), chains(S1, F2)])
    assert CW.dims()[1] == 3
    target = chains(wedge([S1, S1])[0], F2)
    assert CW.dims() == target.dims()
    assert not CW.check()


def test_wedge_sum_with_point_is_identity():
    C = chains(standard_model("RP2"), F3)
    W = wedge_sum([C, chains(standard_model("point", C.dim_bound), F3)])
    assert W.dims() == C.dims()


@pytest.mark.parametrize("gname", ["C2", "S3"])
def test_indexed_wedge_matches_orbit_tensor(gname):
    G = named_group(gname)
    X = standard_model("S1")
    for H in subgroups(G):
        lhs = chains_equivariant(orbit_tensor(G, H, X), F2)
        rhs = indexed_wedge_sum(coset_space(G, H), chains(X, F2))
        assert same_data(lhs.SC, rhs.SC)
        assert same_action(lhs, rhs)


@given(st.integers(0, 10_000), st.sampled_from([F2, F3, Q]))
def test_coalgebra_axioms_on_random_sets(seed, F):
    X = corpus.random_reduced(seed, max_edges=2, max_triangles=2)
    SC = chains(X, F)
    for C in SC.C:
        assert C.check() == []
    assert not SC.check()


@given(st.integers(0, 10_000))
def test_unit_on_random_sets(seed):
    X = corpus.random_reduced(seed, max_edges=2, max_triangles=2)
    ok, msg = unit_check(X, F2)
    assert ok, msg
