import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.errors import CapExceeded, SimplicialError
from equicobar.simplicial import (
    SimplicialMap,
    SimplicialSet,
    constant_map,
    find_isomorphism,
    identity_map,
    pushout,
    standard_model,
    surjections,
    wedge,
)


def test_delta1_and_reduced_circle_validate():
    assert standard_model("Delta1").validate().ok
    assert standard_model("S1").validate().ok


def test_corrupted_face_names_the_identity():
    D = standard_model("Delta2")
    faces = dict(D.faces)
    faces["012"] = [faces["012"][2], faces["012"][1], faces["012"][2]]
    v = SimplicialSet(D.nondeg, faces, 3, "bad").validate()
    assert not v.ok
    assert v.identity == (0, 1)
    with pytest.raises(SimplicialError):
        SimplicialSet(D.nondeg, faces, 3, "bad").check()


def test_simplices_of_circle():
    S1 = standard_model("S1", 3)
    assert set(S1.simplices(1)) == {((0, 1), "a"), ((0, 0), "*")}
    assert len(S1.simplices(2)) == 3
    assert standard_model("point", 3).simplices(3) == [((0, 0, 0, 0), "*")]


def test_simplices_beyond_bound_raise():
    with pytest.raises(CapExceeded):
        standard_model("S1", 1).simplices(2)


def test_simplex_count_matches_surjection_count():
    # |X_n| = sum over nondegenerate k-simplices of #surjections [n] -> [k]
    for name in corpus.MODELS:
        X = standard_model(name, 4)
        for n in range(5):
            expected = sum(len(surjections(n, k)) * X.count(k) for k in range(n + 1))
            assert len(X.simplices(n)) == expected


@pytest.mark.parametrize(
    "name,counts",
    [("S1", [1, 1]), ("S2", [1, 0, 1]), ("RP2", [1, 2, 2]), ("T2", [1, 3, 2]), ("wedge_S1_S1", [1, 2])],
)
def test_model_shapes(name, counts):
    X = standard_model(name)
    assert X.counts()[: len(counts)] == counts
    assert X.reduced


def test_wedges():
    S1, S2 = standard_model("S1"), standard_model("S2")
    W = wedge([S1, S1])[0]
    assert W.counts()[:2] == [1, 2]
    assert wedge([S1])[0].counts() == S1.counts()
    assert wedge([S1, S2])[0].counts()[:3] == [1, 1, 1]


def test_pushout_of_basepoints_is_wedge():
    S1, S2 = standard_model("S1", 3), standard_model("S2", 3)
    pt = standard_model("point", 3)
    P, _, _ = pushout(SimplicialMap(pt, S1, {"*": S1.nd("*")}), SimplicialMap(pt, S2, {"*": S2.nd("*")}))
    assert find_isomorphism(P, wedge([S1, S2])[0]) is not None


def test_pushout_collapsing_boundary_is_sphere():
    B, D = standard_model("boundary2", 3), standard_model("Delta2", 3)
    inc = SimplicialMap(B, D, {x: D.nd(x) for x in B.names()})
    P, _, _ = pushout(inc, constant_map(B, standard_model("point", 3)))
    assert find_isomorphism(P, standard_model("S2")) is not None


def test_pushout_along_identity():
    X = standard_model("RP2")
    Y = standard_model("T2")
    pt = standard_model("point", 3)
    P, _, _ = pushout(identity_map(pt), SimplicialMap(pt, Y, {"*": Y.nd("*")}))
    assert find_isomorphism(P, Y) is not None
    assert identity_map(X).validate().ok


def test_map_validation():
    assert corpus.wedge_collapse().validate().ok
    S1, S2 = standard_model("S1"), standard_model("S2")
    bad = SimplicialMap(S2, S1, {"*": S1.nd("*"), "sigma": ((0, 1, 1), "*")})
    assert not bad.validate().ok


def test_json_round_trip():
    for name in corpus.MODELS:
        X = standard_model(name)
        assert SimplicialSet.from_json(X.to_json()) == X


@given(st.integers(0, 10_000))
def test_random_reduced_sets_validate(seed):
    X = corpus.random_reduced(seed)
    assert X.validate().ok
    for n in range(X.dim_bound + 1):
        for s in X.simplices(n):
            for i in range(n + 1):
                assert X.face(i, s) in X.simplices(n - 1) if n else True


@given(st.integers(0, 10_000))
def test_face_degeneracy_identities(seed):
    X = corpus.random_reduced(seed)
    for n in range(X.dim_bound):
        for s in X.simplices(n):
            for j in range(n + 1):
                t = X.degeneracy(j, s)
                assert X.face(j, t) == s
                assert X.face(j + 1, t) == s


@given(st.integers(0, 10_000))
def test_isomorphism_to_self(seed):
    X = corpus.random_reduced(seed)
    assert find_isomorphism(X, X) is not None
