import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.dgcobar import (
    cobar,
    h0_presentation,
    homology,
    homology_dims,
    induced_cobar_homology,
    localize_h0,
    marked_elements,
    normalized,
)
from equicobar.errors import CapExceeded, Inconclusive
from equicobar.fields import GF, QQ
from equicobar.presentation import Presentation
from equicobar.rewriting import completed_system, finite_monoid_algebra, word_problem_normalize
from equicobar.simplicial import standard_model
from oracle_helpers import euler_characteristic, homology_by_enumeration

F2, F3, Q = GF(2), GF(3), QQ()


def test_normalized_chains_of_circle():
    dg = normalized(standard_model("S1"), F2, 3)
    assert dg.dims()[:3] == [1, 1, 0]
    assert all(not col for col in dg.d[1])


def test_normalized_chains_of_sphere():
    dg = normalized(standard_model("S2"), Q)
    assert dg.dims()[:3] == [1, 0, 1]
    assert not dg.check()


def test_rp2_homology_groups():
    dg = normalized(standard_model("RP2"), F2)
    assert [homology(dg, n).dim for n in range(3)] == [1, 1, 1]
    dg3 = normalized(standard_model("RP2"), F3)
    assert [homology(dg3, n).dim for n in range(3)] == [1, 0, 0]


@pytest.mark.parametrize(
    "name,F,dims",
    [
        ("point", Q, [1]),
        ("T2", Q, [1, 2, 1]),
        ("S2", F2, [1, 0, 1]),
        ("S2", F3, [1, 0, 1]),
        ("S2", Q, [1, 0, 1]),
        ("RP2", F2, [1, 1, 1]),
        ("RP2", Q, [1, 0, 0]),
    ],
)
def test_homology_dims(name, F, dims):
    assert homology_dims(standard_model(name), F) == dims


@pytest.mark.parametrize("name", corpus.MODELS)
@pytest.mark.parametrize("p", [2, 3])
def test_homology_matches_enumeration(name, p):
    X = standard_model(name)
    top = X.top_dim
    assert homology_dims(X, GF(p)) == homology_by_enumeration(X, p, top)


@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_random_homology_matches_enumeration(seed, p):
    X = corpus.random_reduced(seed, max_edges=3, max_triangles=3)
    top = max(n for n in X.nondeg if X.nondeg[n])
    assert homology_dims(X, GF(p), top) == homology_by_enumeration(X, p, top)


@given(st.integers(0, 10_000), st.sampled_from([F2, F3, Q]))
def test_euler_characteristic_from_homology(seed, F):
    X = corpus.random_reduced(seed)
    dims = homology_dims(X, F, 2)
    assert sum((-1) ** n * d for n, d in enumerate(dims)) == euler_characteristic(X)


@given(st.integers(0, 10_000), st.sampled_from([F2, F3, Q]))
def test_d_squared_zero(seed, F):
    X = corpus.random_reduced(seed, max_edges=2, max_triangles=2)
    dg = normalized(X, F, 3)
    assert not dg.check()
    assert not cobar(dg, 2, 2).check_d2()


# -- cobar ----------------------------------------------------------------------

def test_cobar_of_point_is_trivial():
    cb = cobar(normalized(standard_model("point"), F2, 5), 3, 3)
    assert cb.homology_dims() == [1, 0, 0]
    assert cb.exact


@pytest.mark.parametrize("F", [F2, Q])
def test_cobar_of_sphere(F):
    dg = normalized(standard_model("S2"), F, 6)
    for L in (1, 3, 5):
        cb = cobar(dg, 5, L)
        assert cb.homology_dims() == [1] * 5
        assert cb.exact
    # one word per degree and zero differential, so homology is the word count
    assert [len(cb.words(n)) for n in range(5)] == [1] * 5


def test_cobar_of_circle_is_polynomial_in_length():
    cb = cobar(normalized(standard_model("S1"), F2, 6), 3, 4)
    assert cb.homology_dims()[0] == 5
    assert not cb.exact


def test_cobar_degree_cap_needs_chains():
    with pytest.raises(CapExceeded):
        cobar(normalized(standard_model("S2"), F2, 3), 4, 1)


def test_induced_cobar_map_of_collapse():
    f = corpus.to_point("S2")
    cbX = cobar(normalized(standard_model("S2", 5), Q, 5), 4, 4)
    cbY = cobar(normalized(standard_model("point", 5), Q, 5), 4, 4)
    hx, hy, r = induced_cobar_homology(f, cbX, cbY, 1)
    assert (hx, hy, r) == (1, 0, 0)


# -- H0 presentations and rewriting -----------------------------------------------

def test_h0_presentations():
    assert h0_presentation(standard_model("S1")).format() == "<a | >"
    assert h0_presentation(standard_model("S2")).format() == "< | >"
    assert h0_presentation(standard_model("RP2")).format() == "<a, b | b = a a, a = a b>"


def test_marked_elements():
    assert marked_elements(h0_presentation(standard_model("S1"))) == ["a"]
    assert marked_elements(h0_presentation(standard_model("S2"))) == []
    assert marked_elements(h0_presentation(standard_model("RP2"))) == ["a", "b"]


def test_localized_circle_is_laurent():
    L = localize_h0(h0_presentation(standard_model("S1")))
    assert L.format() == "<a, a^-1 | a a^-1 = 1, a^-1 a = 1>"
    assert word_problem_normalize(L, ("a", "a^-1", "a")).word == ("a",)


def test_localized_rp2_is_group_algebra_of_order_two():
    L = localize_h0(h0_presentation(standard_model("RP2")))
    system = completed_system(L)
    assert system.reduce(("a", "a")) == ()
    alg = finite_monoid_algebra(L)
    assert alg.dim == 2
    assert alg.table == [[0, 1], [1, 0]]


def test_point_h0_is_the_field():
    alg = finite_monoid_algebra(localize_h0(h0_presentation(standard_model("point"))))
    assert alg.dim == 1


def test_rewrite_bound_gives_inconclusive():
    P = Presentation.parse("<a, b | a b a = b a b, a a = b b b>")
    res = word_problem_normalize(P, ("a", "b") * 3, max_rules=3)
    assert not res.conclusive
    with pytest.raises(Inconclusive):
        completed_system(P, max_rules=3)


def test_presentation_parse_round_trip():
    text = "<a, b | b = a a, a = a b>"
    assert Presentation.parse(text).format() == text


@given(st.lists(st.sampled_from(["a", "b", "a^-1", "b^-1"]), max_size=8))
def test_rp2_normal_forms_are_stable(word):
    L = localize_h0(h0_presentation(standard_model("RP2")))
    system = completed_system(L)
    nf = system.reduce(tuple(word))
    assert system.reduce(nf) == nf
    # parity of a-letters is the invariant of Z/2 once b = 1
    parity = sum(1 for x in word if x in ("a", "a^-1")) % 2
    assert nf == (("a",) if parity else ())
