import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.errors import Inconclusive
from equicobar.fields import GF, QQ
from equicobar.fundamental_group import (
    abelianization,
    check_cover,
    cover_homology,
    edge_path_presentation,
    fundamental_group,
    group_from_table,
    is_connected,
    spanning_tree_presentation,
    todd_coxeter,
    universal_cover,
)
from equicobar.presentation import Presentation
from equicobar.simplicial import find_isomorphism, standard_model
from oracle_helpers import euler_characteristic


def test_circle_presentation_and_certificate():
    S1 = standard_model("S1")
    assert edge_path_presentation(S1).format() == "<a | >"
    pi = fundamental_group(S1, 100)
    assert not pi.finite
    assert pi.certificate == "infinite"
    assert pi.abelian.free_rank == 1


def test_sphere_group_is_trivial():
    pi = fundamental_group(standard_model("S2"))
    assert pi.order == 1
    assert edge_path_presentation(standard_model("S2")).format() == "< | >"


def test_rp2_group():
    R = standard_model("RP2")
    assert edge_path_presentation(R).format() == "<a, b | b = a a, a = a b>"
    assert fundamental_group(R).order == 2
    ab = abelianization(edge_path_presentation(R))
    assert (ab.free_rank, ab.torsion) == (0, [2])


def test_abelianization_of_a_squared():
    ab = abelianization(Presentation.parse("<a | a a = 1>"))
    assert (ab.free_rank, ab.torsion) == (0, [2])


def test_torus_abelianization():
    ab = fundamental_group(standard_model("T2"), 200).abelian
    assert (ab.free_rank, ab.torsion) == (2, [])


@pytest.mark.parametrize(
    "text,order",
    [
        ("<a | a a a a a = 1>", 5),
        ("<a, b | a a a = 1, b b = 1, a b a b = 1>", 6),
        ("<a, b | a a a a = 1, b b = 1, a b a b = 1>", 8),
        ("<a, b | a a = 1, b b = 1, a b = b a>", 4),
        ("<a, b | a a a = b b, a b a^-1 = b^-1>", 6),
        ("<a, b | a a a = b b, b a b^-1 = a^-1>", 12),
    ],
)
def test_coset_enumeration_orders(text, order):
    table = todd_coxeter(Presentation.parse(text))
    assert table.order == order
    assert table.satisfies(Presentation.parse(text).group_relators())
    assert group_from_table(table).check()


def test_enumeration_bound_is_inconclusive():
    with pytest.raises(Inconclusive):
        todd_coxeter(Presentation.parse("<a, b | >"), coset_bound=50)


def test_spanning_tree_agrees_with_edge_paths():
    X = corpus.rp2_with_disk()
    assert fundamental_group(X).order == 2
    assert spanning_tree_presentation(X).generators
    assert is_connected(X)


def test_rp2_cover():
    cov = universal_cover(standard_model("RP2"))
    base = standard_model("RP2").counts()
    assert cov.total.counts() == [2 * c for c in base]
    assert all(check_cover(cov).values())
    assert cover_homology(standard_model("RP2"), QQ()) == [1, 0, 1]
    assert cover_homology(standard_model("RP2"), GF(2)) == [1, 0, 1]


def test_sphere_cover_is_itself():
    S2 = standard_model("S2")
    cov = universal_cover(S2)
    assert find_isomorphism(cov.total, S2) is not None
    assert cover_homology(S2, GF(3)) == [1, 0, 1]


@given(st.integers(0, 10_000))
def test_covers_multiply_euler_characteristic(seed):
    X = corpus.random_reduced(seed)
    pi = fundamental_group(X, 300)
    if not pi.finite:
        assert pi.abelian.free_rank > 0 or pi.certificate != "infinite"
        return
    cov = universal_cover(X, pi.table)
    assert cov.total.validate().ok
    assert euler_characteristic(cov.total) == pi.order * euler_characteristic(X)
    assert sum(cov.total.counts()[:1]) == pi.order
    checks = check_cover(cov)
    assert all(checks.values()), checks


@given(st.integers(0, 10_000))
def test_edge_path_presentation_equals_h0_presentation(seed):
    from equicobar.dgcobar import h0_presentation

    X = corpus.random_reduced(seed)
    assert edge_path_presentation(X) == h0_presentation(X)
