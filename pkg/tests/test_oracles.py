import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.equivariant import named_group, trivial_action
from equicobar.fields import GF, QQ
from equicobar.fundamental_group import fundamental_group
from equicobar.oracles import (
    INCONCLUSIVE,
    NO,
    YES,
    g_equivalence,
    h0_comparison,
    inclusion_audit,
    is_cat_F_equiv,
    is_F_equiv,
    is_pi1_F_equiv,
    monotone,
    run_oracle,
    trivial_subgroup_verdict,
)
from equicobar.simplicial import constant_map, identity_map, standard_model
from oracle_helpers import homology_by_enumeration

F2, F3, Q = GF(2), GF(3), QQ()


def test_homology_notion_examples():
    assert is_F_equiv(identity_map(standard_model("T2")), Q).value == YES
    assert is_F_equiv(corpus.to_point("RP2"), F3).value == YES
    v = is_F_equiv(corpus.to_point("RP2"), F2)
    assert v.value == NO and v.evidence["failed_degree"] == 1


def test_pi1_notion_examples():
    assert is_pi1_F_equiv(identity_map(standard_model("RP2")), F2).value == YES
    v = is_pi1_F_equiv(corpus.to_point("RP2"), F2)
    assert v.value == NO
    assert is_pi1_F_equiv(identity_map(standard_model("S1")), Q).value == YES
    assert is_pi1_F_equiv(corpus.rp2_disk_collapse(), F2).value == YES


def test_pi1_notion_inconclusive_for_infinite_groups():
    # S1 -> S1 v S1 has H1 injective but not onto; over F3 homology already fails
    v = is_pi1_F_equiv(corpus.circle_into_wedge(), F3)
    assert v.value == NO
    f = constant_map(standard_model("S1"), standard_model("S1"))
    assert is_pi1_F_equiv(f, Q).value in (NO, INCONCLUSIVE)


def test_cat_notion_examples():
    assert is_cat_F_equiv(identity_map(standard_model("S2")), Q).value == YES
    v = is_cat_F_equiv(corpus.to_point("S2"), Q)
    assert v.value == NO
    v = is_cat_F_equiv(corpus.wedge_collapse(), Q)
    assert v.value == NO and v.evidence.get("h0") == "not injective"


def test_h0_collision_for_wedge_collapse():
    status, evidence = h0_comparison(corpus.wedge_collapse(), 2)
    assert status == "not injective"
    u, v = evidence["words"]
    assert u != v and len(u) <= 2 and len(v) <= 2


def test_verdict_json_shape():
    data = is_F_equiv(identity_map(standard_model("S2")), F2).to_json()
    assert data["verdict"] == YES and data["notion"] == 3
    assert data["caps"]["degree"] == 2


@pytest.mark.parametrize("notion", [1, 2, 3])
def test_identity_g_map_is_yes_everywhere(notion):
    G = named_group("C2")
    A = corpus.swap_wedge(G)
    report = g_equivalence(identity_map(A.X), A, A, notion, F2)
    assert report["verdict"] == YES
    assert [r["verdict"] for r in report["table"]] == [YES, YES]


def test_swap_collapse_fails_at_free_level():
    f, A, P = corpus.swap_collapse()
    report = g_equivalence(f, A, P, 3, F2)
    rows = {r["subgroup"]: r["verdict"] for r in report["table"]}
    assert rows["e"] == NO
    assert report["verdict"] == NO


def test_swap_wedge_into_torus_by_level():
    f, A, B = corpus.swap_wedge_into_torus()
    report = g_equivalence(f, A, B, 3, Q, caps={"homology_degree": 1})
    rows = {r["subgroup"]: r for r in report["table"]}
    assert rows["e"]["verdict"] == YES
    assert rows["G"]["verdict"] == NO
    fixed = rows["G"]["evidence"]["homology"][1]
    assert (fixed["source"], fixed["target"]) == (0, 1)


def test_coalgebra_side_agrees_with_simplicial_side():
    for f, A, B in (corpus.swap_collapse(), corpus.swap_wedge_into_torus()):
        for F in (F2, F3):
            simp = g_equivalence(f, A, B, 3, F)
            coal = g_equivalence(f, A, B, 3, F, side="coalgebra")
            assert [r["verdict"] for r in simp["table"]] == [r["verdict"] for r in coal["table"]]


@pytest.mark.parametrize("name", ["RP2", "T2", "S2"])
def test_trivial_subgroup_row_equals_plain_oracle(name):
    G = named_group("C2")
    X = standard_model(name)
    A = trivial_action(G, X)
    P = trivial_action(G, standard_model("point", X.dim_bound))
    f = constant_map(X, P.X)
    for notion in (2, 3):
        assert trivial_subgroup_verdict(f, A, P, notion, F3).value == run_oracle(notion, f, F3).value


def test_monotone_rule():
    assert monotone(YES, YES, YES)
    assert monotone(NO, NO, YES)
    assert monotone(INCONCLUSIVE, NO, YES)
    assert not monotone(YES, NO, NO)
    assert not monotone(NO, YES, NO)


def test_inclusion_audit_is_monotone():
    report = inclusion_audit(corpus.audit_corpus())
    assert report["ok"] and report["violations"] == []
    assert len(report["rows"]) == 12
    for row in report["rows"]:
        if row["map"].startswith("id "):
            assert (row["v1"], row["v2"], row["v3"]) == (YES, YES, YES)
    rp = [r for r in report["rows"] if r["map"] == "RP2 -> point" and r["field"] == "F3"][0]
    assert rp["v1"] in (NO, INCONCLUSIVE) and rp["v2"] == NO and rp["v3"] == YES


@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_homology_verdict_is_sound(seed, p):
    # to-point verdict agrees with brute-force homology of the source
    X = corpus.random_reduced(seed)
    f = constant_map(X, standard_model("point", X.dim_bound))
    acyclic = homology_by_enumeration(X, p, 2) == [1, 0, 0]
    assert (is_F_equiv(f, GF(p)).value == YES) == acyclic


@given(st.integers(0, 10_000))
def test_pi1_verdict_is_sound(seed):
    # a Yes to a point needs trivial group order; a finite nontrivial group gives No
    X = corpus.random_reduced(seed)
    f = constant_map(X, standard_model("point", X.dim_bound))
    v = is_pi1_F_equiv(f, F2).value
    pi = fundamental_group(X, 300)
    if v == YES:
        assert pi.finite and pi.order == 1
    if pi.finite and pi.order > 1:
        assert v == NO


@given(st.integers(0, 10_000), st.sampled_from([F2, Q]))
def test_random_maps_are_monotone(seed, F):
    X = corpus.random_reduced(seed, max_edges=2, max_triangles=2)
    f = constant_map(X, standard_model("point", X.dim_bound))
    v = [run_oracle(n, f, F).value for n in (1, 2, 3)]
    assert monotone(*v)
