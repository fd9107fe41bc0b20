import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import corpus
from equicobar.coalgebra import chains
from equicobar.galois import (
    FieldExtension,
    SemilinearGSet,
    action_types,
    all_small_checks,
    base_change,
    base_grouplike_count,
    descent_check,
    equivariant_descent,
    galois_fixed_coalgebra,
    naturality_check,
    points_galois,
    semilinear_fixed_vectors,
    swap_set,
    unit_check,
)
from oracle_helpers import brute_grouplikes

F2_F4 = FieldExtension(2, 1, 2)
F2_F8 = FieldExtension(2, 1, 3)
F3_F9 = FieldExtension(3, 1, 2)


def _brute_fixed_vectors(S, E):
    """All ``a`` in ``K^S`` with ``a[gen(s)] = sigma(a[s])``."""
    K = E.top
    return {
        v
        for v in itertools.product(list(K.elements()), repeat=len(S))
        if all(v[S.gen[s]] == E.sigma(v[s]) for s in range(len(S)))
    }


def _span_over_base(vectors, E):
    K = E.top
    base = [E.embed(c) for c in E.base.elements()]
    out = set()
    for coeffs in itertools.product(base, repeat=len(vectors)):
        acc = [K.zero] * len(vectors[0])
        for c, v in zip(coeffs, vectors):
            acc = [K.add(x, K.mul(c, y)) for x, y in zip(acc, v)]
        out.add(tuple(acc))
    return out


@pytest.mark.parametrize("E", [F2_F4, F2_F8, F3_F9])
def test_extension_structure(E):
    assert E.check()
    K = E.top
    for a in K.elements():
        assert E.sigma_power(a, E.m) == a


def test_trivial_action_gives_diagonal_coalgebra():
    S = SemilinearGSet(["s", "t", "u"], [0, 1, 2])
    A = galois_fixed_coalgebra(S, F2_F4)
    assert A.dim == 3
    assert A.delta == [{(0, 0): 1}, {(1, 1): 1}, {(2, 2): 1}]


@pytest.mark.parametrize("E", [F2_F4, F3_F9])
def test_swap_fixed_vectors_match_enumeration(E):
    S = swap_set()
    vecs = [tuple(v) for v in semilinear_fixed_vectors(S, E)]
    assert len(vecs) == 2
    assert _span_over_base(vecs, E) == _brute_fixed_vectors(S, E)


def test_swap_coalgebra_has_no_grouplikes_over_base():
    A = galois_fixed_coalgebra(swap_set(), F2_F4)
    assert A.dim == 2
    assert brute_grouplikes(A) == []
    assert len(brute_grouplikes(base_change(A, F2_F4))) == 2
    assert base_grouplike_count(swap_set(), F2_F4, method="brute") == (0, 2)
    assert base_grouplike_count(swap_set(), F2_F4) == (0, 2)


def test_swap_over_f9_is_analogous():
    A = galois_fixed_coalgebra(swap_set(), F3_F9)
    assert A.dim == 2
    assert brute_grouplikes(A) == []
    assert base_grouplike_count(swap_set(), F3_F9, method="brute") == (0, 2)


def test_descent_isomorphisms():
    assert descent_check(swap_set(), F2_F4).ok
    S = SemilinearGSet(["x", "y", "z", "w"], [1, 0, 3, 2])
    r = descent_check(S, F2_F4)
    assert r.ok and r.entries[0]["dim"] == 4


def test_points_recover_swap():
    P = points_galois(base_change(galois_fixed_coalgebra(swap_set(), F2_F4), F2_F4), F2_F4)
    assert len(P) == 2 and P.gen == [1, 0]
    assert unit_check(swap_set(), F2_F4).ok


def test_points_of_diagonal_coalgebra_is_basis():
    S = SemilinearGSet(["s", "t"], [0, 1])
    P = points_galois(base_change(galois_fixed_coalgebra(S, F2_F4), F2_F4), F2_F4)
    assert len(P) == 2 and P.gen == [0, 1]


def test_naturality():
    T = SemilinearGSet(["x", "y", "z", "w"], [1, 0, 3, 2])
    S = SemilinearGSet(["p", "q"], [1, 0])
    assert naturality_check([0, 1, 0, 1], T, S, F2_F4).ok


@pytest.mark.parametrize("E", [F2_F4, F2_F8, F3_F9])
def test_action_types_enumerate_orbit_partitions(E):
    for n in range(1, 6):
        shapes = sorted(tuple(sorted(len(o) for o in S.orbits())) for S in action_types(n, E.m))
        # orbit sizes divide m and sum to n; each partition appears once
        for shape in shapes:
            assert sum(shape) == n and all(E.m % k == 0 for k in shape)
        assert len(shapes) == len(set(shapes))


def test_all_small_sets_for_f2_f4():
    for n, _, dim, descent, unit in all_small_checks(F2_F4, max_size=5):
        assert dim == n and descent and unit


def test_trivial_galois_on_swap_wedge_matches_chains():
    Y = corpus.swap_wedge()
    r = equivariant_descent(Y, {x: x for x in Y.X.names()}, F2_F4)
    assert r.ok
    dims = chains(Y.X, F2_F4.base).dims()
    assert [e["size"] for e in r.entries] == dims[: len(r.entries)]


def test_twisted_galois_on_swap_wedge():
    Y = corpus.swap_wedge()
    r = equivariant_descent(Y, {"*": "*", "a": "b", "b": "a"}, F2_F4)
    assert r.ok and all(e["group_action"] and e["faces"] for e in r.entries)


def test_json_round_trips():
    assert FieldExtension.from_json(F3_F9.to_json()).q == F3_F9.q
    S = swap_set()
    assert SemilinearGSet.from_json(S.to_json()) == S


@given(st.lists(st.integers(0, 1), min_size=1, max_size=3), st.sampled_from([F2_F4, F3_F9]))
def test_random_orbit_unions(kinds, E):
    # union of fixed points (0) and swapped pairs (1)
    points, gen = [], []
    for k in kinds:
        start = len(points)
        if k:
            points += [f"p{start}", f"p{start + 1}"]
            gen += [start + 1, start]
        else:
            points.append(f"p{start}")
            gen.append(start)
    S = SemilinearGSet(points, gen)
    A = galois_fixed_coalgebra(S, E)
    assert A.dim == len(S)
    assert A.check() == []
    assert descent_check(S, E).ok
    assert unit_check(S, E).ok
