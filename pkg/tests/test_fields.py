from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equicobar import kernels, linalg, polys
from equicobar._kernels_py import rank_mod_p as py_rank
from equicobar._kernels_py import rref_mod_p as py_rref
from equicobar.fields import GF, QQ, conway_polynomial, embedding, parse_field

F2, F3, F5 = GF(2), GF(3), GF(5)
F4, F8, F9 = GF(2, 2), GF(2, 3), GF(3, 2)


def test_f4_square_of_generator():
    t = F4.gen()
    assert F4.format((t * t).value) == "t+1"


def test_rational_addition():
    Q = QQ()
    assert Q.add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)


def test_inverse_in_f5():
    assert F5.inv(2) == 3


def test_frobenius_on_f4():
    t = F4.gen()
    assert F4.format(t.frobenius(2).value) == "t+1"
    assert F4.one == F4.frobenius(F4.one, 2)


def test_frobenius_on_f9_with_u_squared_plus_one():
    K = GF(3, 2, modulus=(1, 0, 1))
    u = K.gen()
    assert u.frobenius(3) == -u


def test_parse_field():
    assert parse_field("F4") == F4
    assert parse_field("GF(9)") == F9
    assert parse_field("Q") == QQ()
    with pytest.raises(ValueError):
        parse_field("F6")


def test_conway_polynomials_are_primitive():
    # brute force: the class of t has multiplicative order q - 1
    for p, k in [(2, 2), (2, 3), (3, 2), (5, 2)]:
        K = GF(p, k, modulus=conway_polynomial(p, k))
        t = K.gen()
        powers = {(t**e).value for e in range(1, K.order)}
        assert len(powers) == K.order - 1


def test_field_axioms_exhaustive_f8():
    elems = list(F8.elements())
    for a in elems:
        assert F8.add(a, F8.neg(a)) == F8.zero
        if a:
            assert F8.mul(a, F8.inv(a)) == F8.one
        for b in elems:
            assert F8.mul(a, b) == F8.mul(b, a)
            for c in elems[:3]:
                lhs = F8.mul(a, F8.add(b, c))
                assert lhs == F8.add(F8.mul(a, b), F8.mul(a, c))


def test_embedding_is_a_ring_map():
    emb = embedding(F2, F4)
    for a in F2.elements():
        for b in F2.elements():
            assert emb(F2.mul(a, b)) == F4.mul(emb(a), emb(b))
            assert emb(F2.add(a, b)) == F4.add(emb(a), emb(b))


# -- polynomials -------------------------------------------------------------------

def test_factor_x2_plus_x_over_f2():
    fac = polys.poly_factor(F2, [0, 1, 1])
    assert sorted(f for f, _ in fac.factors) == [(0, 1), (1, 1)]


def test_x2_x_1_irreducible_over_f2():
    assert polys.poly_factor(F2, [1, 1, 1]).factors == [((1, 1, 1), 1)]


def test_x2_x_1_splits_over_f4():
    t = F4.gen().value
    roots = sorted(f[0] for f, _ in polys.poly_factor(F4, [1, 1, 1]).factors)
    assert roots == sorted([t, F4.add(t, 1)])


@given(st.lists(st.integers(0, 2), min_size=1, max_size=6), st.lists(st.integers(0, 2), min_size=1, max_size=6))
def test_factorization_multiplies_back(a, b):
    f = polys.trim(F3, polys.mul(F3, a, b))
    if polys.deg(f) < 1:
        return
    fac = polys.poly_factor(F3, f)
    prod = [fac.unit]
    for g, e in fac.factors:
        for _ in range(e):
            prod = polys.mul(F3, prod, list(g))
    assert polys.trim(F3, prod) == f


# -- linear algebra ------------------------------------------------------------------

def test_identity_kernel_is_zero():
    assert linalg.kernel_vectors(F2, [[1, 0], [0, 1]], 2) == []


def test_rank_of_all_ones():
    assert linalg.rank(F2, [[1, 1], [1, 1]], 2) == 1


def test_boundary_of_triangle_kernel():
    # edges 01, 02, 12; vertex rows
    d1 = [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    Q = QQ()
    assert len(linalg.kernel_vectors(Q, [[Fraction(x) for x in r] for r in d1], 3)) == 1


def _brute_rank(rows, ncols, p):
    import itertools

    span = {tuple([0] * ncols)}
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        v = [0] * ncols
        for c, r in zip(coeffs, rows):
            v = [(x + c * y) % p for x, y in zip(v, r)]
        span.add(tuple(v))
    k = 0
    n = len(span)
    while n > 1:
        n //= p
        k += 1
    return k


matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 2), min_size=c, max_size=c), min_size=1, max_size=4)
)


@given(matrices)
def test_rank_matches_span_enumeration(rows):
    ncols = len(rows[0])
    assert linalg.rank(F3, rows, ncols) == _brute_rank(rows, ncols, 3)


@given(matrices)
def test_kernel_vectors_are_in_kernel(rows):
    ncols = len(rows[0])
    ker = linalg.kernel_vectors(F3, rows, ncols)
    assert len(ker) + linalg.rank(F3, rows, ncols) == ncols
    for v in ker:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) % 3 == 0


@given(matrices)
def test_compiled_and_python_kernels_agree(rows):
    ncols = len(rows[0])
    rows = [list(r) for r in rows]
    assert kernels.rank_mod_p([list(r) for r in rows], ncols, 3) == py_rank([list(r) for r in rows], ncols, 3)
    assert kernels.rref_mod_p([list(r) for r in rows], ncols, 3) == py_rref([list(r) for r in rows], ncols, 3)
