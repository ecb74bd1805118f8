from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2grading.linalg import Subspace, det, inverse, identity, mat_mul, nullspace, rank, rref
from g2grading.scalar import Cyc, cyc, cyclotomic_poly, format_scalar, parse_scalar, zeta

CONDUCTORS = [1, 2, 3, 4, 5, 8, 12]


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity_identities():
    assert zeta(3) + zeta(3, 2) == -1
    assert zeta(4) ** 2 == -1
    assert zeta(5).inverse() == zeta(5, 4)
    assert zeta(6) ** 6 == 1
    assert zeta(2) == -1 and zeta(1) == 1
    assert isinstance(zeta(3) * zeta(3, 2), Fraction)


def test_mixed_conductors_lift_to_common_field():
    # zeta_4 * zeta_3 = zeta_12^(3 + 4)
    assert zeta(4) * zeta(3) == zeta(12, 7)
    assert zeta(6) == -zeta(3, 2)


def test_cyc_is_unhashable_and_never_rational():
    with pytest.raises(TypeError):
        hash(zeta(5))
    assert zeta(5) != Fraction(1)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        zeta(3) / 0


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def elements(draw, n=None):
    n = n if n is not None else draw(st.sampled_from(CONDUCTORS))
    return cyc(n, draw(st.lists(coeff, min_size=1, max_size=n + 1)))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CONDUCTORS).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_field_axioms(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a != 0:
        assert a * (1 / a) == 1


@settings(max_examples=40, deadline=None)
@given(elements())
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


def test_parse_rejects_garbage():
    for bad in ("x", "1/0", 1.5):
        with pytest.raises(ValueError):
            parse_scalar(bad)


def test_rref_and_rank():
    M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    R = rref(M)
    assert R[0] == (1, 0, 1) and R[1] == (0, 1, 1)
    assert rank(M) == 2


def test_rref_rejects_floats():
    with pytest.raises(TypeError):
        rref([[0.5, 1]])


def test_nullspace_example():
    N = nullspace([[1, 1, 0], [0, 1, 1]], 3)
    assert N.dim == 1
    assert N.contains([1, -1, 1])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5)))
def test_rank_nullity(M):
    n = len(M[0])
    N = nullspace(M, n)
    assert rank(M) + N.dim == n
    for v in N.basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in M)


def test_subspace_operations():
    A = Subspace(3, [[1, 0, 0], [0, 1, 0]])
    B = Subspace(3, [[0, 1, 0], [0, 0, 1]])
    assert (A + B).dim == 3
    assert A.intersect(B) == Subspace(3, [[0, 5, 0]])
    assert A.annihilator() == Subspace(3, [[0, 0, 1]])
    assert A.coordinates([2, 3, 0]) == (2, 3)


def test_det_and_inverse():
    M = [[2, 1], [1, 1]]
    assert det(M) == 1
    assert mat_mul(M, inverse(M)) == identity(2)


def test_rref_rank_one_example():
    assert rref([[1, 2], [2, 4]]) == ((1, 2),)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_dimension_formula(data):
    vec = st.lists(st.integers(-2, 2), min_size=8, max_size=8)
    A = Subspace(8, data.draw(st.lists(vec, min_size=4, max_size=4)))
    B = Subspace(8, data.draw(st.lists(vec, min_size=4, max_size=4)))
    assert A.intersect(B).dim + (A + B).dim == A.dim + B.dim
