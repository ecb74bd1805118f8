import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from g2grading.derivations import (
    Derivation,
    bracket,
    d_T,
    d_T_bracket_sign,
    derivation_space,
    e1_u,
    e2_v,
    inner_derivation,
    is_derivation,
    matrix_unit,
    span_check,
)
from g2grading.errors import DomainError
from g2grading.linalg import Subspace, identity, zeros
from g2grading.octonion import DIM, Octonion

e1, e2, u1, u2, u3, v1, v2, v3 = (Octonion.basis(i) for i in range(DIM))
L = derivation_space()

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)
octonions = st.lists(rationals, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))
coords = st.lists(st.integers(-3, 3).map(Fraction), min_size=14, max_size=14)


def test_dimension_fourteen():
    assert L.dim == 14


def test_is_derivation_examples():
    assert is_derivation(zeros(8))
    assert not is_derivation(identity(8))
    assert all(is_derivation(D.matrix) for D in L)


def test_inner_derivations_of_identity_vanish():
    one = Octonion.one()
    for y in (e1, u1, v2, u3 + v3):
        assert not inner_derivation(one, y)


def test_d_T_row_convention():
    D = d_T(matrix_unit(1, 2))
    assert D(u1) == u2
    assert D(v2) == -v1
    assert not D(e1) and not D(e2) and not D(u2)


def test_d_T_rejects_trace():
    with pytest.raises(DomainError):
        d_T(matrix_unit(1, 1))


def test_d_T_bracket_sign():
    assert d_T_bracket_sign() == -1
    T, S = matrix_unit(1, 2), matrix_unit(2, 3)
    # [T, S] = E13
    assert bracket(d_T(T), d_T(S)) == d_T([[0, 0, -1], [0, 0, 0], [0, 0, 0]])


def test_spanning_set_dimensions():
    n = DIM * DIM
    assert Subspace(n, [e1_u(i).vector for i in (1, 2, 3)]).dim == 3
    assert Subspace(n, [e2_v(i).vector for i in (1, 2, 3)]).dim == 3
    report = span_check()
    assert report.ok
    assert report.dim_sl3 == 8
    assert report.killing_det == 9618527719784448


@settings(max_examples=25, deadline=None)
@given(octonions, octonions, octonions)
def test_inner_derivations_satisfy_leibniz(x, y, z):
    D = inner_derivation(x, y)
    assert L.contains(D)
    w = Octonion(tuple(Fraction(i - 3, 2) for i in range(8)))
    assert D(z * w) == D(z) * w + z * D(w)


@settings(max_examples=15, deadline=None)
@given(coords, coords, coords)
def test_jacobi_identity(a, b, c):
    br = L.bracket_coords
    total = [
        p + q + r
        for p, q, r in zip(br(a, br(b, c)), br(b, br(c, a)), br(c, br(a, b)))
    ]
    assert not any(total)


@settings(max_examples=15, deadline=None)
@given(coords, coords)
def test_coordinate_bracket_matches_matrix_bracket(a, b):
    A, B = L.from_coordinates(a), L.from_coordinates(b)
    assert L.coordinates(bracket(A, B)) == L.bracket_coords(a, b)
    assert L.coordinates(A) == tuple(a)


def test_killing_form_is_symmetric_and_invariant():
    K = L.killing_matrix()
    assert all(K[i][j] == K[j][i] for i in range(14) for j in range(14))
    rng = random.Random(5)
    unit = [[Fraction(int(i == j)) for j in range(14)] for i in range(14)]

    def kf(x, y):
        return sum(x[i] * K[i][j] * y[j] for i in range(14) for j in range(14))

    for _ in range(5):
        x, y, z = (unit[rng.randrange(14)] for _ in range(3))
        assert kf(L.bracket_coords(x, y), z) == kf(x, L.bracket_coords(y, z))


def test_derivation_json_roundtrip():
    D = e1_u(2) + Fraction(1, 3) * e2_v(1)
    assert Derivation.from_json(D.to_json()) == D


def test_d_T_diagonal_example():
    D = d_T([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    assert not D(e1) and not D(e2)
    assert D(u1) == u1 and D(u2) == -u2 and not D(u3)
    assert D(v1) == -v1 and D(v2) == v2 and not D(v3)


def test_inner_derivation_examples():
    assert is_derivation(inner_derivation(u1, u1).matrix)
    assert e1_u(1) and is_derivation(e1_u(1).matrix)


def test_bracket_sign_on_random_pairs():
    from g2grading.derivations import _commutator
    from g2grading.linalg import mat_scale

    rng = random.Random(11)
    for _ in range(100):
        T = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        S = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
        T[2][2] = -T[0][0] - T[1][1]
        S[2][2] = -S[0][0] - S[1][1]
        assert bracket(d_T(T), d_T(S)) == d_T(mat_scale(-1, _commutator(T, S)))


def test_jacobi_on_basis_triples():
    rng = random.Random(3)
    for _ in range(200):
        A, B, C = (L[rng.randrange(14)] for _ in range(3))
        J = bracket(A, bracket(B, C)) + bracket(B, bracket(C, A)) + bracket(C, bracket(A, B))
        assert not J
        assert L.contains(bracket(A, B))
