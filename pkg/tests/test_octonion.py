from fractions import Fraction

from hypothesis import given, settings, strategies as st

from g2grading.octonion import (
    DIM,
    Octonion,
    bilinear,
    check_table,
    conjugate,
    norm,
    oct_mul,
    zorn_mul,
    zorn_product,
    zorn_signs,
)

e1, e2, u1, u2, u3, v1, v2, v3 = (Octonion.basis(i) for i in range(DIM))
BASIS = [e1, e2, u1, u2, u3, v1, v2, v3]

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=7)
octonions = st.lists(rationals, min_size=8, max_size=8).map(lambda c: Octonion(tuple(c)))


def test_table_examples():
    assert u1 * u2 == v3
    assert u1 * u3 == -v2
    assert v1 * v2 == -u3
    assert u1 * v1 == e1
    assert v1 * u1 == e2
    assert e1 * u1 == u1 and u1 * e1 == Octonion.zero()
    assert u1 * e2 == u1


def test_check_table_reports_all_cells():
    lines = check_table().lines()
    assert "64/64 table entries verified" in lines
    assert "identity e1+e2 verified on 16 products" in lines


def test_zorn_signs_fit_table_uniquely():
    assert zorn_signs() == (1, -1, 1, 1)
    for x in BASIS:
        for y in BASIS:
            assert zorn_mul(x, y) == oct_mul(x, y)


def test_printed_closed_form_signs_disagree_with_table():
    # alpha alpha' - (u, v'), ... + v x v', ... + u x u', beta beta' - (v, u')
    printed = (-1, 1, 1, -1)
    mismatches = sum(zorn_product(x, y, printed) != oct_mul(x, y) for x in BASIS for y in BASIS)
    assert mismatches > 0


def test_norm_examples():
    assert norm(Octonion.one()) == 1
    assert norm(e1) == 0 and norm(u1) == 0
    assert norm(u1 + v1) == -1
    assert norm(e1 - e2) == -1
    assert bilinear(u1, v1) == -1


def test_non_associativity_witness():
    assert (u1 * u2) * u3 != u1 * (u2 * u3)


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_composition_law(x, y):
    assert norm(x * y) == norm(x) * norm(y)


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_conjugation_is_an_involutive_anti_automorphism(x, y):
    assert conjugate(x * y) == conjugate(y) * conjugate(x)
    assert conjugate(conjugate(x)) == x
    assert x + conjugate(x) == x.trace() * Octonion.one()


@settings(max_examples=60, deadline=None)
@given(octonions, octonions)
def test_alternative_laws(x, y):
    assert x * (x * y) == (x * x) * y
    assert (y * x) * x == y * (x * x)


@settings(max_examples=40, deadline=None)
@given(octonions, octonions)
def test_zorn_form_matches_table(x, y):
    assert zorn_mul(x, y) == oct_mul(x, y)


@settings(max_examples=40, deadline=None)
@given(octonions)
def test_json_roundtrip(x):
    assert Octonion.from_json(x.to_json()) == x


def test_one_is_identity():
    one = Octonion.one()
    x = Octonion(tuple(Fraction(i, 3) for i in range(8)))
    assert one * x == x == x * one


def test_conjugation_reverses_basis_products():
    for x in BASIS:
        for y in BASIS:
            assert conjugate(x * y) == conjugate(y) * conjugate(x)


def test_zorn_cross_product_slot_and_idempotent():
    assert zorn_mul(u1, u2) == v3
    assert zorn_mul(e1, e1) == e1
