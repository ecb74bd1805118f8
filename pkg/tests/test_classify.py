import pytest
from hypothesis import given, settings, strategies as st

from g2grading.abelian import automorphisms, make_group
from g2grading.catalog import GradingDescriptor, admissible_params, canonical_c_grading
from g2grading.classify import candidate_tags, classify_c_grading, iso_check, signature
from g2grading.errors import DomainError
from g2grading.grading import OCTONION, Grading, induce_on_L
from g2grading.octonion import DIM, Octonion

Z2, Z3, Z4 = (make_group([n]) for n in (2, 3, 4))
Z2Z2 = make_group([2, 2])
Z4Z2 = make_group([4, 2])


def canon(tag, group, **params):
    d = GradingDescriptor(tag, {k: group.element(v) for k, v in params.items()})
    return canonical_c_grading(d, group)


def test_signature_type4():
    Z5 = make_group([5])
    sig = signature(canon(4, Z5, g=[1]))
    assert sig.identity_dim == 4
    assert sig.components == ((4, 1), (2, 5), (2, 5))


def test_signature_separates_type6_and_type8():
    s6, s8 = signature(canon(6, Z4, g=[1])), signature(canon(8, Z2Z2, g=[1, 0], h=[0, 1]))
    assert s6 != s8
    assert s6.differs_at(s8) == "invariant_factors"


def test_signature_requires_octonion_ambient():
    with pytest.raises(DomainError):
        signature(induce_on_L(canon(5, Z3, g=[1])))


def test_type5_inverted_labels_recognized_with_inversion():
    G = canon(5, Z3, g=[1])
    inv = next(s for s in automorphisms(Z3) if s(Z3.element([1])) == Z3.element([2]))
    result = classify_c_grading(G.relabel(inv))
    assert result.recognized and result.type_tag == 5 and result.exact
    assert result.sigma == inv
    assert result.params == {"g": Z3.element([2])}


def test_type1_same_type_via_cubing():
    a = canon(1, Z4Z2, g=[1, 0], h=[0, 1])
    b = canon(1, Z4Z2, g=[3, 0], h=[0, 1])
    verdict = iso_check(a, b)
    assert verdict.verdict == "same_type_recognized"
    g, h = Z4Z2.element([1, 0]), Z4Z2.element([0, 1])
    assert verdict.sigma(g) == 3 * g and verdict.sigma(h) == h


def test_type7_vs_type8_non_isomorphic():
    v = iso_check(canon(7, Z2, g=[1]), canon(8, Z2Z2, g=[1, 0], h=[0, 1]))
    assert v.verdict == "non_isomorphic"


def test_iso_check_rejects_mixed_ambients():
    G = canon(5, Z3, g=[1])
    with pytest.raises(DomainError):
        iso_check(G, induce_on_L(G))


def test_g2_comparison_is_by_invariants_only():
    G = canon(5, Z3, g=[1])
    assert iso_check(induce_on_L(G), induce_on_L(G)).verdict == "inconclusive"


def test_trivial_and_invalid_gradings_unrecognized():
    basis = [Octonion.basis(i).coords for i in range(DIM)]
    trivial = Grading.from_vectors(Z2, OCTONION, {Z2.identity: basis})
    assert not classify_c_grading(trivial).recognized
    broken = Grading.from_vectors(Z3, OCTONION, {Z3.identity: basis[:3], Z3.element([1]): basis[3:5], Z3.element([2]): basis[5:]})
    result = classify_c_grading(broken)
    assert not result.recognized and "not a valid grading" in result.reason


def test_candidate_tags_use_fixed_groups():
    assert candidate_tags(signature(canon(6, Z4, g=[1]))) == [6]
    assert candidate_tags(signature(canon(8, Z2Z2, g=[1, 0], h=[0, 1]))) == [8]


def test_result_json_shape():
    out = classify_c_grading(canon(5, Z3, g=[1])).to_json()
    assert out["outcome"] == "recognized" and out["type"] == 5
    assert out["params"] == {"g": [1]} and out["match"] == "subspaces"


SWEEP_GROUPS = [make_group(f) for f in ((5,), (6,), (7,), (8,), (2, 4), (3, 3), (2, 2, 2))]


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_relabeling_is_recognized_as_same_type(data):
    group = data.draw(st.sampled_from(SWEEP_GROUPS))
    tags = [t for t in range(1, 10) if next(admissible_params(t, group), None) is not None]
    tag = data.draw(st.sampled_from(tags))
    d = data.draw(st.sampled_from(list(admissible_params(tag, group))))
    s = data.draw(st.sampled_from(automorphisms(group)))
    G = canonical_c_grading(d, group)
    H = G.relabel(s)
    v = iso_check(G, H)
    assert v.verdict == "same_type_recognized"
    assert G.relabel(v.sigma).components == H.components
    r = classify_c_grading(H)
    assert r.type_tag == tag
    assert canonical_c_grading(r.descriptor, group).components == H.components


def test_iso_check_reorders_cyclic_factors():
    a = canon(1, Z4Z2, g=[1, 0], h=[0, 1])
    Z2Z4 = make_group([2, 4])
    b = canon(1, Z2Z4, g=[0, 3], h=[1, 0])
    v = iso_check(a, b)
    assert v.verdict == "same_type_recognized"
    assert v.sigma(Z4Z2.element([1, 0])) == Z4Z2.element([3, 0])
    c = canon(1, make_group([8]), g=[1], h=[4])
    assert iso_check(a, c).verdict == "non_isomorphic"
