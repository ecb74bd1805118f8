"""Recognize the type of an octonion grading and compare gradings.

Everything here works on decomposition data (labels, dimensions, subspaces
and the group); no algebra automorphism of C is ever constructed.  A
differing signature proves non-isomorphism; equal types are reported as
such without claiming an isomorphism.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, fields
from functools import lru_cache

from .abelian import AbelianGroup, GroupAutomorphism, automorphisms
from .catalog import FIXED_GROUPS, GradingDescriptor, PARAM_NAMES, TYPE_TAGS, admissible_params, canonical_c_grading
from .errors import CapacityError, DomainError
from .grading import OCTONION, Grading, verify_grading

# sorted component dimensions and identity-component dimension of each type
TYPE_SHAPES = {
    1: ((2, 2, 1, 1, 1, 1), 2),
    2: ((2, 1, 1, 1, 1, 1, 1), 2),
    3: ((2, 2, 2, 1, 1), 2),
    4: ((4, 2, 2), 4),
    5: ((3, 3, 2), 2),
    6: ((2, 2, 2, 2), 2),
    7: ((4, 4), 4),
    8: ((2, 2, 2, 2), 2),
    9: ((1,) * 8, 1),
}


@dataclass(frozen=True)
class GradingSignature:
    invariant_factors: tuple[int, ...]
    components: tuple[tuple[int, int], ...]  # sorted (dimension, label order)
    identity_dim: int
    two_dim_at_involution: bool
    support_size: int

    def differs_at(self, other: "GradingSignature") -> str | None:
        for f in fields(self):
            if getattr(self, f.name) != getattr(other, f.name):
                return f.name
        return None

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.invariant_factors),
            "components": [list(c) for c in self.components],
            "identity_dim": self.identity_dim,
            "two_dim_at_involution": self.two_dim_at_involution,
            "support_size": self.support_size,
        }


def _invariants(G: Grading) -> GradingSignature:
    dims = G.dims()
    return GradingSignature(
        invariant_factors=G.group.invariant_factors(),
        components=tuple(sorted(((d, g.order) for g, d in dims.items()), reverse=True)),
        identity_dim=dims.get(G.group.identity, 0),
        two_dim_at_involution=any(d == 2 and g.order == 2 for g, d in dims.items()),
        support_size=len(dims),
    )


def signature(G: Grading) -> GradingSignature:
    """Isomorphism invariants of an octonion grading."""
    if G.ambient != OCTONION:
        raise DomainError("signature is defined for octonion gradings")
    return _invariants(G)


@dataclass(frozen=True)
class ClassificationResult:
    recognized: bool
    type_tag: int | None = None
    params: dict = field(default_factory=dict)
    sigma: GroupAutomorphism | None = None
    base: GradingDescriptor | None = None
    exact: bool = False
    reason: str | None = None

    @property
    def descriptor(self) -> GradingDescriptor | None:
        return GradingDescriptor(self.type_tag, self.params) if self.recognized else None

    def to_json(self) -> dict:
        if not self.recognized:
            return {"outcome": "unrecognized", "reason": self.reason}
        return {
            "outcome": "recognized",
            "type": self.type_tag,
            "params": {k: v.to_json() for k, v in self.params.items()},
            "sigma": self.sigma.to_json(),
            "base_params": {k: v.to_json() for k, v in self.base.params.items()},
            "match": "subspaces" if self.exact else "dimensions",
        }


def _unrecognized(reason: str) -> ClassificationResult:
    return ClassificationResult(False, reason=reason)


@lru_cache(maxsize=None)
def _family(tag: int, group: AbelianGroup) -> tuple:
    return tuple((d, canonical_c_grading(d, group)) for d in admissible_params(tag, group))


def _apply(sigma: GroupAutomorphism, d: GradingDescriptor) -> GradingDescriptor:
    return GradingDescriptor(d.type_tag, {k: sigma(v) for k, v in d.params.items()})


def _key(d: GradingDescriptor):
    return tuple(v.residues for v in d.param_tuple())


def _search(G: Grading, tag: int, auts, view) -> tuple | None:
    """Least base descriptor d and first sigma with view(canonical(sigma d)) == view(G)."""
    target = view(G)
    family = _family(tag, G.group)
    views = {_key(d): view(C) for d, C in family}
    matches = [d for d, C in family if views[_key(d)] == target]
    if not matches:
        return None
    base = min((_apply(s, d) for d in matches for s in auts), key=_key)
    for s in auts:
        moved = _apply(s, base)
        if views.get(_key(moved)) == target:
            return base, s, moved
    return None


def candidate_tags(sig: GradingSignature) -> list[int]:
    dims = tuple(sorted((d for d, _ in sig.components), reverse=True))
    out = []
    for tag in TYPE_TAGS:
        shape, ident = TYPE_SHAPES[tag]
        if dims != shape or sig.identity_dim != ident:
            continue
        if tag in FIXED_GROUPS and sig.invariant_factors != FIXED_GROUPS[tag]:
            continue
        out.append(tag)
    return out


def classify_c_grading(G: Grading) -> ClassificationResult:
    """Match a verified octonion grading against the nine canonical types.

    First looks for a relabeling sigma of a canonical grading that agrees
    subspace by subspace; failing that, one that agrees on the dimension at
    every label.  Ties go to the lexicographically least base parameters
    and then to the first automorphism in enumeration order.
    """
    if G.ambient != OCTONION:
        raise DomainError("only octonion gradings can be classified")
    report = verify_grading(G)
    if not report.ok:
        return _unrecognized(f"not a valid grading: {report.reason}")
    sig = signature(G)
    if sig.support_size == 1:
        return _unrecognized("trivial grading (support of size 1) is not one of the nine types")
    tags = candidate_tags(sig)
    if not tags:
        dims = [d for d, _ in sig.components]
        return _unrecognized(f"no type has component dimensions {dims} over a group with invariant factors {list(sig.invariant_factors)}")
    try:
        auts = automorphisms(G.group)
    except CapacityError as exc:
        return _unrecognized(str(exc))
    for exact, view in ((True, lambda X: X.components), (False, lambda X: X.dims())):
        for tag in tags:
            found = _search(G, tag, auts, view)
            if found:
                base, sigma, moved = found
                return ClassificationResult(True, tag, dict(moved.params), sigma, base, exact)
    return _unrecognized(
        "component dimensions fit type(s) " + ", ".join(map(str, tags)) + " but no admissible parameters place them"
    )


@dataclass(frozen=True)
class IsoVerdict:
    verdict: str  # "non_isomorphic" | "same_type_recognized" | "inconclusive"
    invariant: str | None = None
    tags: tuple | None = None
    sigma: GroupAutomorphism | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.invariant:
            out["separating_invariant"] = self.invariant
        if self.tags:
            out["types"] = list(self.tags)
        if self.sigma is not None:
            out["sigma"] = self.sigma.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


def _transport(G: Grading, target: AbelianGroup) -> Grading | None:
    """Re-express G over target when the factor lists agree up to order."""
    src = G.group.factors
    if sorted(src) != sorted(target.factors):
        return None
    free = list(range(len(src)))
    perm = []  # target coordinate i reads source coordinate perm[i]
    for f in target.factors:
        j = next(j for j in free if src[j] == f)
        free.remove(j)
        perm.append(j)
    return Grading(
        target, G.ambient, {target.element([g.residues[j] for j in perm]): sp for g, sp in G.components.items()}
    )


def iso_check(G1: Grading, G2: Grading) -> IsoVerdict:
    """NonIsomorphic when an invariant separates, SameTypeRecognized when both
    reduce to the same canonical form, Inconclusive otherwise."""
    if G1.ambient != G2.ambient:
        raise DomainError(f"cannot compare a {G1.ambient} grading with a {G2.ambient} grading")
    s1, s2 = _invariants(G1), _invariants(G2)
    diff = s1.differs_at(s2)
    if diff:
        return IsoVerdict("non_isomorphic", invariant=diff)
    if G1.group.factors != G2.group.factors:
        G2 = _transport(G2, G1.group)
        if G2 is None:
            return IsoVerdict("inconclusive", reason="isomorphic groups given by different factor lists")
    if G1.ambient != OCTONION:
        return IsoVerdict("inconclusive", reason="G2 gradings are compared by invariants only")
    c1, c2 = classify_c_grading(G1), classify_c_grading(G2)
    if not (c1.recognized and c2.recognized):
        return IsoVerdict("inconclusive", reason="at least one grading is unrecognized")
    if c1.type_tag != c2.type_tag:
        # equal signatures make this unreachable for canonical inputs
        return IsoVerdict("inconclusive", tags=(c1.type_tag, c2.type_tag), reason="types differ but invariants agree")
    if _key(c1.base) != _key(c2.base):
        return IsoVerdict(
            "inconclusive", tags=(c1.type_tag, c2.type_tag), reason="parameters are not related by a group automorphism"
        )
    sigma = c2.sigma.compose(c1.sigma.inverse())
    return IsoVerdict("same_type_recognized", tags=(c1.type_tag, c2.type_tag), sigma=sigma)
