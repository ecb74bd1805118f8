"""The nine canonical gradings of the split octonions and their descriptors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .abelian import AbelianGroup, GroupElement
from .errors import DescriptorError
from .grading import OCTONION, Grading
from .octonion import E1, E2, U1, U2, U3, V1, V2, V3, Octonion

PARAM_NAMES: dict[int, tuple[str, ...]] = {
    1: ("g", "h"),
    2: ("g", "h"),
    3: ("h",),
    4: ("g",),
    5: ("g",),
    6: ("g",),
    7: ("g",),
    8: ("g", "h"),
    9: ("g", "h", "k"),
}

# types whose grading group is fixed up to isomorphism (invariant factors)
FIXED_GROUPS: dict[int, tuple[int, ...]] = {
    5: (3,),
    6: (4,),
    7: (2,),
    8: (2, 2),
    9: (2, 2, 2),
}

TYPE_TAGS = tuple(range(1, 10))


@dataclass(frozen=True)
class GradingDescriptor:
    type_tag: int
    params: Mapping[str, GroupElement] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))

    def param_tuple(self) -> tuple[GroupElement, ...]:
        return tuple(self.params[n] for n in PARAM_NAMES[self.type_tag])

    def to_json(self) -> dict:
        return {"type": self.type_tag, "params": {k: v.to_json() for k, v in self.params.items()}}

    @classmethod
    def from_json(cls, data: Mapping, group: AbelianGroup) -> "GradingDescriptor":
        return cls(int(data["type"]), {k: group.element(v) for k, v in data["params"].items()})


def _distinct(elems) -> bool:
    return len(set(elems)) == len(elems)


def validate_descriptor(d: GradingDescriptor, group: AbelianGroup) -> None:
    """Raise DescriptorError naming the first violated constraint."""
    tag = d.type_tag
    if tag not in PARAM_NAMES:
        raise DescriptorError(f"type must be one of 1..9, got {tag}")
    names = PARAM_NAMES[tag]
    if set(d.params) != set(names):
        raise DescriptorError(f"type {tag} takes parameters {', '.join(names)}; got {', '.join(sorted(d.params)) or 'none'}")
    for name, x in d.params.items():
        if x not in group:
            raise DescriptorError(f"parameter {name}={x} is not an element of {group}")
    p = d.params
    e = group.identity

    def need(cond, msg):
        if not cond:
            raise DescriptorError(f"type {tag}: {msg}")

    if tag == 1:
        g, h = p["g"], p["h"]
        need(h.order == 2, f"h must have order 2 (order of {h} is {h.order})")
        need(g.order > 2, f"g must have order > 2 (order of {g} is {g.order})")
        need(_distinct([e, g, -g, h, g + h, -g + h]), "e, g, g^-1, h, gh, g^-1 h must be pairwise distinct")
    elif tag == 2:
        g, h = p["g"], p["h"]
        need(g.order > 2, f"g must have order > 2 (order of {g} is {g.order})")
        need(h.order > 2, f"h must have order > 2 (order of {h} is {h.order})")
        need(
            _distinct([e, g, h, g + h, -g, -h, -g - h]),
            "e, g, h, gh, g^-1, h^-1, g^-1 h^-1 must be pairwise distinct",
        )
    elif tag == 3:
        h = p["h"]
        need(h.order > 4, f"h must have order > 4 (order of {h} is {h.order})")
    elif tag == 4:
        g = p["g"]
        need(g.order > 2, f"g must have order > 2 (order of {g} is {g.order})")
    elif tag == 5:
        need(p["g"].order == 3, "g must have order 3")
    elif tag == 6:
        need(p["g"].order == 4, "g must have order 4")
    elif tag == 7:
        need(p["g"].order == 2, "g must have order 2")
    elif tag == 8:
        g, h = p["g"], p["h"]
        need(g.order == 2 and h.order == 2, "g and h must have order 2")
        need(g != h, "g and h must be different")
    elif tag == 9:
        need(all(p[n].order == 2 for n in ("g", "h", "k")), "g, h, k must have order 2")

    if not group.is_generated_by(d.param_tuple()):
        raise DescriptorError(f"type {tag}: the support must generate the group {group}")
    if tag in FIXED_GROUPS:
        want = FIXED_GROUPS[tag]
        need(
            group.invariant_factors() == want,
            f"the grading group must be " + " x ".join(f"Z{n}" for n in want),
        )


def _spans(tag: int, p: Mapping[str, GroupElement], e: GroupElement) -> dict:
    b = Octonion.basis
    e1, e2, u1, u2, u3, v1, v2, v3 = (b(i) for i in (E1, E2, U1, U2, U3, V1, V2, V3))
    if tag == 1:
        g, h = p["g"], p["h"]
        return {e: [e1, e2], g: [u1], -g: [v1], h: [u3, v3], g + h: [v2], -g + h: [u2]}
    if tag == 2:
        g, h = p["g"], p["h"]
        return {e: [e1, e2], g: [u1], h: [u2], g + h: [v3], -g: [v1], -h: [v2], -g - h: [u3]}
    if tag == 3:
        h = p["h"]
        return {e: [e1, e2], h: [u2, u3], -h: [v2, v3], -2 * h: [u1], 2 * h: [v1]}
    if tag == 4:
        g = p["g"]
        return {e: [e1, e2, u1, v1], g: [u2, v3], -g: [u3, v2]}
    if tag == 5:
        g = p["g"]
        return {e: [e1, e2], g: [u1, u2, u3], -g: [v1, v2, v3]}
    if tag == 6:
        g = p["g"]
        return {e: [e1, e2], g: [u1, u2], -g: [v1, v2], 2 * g: [u3, v3]}
    if tag == 7:
        g = p["g"]
        return {e: [e1, e2, u1, v1], g: [u2, v2, u3, v3]}
    if tag == 8:
        g, h = p["g"], p["h"]
        return {e: [e1, e2], g: [u1, v1], h: [u2, v2], g + h: [u3, v3]}
    if tag == 9:
        g, h, k = p["g"], p["h"], p["k"]
        # u3/v3 labels exchanged relative to the gk/hgk pair as usually printed:
        # with the normative table (v1 - u1)(v2 - u2) = v3 - u3.
        return {
            e: [e1 + e2],
            h: [e2 - e1],
            g: [v1 - u1],
            k: [v2 - u2],
            g + h: [u1 + v1],
            h + k: [u2 + v2],
            g + k: [v3 - u3],
            h + g + k: [u3 + v3],
        }
    raise DescriptorError(f"unknown type {tag}")


def canonical_c_grading(d: GradingDescriptor, group: AbelianGroup) -> Grading:
    validate_descriptor(d, group)
    spans = _spans(d.type_tag, d.params, group.identity)
    return Grading.from_vectors(group, OCTONION, {g: [x.coords for x in xs] for g, xs in spans.items()})


def elementary_tuple(d: GradingDescriptor) -> tuple[GroupElement, GroupElement, GroupElement]:
    """Degrees of (u1, u2, u3) in the canonical grading of types 1-8."""
    tag, p = d.type_tag, d.params
    if tag == 1:
        g, h = p["g"], p["h"]
        return (g, -g + h, h)
    if tag == 2:
        g, h = p["g"], p["h"]
        return (g, h, -g - h)
    if tag == 3:
        h = p["h"]
        return (-2 * h, h, h)
    if tag == 4:
        g = p["g"]
        return (g.group.identity, g, -g)
    if tag == 5:
        g = p["g"]
        return (g, g, g)
    if tag == 6:
        g = p["g"]
        return (g, g, 2 * g)
    if tag == 7:
        g = p["g"]
        return (g.group.identity, g, g)
    if tag == 8:
        g, h = p["g"], p["h"]
        return (g, h, g + h)
    raise DescriptorError(f"type {tag} is not elementary")


def admissible_params(tag: int, group: AbelianGroup) -> Iterator[GradingDescriptor]:
    """Every valid descriptor of the given type over the group, in lexicographic order."""
    names = PARAM_NAMES[tag]
    if tag in FIXED_GROUPS and group.invariant_factors() != FIXED_GROUPS[tag]:
        return
    for values in itertools.product(group.elements(), repeat=len(names)):
        d = GradingDescriptor(tag, dict(zip(names, values)))
        try:
            validate_descriptor(d, group)
        except DescriptorError:
            continue
        yield d


def sweep_groups(max_order: int = 12) -> list[AbelianGroup]:
    """Z_n and Z_n x Z_m (n <= m), plus Z2^3, with order in [2, max_order]."""
    out = [AbelianGroup((n,)) for n in range(2, max_order + 1)]
    for n in range(2, max_order + 1):
        for m in range(n, max_order // n + 1):
            out.append(AbelianGroup((n, m)))
    if max_order >= 8:
        out.append(AbelianGroup((2, 2, 2)))
    return out


def sweep(max_order: int = 12) -> Iterator[tuple[GradingDescriptor, AbelianGroup]]:
    """All (descriptor, group) pairs of the test sweep for every type."""
    for group in sweep_groups(max_order):
        for tag in TYPE_TAGS:
            for d in admissible_params(tag, group):
                yield d, group
