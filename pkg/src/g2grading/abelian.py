"""Finite abelian groups given as products of cyclic factors.

The group law is written additively: ``g + h`` is the multiplicative product
``gh`` and ``-g`` is ``g^{-1}``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from math import gcd, lcm, prod

from .errors import CapacityError, DomainError, InvalidGroupError
from .scalar import zeta

MAX_AUT_ORDER = 64


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple[int, ...]

    def __post_init__(self):
        facs = tuple(int(f) for f in self.factors)
        for f in facs:
            if f < 2:
                raise InvalidGroupError(f"cyclic factor orders must be >= 2, got {f}")
        object.__setattr__(self, "factors", facs)

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def exponent(self) -> int:
        return reduce(lcm, self.factors, 1)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    def element(self, residues) -> "GroupElement":
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(self.factors):
            raise DomainError(f"element {list(residues)} does not fit factors {list(self.factors)}")
        return GroupElement(self, tuple(r % f for r, f in zip(residues, self.factors)))

    def generators(self) -> tuple["GroupElement", ...]:
        """The canonical generators (unit residue vectors)."""
        n = len(self.factors)
        return tuple(self.element([int(i == j) for j in range(n)]) for i in range(n))

    def elements(self) -> tuple["GroupElement", ...]:
        """All elements in lexicographic residue order (identity first)."""
        return _elements(self)

    def __iter__(self):
        return iter(self.elements())

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        return isinstance(g, GroupElement) and g.group == self

    def subgroup_generated(self, gens) -> frozenset["GroupElement"]:
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x + g
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def is_generated_by(self, gens) -> bool:
        return len(self.subgroup_generated(gens)) == self.order

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors d1 | d2 | ... of the group (empty for the trivial group)."""
        powers: dict[int, list[int]] = {}
        for f in self.factors:
            for p, e in _factorize(f).items():
                powers.setdefault(p, []).append(p**e)
        for lst in powers.values():
            lst.sort(reverse=True)
        length = max((len(v) for v in powers.values()), default=0)
        out = []
        for i in range(length):
            out.append(prod(v[i] for v in powers.values() if i < len(v)))
        return tuple(sorted(out))

    def to_json(self) -> dict:
        return {"factors": list(self.factors)}

    def __repr__(self):
        if not self.factors:
            return "AbelianGroup(trivial)"
        return "AbelianGroup(" + " x ".join(f"Z{f}" for f in self.factors) + ")"


@lru_cache(maxsize=None)
def _elements(G: AbelianGroup):
    return tuple(GroupElement(G, r) for r in itertools.product(*(range(f) for f in G.factors)))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True, order=False)
class GroupElement:
    group: AbelianGroup
    residues: tuple[int, ...]

    def _same(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.group != self.group:
            raise DomainError(f"elements of different groups: {self.group} and {other.group}")

    def __add__(self, other):
        if self._same(other) is NotImplemented:
            return NotImplemented
        return GroupElement(
            self.group,
            tuple((a + b) % f for a, b, f in zip(self.residues, other.residues, self.group.factors)),
        )

    def __neg__(self):
        return GroupElement(self.group, tuple((-a) % f for a, f in zip(self.residues, self.group.factors)))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return GroupElement(self.group, tuple((k * a) % f for a, f in zip(self.residues, self.group.factors)))

    @property
    def is_identity(self) -> bool:
        return not any(self.residues)

    @property
    def order(self) -> int:
        return elem_order(self)

    def sort_key(self):
        return self.residues

    def __lt__(self, other):
        return self.residues < other.residues

    def to_json(self) -> list[int]:
        return list(self.residues)

    def __repr__(self):
        return "(" + ",".join(map(str, self.residues)) + ")"


@dataclass(frozen=True)
class Character:
    """The character chi(g) = zeta_N^(sum_i e_i r_i N/f_i), N = exponent of the group."""

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __call__(self, g: GroupElement):
        return char_eval(self, g)

    def __mul__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise DomainError("characters of different groups")
        return Character(
            self.group,
            tuple((a + b) % f for a, b, f in zip(self.exponents, other.exponents, self.group.factors)),
        )

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def to_json(self) -> list[int]:
        return list(self.exponents)


@dataclass(frozen=True)
class GroupAutomorphism:
    group: AbelianGroup
    images: tuple[GroupElement, ...]

    def __call__(self, g: GroupElement) -> GroupElement:
        if g.group != self.group:
            raise DomainError("element is not in the automorphism's group")
        out = self.group.identity
        for r, img in zip(g.residues, self.images):
            if r:
                out = out + r * img
        return out

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        """self after other."""
        return GroupAutomorphism(self.group, tuple(self(x) for x in other.images))

    def inverse(self) -> "GroupAutomorphism":
        table = {self(g): g for g in self.group.elements()}
        return GroupAutomorphism(self.group, tuple(table[x] for x in self.group.generators()))

    @property
    def is_identity(self) -> bool:
        return self.images == self.group.generators()

    def to_json(self) -> list[list[int]]:
        return [x.to_json() for x in self.images]


def make_group(factors) -> AbelianGroup:
    return AbelianGroup(tuple(factors))


def elem_order(g: GroupElement) -> int:
    n = 1
    for r, f in zip(g.residues, g.group.factors):
        n = lcm(n, f // gcd(r, f))
    return n


@lru_cache(maxsize=None)
def characters(G: AbelianGroup) -> tuple[Character, ...]:
    """All characters of G, trivial first, in lexicographic exponent order."""
    return tuple(Character(G, e) for e in itertools.product(*(range(f) for f in G.factors)))


def char_eval(chi: Character, g: GroupElement):
    if chi.group != g.group:
        raise DomainError(f"character of {chi.group} evaluated on element of {g.group}")
    n = chi.group.exponent
    k = sum(e * r * (n // f) for e, r, f in zip(chi.exponents, g.residues, chi.group.factors))
    return zeta(n, k)


def _is_automorphism(G: AbelianGroup, images) -> bool:
    for img, f in zip(images, G.factors):
        if f % elem_order(img):
            return False
    # a well-defined endomorphism of a finite group is bijective iff surjective
    return G.is_generated_by(images)


@lru_cache(maxsize=None)
def automorphisms(G: AbelianGroup) -> tuple[GroupAutomorphism, ...]:
    """Every automorphism of G, by brute force over generator images.

    Enumeration is lexicographic in the tuple of images, so the identity is
    not necessarily first.
    """
    if G.order > MAX_AUT_ORDER:
        raise CapacityError(f"automorphism enumeration is limited to |G| <= {MAX_AUT_ORDER}")
    elems = G.elements()
    out = []
    for images in itertools.product(elems, repeat=len(G.factors)):
        if _is_automorphism(G, images):
            out.append(GroupAutomorphism(G, tuple(images)))
    return tuple(out)
