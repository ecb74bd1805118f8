"""The split octonions in the standard basis (e1, e2, u1, u2, u3, v1, v2, v3).

An element is the Zorn vector matrix [[alpha, u], [v, beta]], stored with
coordinates (alpha, beta, u1, u2, u3, v1, v2, v3).  The multiplication
table below is the normative definition of the product; the Zorn closed
form is fitted to it and checked against it.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InconsistencyError, TableInconsistencyError
from .scalar import format_scalar, parse_scalar

BASIS_NAMES = ("e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3")
E1, E2, U1, U2, U3, V1, V2, V3 = range(8)
U = (U1, U2, U3)
V = (V1, V2, V3)
DIM = 8

ZERO = Fraction(0)

# (sign, index) of the product of the row basis vector by the column one; None is 0.
_RAW_TABLE = """
e1: e1 0 u1 u2 u3 0 0 0
e2: 0 e2 0 0 0 v1 v2 v3
u1: 0 u1 0 v3 -v2 e1 0 0
u2: 0 u2 -v3 0 v1 0 e1 0
u3: 0 u3 v2 -v1 0 0 0 e1
v1: v1 0 e2 0 0 0 -u3 u2
v2: v2 0 0 e2 0 u3 0 -u1
v3: v3 0 0 0 e2 -u2 u1 0
"""


def _parse_table(raw: str):
    table = []
    for line in raw.strip().splitlines():
        _, cells = line.split(":")
        row = []
        for tok in cells.split():
            if tok == "0":
                row.append(None)
            elif tok.startswith("-"):
                row.append((-1, BASIS_NAMES.index(tok[1:])))
            else:
                row.append((1, BASIS_NAMES.index(tok)))
        table.append(tuple(row))
    return tuple(table)


MULT_TABLE = _parse_table(_RAW_TABLE)


@dataclass(frozen=True)
class Octonion:
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != DIM:
            raise ValueError(f"an octonion has 8 coordinates, got {len(self.coords)}")
        object.__setattr__(
            self, "coords", tuple(Fraction(c) if isinstance(c, int) else c for c in self.coords)
        )

    @classmethod
    def basis(cls, i: int) -> "Octonion":
        return cls(tuple(Fraction(int(i == j)) for j in range(DIM)))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((ZERO,) * DIM)

    @classmethod
    def one(cls) -> "Octonion":
        return cls.basis(E1) + cls.basis(E2)

    @classmethod
    def from_zorn(cls, alpha, u, v, beta) -> "Octonion":
        return cls((alpha, beta, *u, *v))

    @property
    def zorn(self):
        c = self.coords
        return c[E1], c[U1:U3 + 1], c[V1:V3 + 1], c[E2]

    def __add__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coords))

    def __rmul__(self, c):
        return Octonion(tuple(c * a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(tuple(a * other for a in self.coords))

    def __bool__(self):
        return any(self.coords)

    def conjugate(self) -> "Octonion":
        return conjugate(self)

    def norm(self):
        return norm(self)

    def trace(self):
        return self.coords[E1] + self.coords[E2]

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coords]

    @classmethod
    def from_json(cls, data) -> "Octonion":
        return cls(tuple(parse_scalar(s) for s in data))

    def __repr__(self):
        terms = []
        for c, name in zip(self.coords, BASIS_NAMES):
            if c:
                terms.append(f"{format_scalar(c)}*{name}")
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


def mul_coords(x, y) -> list:
    """Bilinear extension of the table on raw coordinate sequences."""
    out = [ZERO] * DIM
    ynz = [(j, b) for j, b in enumerate(y) if b]
    for i, a in enumerate(x):
        if not a:
            continue
        row = MULT_TABLE[i]
        for j, b in ynz:
            cell = row[j]
            if cell is not None:
                s, k = cell
                out[k] = out[k] + a * b if s > 0 else out[k] - a * b
    return out


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return Octonion(tuple(mul_coords(x.coords, y.coords)))


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def zorn_product(x: Octonion, y: Octonion, signs) -> Octonion:
    """Zorn closed form with adjustable signs (s_alpha, s_u, s_v, s_beta).

    (alpha, u; v, beta)(alpha', u'; v', beta') =
      (alpha alpha' + s_alpha (u, v'),  alpha u' + beta' u + s_u v x v';
       alpha' v + beta v' + s_v u x u',  beta beta' + s_beta (v, u'))
    """
    sa, su, sv, sb = signs
    a, u, v, b = x.zorn
    a2, u2, v2, b2 = y.zorn
    vv = _cross(v, v2)
    uu = _cross(u, u2)
    alpha = a * a2 + sa * _dot(u, v2)
    beta = b * b2 + sb * _dot(v, u2)
    new_u = tuple(a * p + b2 * q + su * r for p, q, r in zip(u2, u, vv))
    new_v = tuple(a2 * p + b * q + sv * r for p, q, r in zip(v, v2, uu))
    return Octonion.from_zorn(alpha, new_u, new_v, beta)


@lru_cache(maxsize=None)
def zorn_signs() -> tuple[int, int, int, int]:
    """The unique sign choice for which the Zorn form reproduces the table."""
    basis = [Octonion.basis(i) for i in range(DIM)]
    matches = []
    for signs in itertools.product((1, -1), repeat=4):
        if all(
            zorn_product(basis[i], basis[j], signs) == oct_mul(basis[i], basis[j])
            for i in range(DIM)
            for j in range(DIM)
        ):
            matches.append(signs)
    if len(matches) != 1:
        raise InconsistencyError(f"expected one Zorn sign convention matching the table, found {matches}")
    return matches[0]


def zorn_mul(x: Octonion, y: Octonion) -> Octonion:
    return zorn_product(x, y, zorn_signs())


def conjugate(x: Octonion) -> Octonion:
    a, u, v, b = x.zorn
    return Octonion.from_zorn(b, tuple(-t for t in u), tuple(-t for t in v), a)


def norm(x: Octonion):
    """The scalar n(x) with x * conj(x) = n(x) * 1."""
    p = oct_mul(x, conjugate(x)).coords
    if p[E1] != p[E2] or any(p[2:]):
        raise InconsistencyError(f"x * conj(x) is not a scalar for {x}")
    return p[E1]


def bilinear(x: Octonion, y: Octonion):
    """Linearized norm n(x, y) = n(x + y) - n(x) - n(y)."""
    return norm(x + y) - norm(x) - norm(y)


@dataclass(frozen=True)
class TableReport:
    entries_checked: int
    identity_products: int
    alternativity_pairs: int
    zorn_signs: tuple

    def lines(self) -> list[str]:
        return [
            f"{self.entries_checked}/64 table entries verified",
            f"identity e1+e2 verified on {self.identity_products} products",
            f"alternativity verified on {self.alternativity_pairs} basis pairs",
            "Zorn signs (alpha, u, v, beta) = " + ", ".join(f"{s:+d}" for s in self.zorn_signs),
        ]


def _expected(i, j) -> Octonion:
    cell = MULT_TABLE[i][j]
    if cell is None:
        return Octonion.zero()
    s, k = cell
    return s * Octonion.basis(k)


def check_table() -> TableReport:
    """Check the table against the Zorn form, the identity and alternativity.

    Raises :class:`TableInconsistencyError` naming the first bad cell.
    """
    basis = [Octonion.basis(i) for i in range(DIM)]
    signs = zorn_signs()
    entries = 0
    for i in range(DIM):
        for j in range(DIM):
            want = _expected(i, j)
            got = zorn_mul(basis[i], basis[j])
            if got != want or oct_mul(basis[i], basis[j]) != want:
                raise TableInconsistencyError((BASIS_NAMES[i], BASIS_NAMES[j]), want, got)
            entries += 1
    one = Octonion.one()
    ident = 0
    for i in range(DIM):
        if oct_mul(one, basis[i]) != basis[i]:
            raise TableInconsistencyError(("1", BASIS_NAMES[i]), basis[i], oct_mul(one, basis[i]))
        if oct_mul(basis[i], one) != basis[i]:
            raise TableInconsistencyError((BASIS_NAMES[i], "1"), basis[i], oct_mul(basis[i], one))
        ident += 2
    alt = 0
    for i in range(DIM):
        for j in range(DIM):
            x, y = basis[i], basis[j]
            xx = oct_mul(x, x)
            if oct_mul(x, oct_mul(x, y)) != oct_mul(xx, y):
                raise TableInconsistencyError((BASIS_NAMES[i], BASIS_NAMES[j]), oct_mul(xx, y), oct_mul(x, oct_mul(x, y)))
            if oct_mul(oct_mul(y, x), x) != oct_mul(y, xx):
                raise TableInconsistencyError((BASIS_NAMES[j], BASIS_NAMES[i]), oct_mul(y, xx), oct_mul(oct_mul(y, x), x))
            alt += 1
    return TableReport(entries, ident, alt, signs)


def format_table() -> str:
    """The multiplication table as aligned text."""
    width = 5
    head = " " * width + "".join(n.rjust(width) for n in BASIS_NAMES)
    lines = [head]
    for i in range(DIM):
        cells = []
        for cell in MULT_TABLE[i]:
            if cell is None:
                cells.append("0")
            else:
                s, k = cell
                cells.append(("-" if s < 0 else "") + BASIS_NAMES[k])
        lines.append(BASIS_NAMES[i].rjust(width) + "".join(c.rjust(width) for c in cells))
    return "\n".join(lines)
