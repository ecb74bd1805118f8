"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_N).

Rationals are plain :class:`fractions.Fraction` values.  A :class:`Cyc` holds
the residue of a polynomial in ``zeta_N`` modulo the N-th cyclotomic
polynomial, so every value has a unique canonical form and equality is exact.

Arithmetic results that happen to be rational are returned as ``Fraction``;
a ``Cyc`` instance therefore never represents a rational number.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError

__all__ = [
    "Cyc",
    "Fraction",
    "cyclotomic_poly",
    "cyc",
    "zeta",
    "is_scalar",
    "format_scalar",
    "parse_scalar",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Coefficient lists, lowest degree first; den is monic.
    num = list(num)
    dq = len(den) - 1
    out = [0] * (len(num) - dq)
    for k in range(len(num) - 1, dq - 1, -1):
        c = num[k]
        if c:
            out[k - dq] = c
            for i, d in enumerate(den):
                num[k - dq + i] -= c * d
    assert not any(num), "non-exact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    if n < 1:
        raise DomainError(f"cyclotomic polynomial needs n >= 1, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(poly: list, n: int) -> list:
    """Reduce a coefficient list modulo Phi_n in place; returns the low part."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    for k in range(len(poly) - 1, deg - 1, -1):
        c = poly[k]
        if c:
            base = k - deg
            for i in range(deg):
                a = phi[i]
                if a:
                    poly[base + i] -= c * a
            poly[k] = 0
    del poly[deg:]
    while len(poly) < deg:
        poly.append(Fraction(0))
    return poly


def cyc(n: int, coeffs) -> Fraction | "Cyc":
    """Build the element sum(coeffs[i] * zeta_n**i), canonically reduced.

    ``coeffs`` may be longer than phi(n); it is reduced modulo Phi_n.
    Returns a ``Fraction`` when the value is rational.
    """
    poly = [Fraction(c) for c in coeffs]
    poly = _reduce(poly, n)
    if not any(poly[1:]):
        return poly[0] if poly else Fraction(0)
    return Cyc._raw(n, tuple(poly))


def zeta(n: int, k: int = 1) -> Fraction | "Cyc":
    """The root of unity zeta_n**k, where zeta_n = exp(2 pi i / n)."""
    if n < 1:
        raise DomainError(f"zeta needs n >= 1, got {n}")
    k %= n
    return cyc(n, [0] * k + [1])


def _lift(poly, n: int, m: int) -> list:
    if n == m:
        return list(poly)
    step = m // n
    out = [Fraction(0)] * ((len(poly) - 1) * step + 1)
    for i, c in enumerate(poly):
        out[i * step] = c
    return _reduce(out, m)


class Cyc:
    """Irrational element of a cyclotomic field; build with :func:`cyc`."""

    __slots__ = ("n", "coeffs")

    n: int
    coeffs: tuple

    @classmethod
    def _raw(cls, n, coeffs):
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Cyc is immutable")

    # -- helpers -------------------------------------------------------------
    @staticmethod
    def _split(x):
        if isinstance(x, Cyc):
            return x.n, x.coeffs
        if isinstance(x, (int, Fraction)):
            return 1, (Fraction(x),)
        return None, None

    def _common(self, other):
        n2, p2 = self._split(other)
        if n2 is None:
            return None
        m = _lcm(self.n, n2)
        return m, _lift(self.coeffs, self.n, m), _lift(p2, n2, m)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        c = self._common(other)
        if c is None:
            return NotImplemented
        m, a, b = c
        return cyc(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(self.n, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._common(other)
        if c is None:
            return NotImplemented
        m, a, b = c
        return cyc(m, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Fraction(0)
            return Cyc._raw(self.n, tuple(c * other for c in self.coeffs))
        c = self._common(other)
        if c is None:
            return NotImplemented
        m, a, b = c
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return cyc(m, prod)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse, found by solving a * b = 1 over the power basis."""
        return _inverse(self.n, self.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of a cyclotomic scalar by zero")
            return Cyc._raw(self.n, tuple(c / other for c in self.coeffs))
        if isinstance(other, Cyc):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Fraction(1)
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False
        if not isinstance(other, Cyc):
            return NotImplemented
        m, a, b = self._common(other)
        return a == b

    __hash__ = None  # equal values may carry different conductors

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Cyc({format_scalar(self)})"

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.n)
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))


@lru_cache(maxsize=4096)
def _inverse(n: int, a: tuple):
    d = len(a)
    # column j is a * zeta^j reduced; solve M c = e_0
    cols = []
    for j in range(d):
        cols.append(_reduce([Fraction(0)] * j + list(a), n))
    rows = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
    for c in range(d):
        piv = next(r for r in range(c, d) if rows[r][c])
        rows[c], rows[piv] = rows[piv], rows[c]
        p = rows[c][c]
        rows[c] = [x / p for x in rows[c]]
        for r in range(d):
            if r != c and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return cyc(n, [rows[i][d] for i in range(d)])


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Cyc))


def format_scalar(x) -> str:
    """Render a scalar as ``p/q``, ``p`` or ``cyc(N):c0,c1,...``."""
    if isinstance(x, Cyc):
        return f"cyc({x.n}):" + ",".join(str(c) for c in x.coeffs)
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    raise TypeError(f"not an exact scalar: {x!r}")


_CYC_RE = re.compile(r"^cyc\((\d+)\):(.*)$")


def parse_scalar(text) -> Fraction | Cyc:
    """Inverse of :func:`format_scalar`; plain ints are accepted too."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"exact scalars are strings, got {text!r}")
    s = text.strip()
    m = _CYC_RE.match(s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"bad conductor in {text!r}")
        parts = [p for p in m.group(2).split(",")]
        return cyc(n, [Fraction(p.strip()) for p in parts])
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact scalar: {text!r}") from exc
