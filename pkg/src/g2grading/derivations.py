"""The derivation algebra L = Der(C), a Lie algebra of type G2.

A derivation is an 8x8 matrix ``M`` acting on octonion coordinate columns:
``M[i][j]`` is the e_i-coefficient of the image of the j-th basis vector.
L is computed as the solution space of the Leibniz constraints on basis
pairs; the classical spanning set is then checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from . import linalg
from .errors import DomainError, InconsistencyError
from .linalg import Subspace
from .octonion import DIM, E1, E2, MULT_TABLE, U, V, Octonion, mul_coords
from .scalar import format_scalar, parse_scalar

G2_DIM = 14
ZERO = Fraction(0)


def _as_matrix(M) -> tuple:
    return tuple(tuple(Fraction(x) if isinstance(x, int) else x for x in row) for row in M)


@dataclass(frozen=True)
class Derivation:
    matrix: tuple

    def __post_init__(self):
        m = _as_matrix(self.matrix)
        if len(m) != DIM or any(len(r) != DIM for r in m):
            raise DomainError("a derivation of C is an 8x8 matrix")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vector(cls, v: Sequence) -> "Derivation":
        return cls(tuple(tuple(v[DIM * i:DIM * (i + 1)]) for i in range(DIM)))

    @property
    def vector(self) -> tuple:
        """Row-major flattening (64 entries)."""
        return tuple(x for row in self.matrix for x in row)

    def __call__(self, x: Octonion) -> Octonion:
        return Octonion(linalg.mat_vec(self.matrix, x.coords))

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(linalg.mat_add(self.matrix, other.matrix))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(linalg.mat_sub(self.matrix, other.matrix))

    def __neg__(self) -> "Derivation":
        return Derivation(linalg.mat_scale(-1, self.matrix))

    def __rmul__(self, c) -> "Derivation":
        return Derivation(linalg.mat_scale(c, self.matrix))

    def __bool__(self):
        return any(any(r) for r in self.matrix)

    def is_derivation(self) -> bool:
        return is_derivation(self.matrix)

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(x) for x in row] for row in self.matrix]

    @classmethod
    def from_json(cls, data) -> "Derivation":
        return cls(tuple(tuple(parse_scalar(x) for x in row) for row in data))


def column(M, j: int) -> list:
    return [M[i][j] for i in range(len(M))]


def is_derivation(M) -> bool:
    """Leibniz rule D(xy) = D(x)y + xD(y) on all 64 basis pairs."""
    M = _as_matrix(M)
    cols = [column(M, j) for j in range(DIM)]
    basis = [[Fraction(int(i == j)) for j in range(DIM)] for i in range(DIM)]
    for i in range(DIM):
        for j in range(DIM):
            cell = MULT_TABLE[i][j]
            if cell is None:
                lhs = [ZERO] * DIM
            else:
                s, k = cell
                lhs = [s * c for c in cols[k]]
            a = mul_coords(cols[i], basis[j])
            b = mul_coords(basis[i], cols[j])
            if any(l != x + y for l, x, y in zip(lhs, a, b)):
                return False
    return True


def leibniz_system() -> tuple:
    """The 512x64 linear system whose solutions are the derivations of C.

    Unknown ``8*a + b`` is the matrix entry ``M[a][b]``; one row per basis
    pair (i, j) and output coordinate c.
    """
    rows = []
    for i in range(DIM):
        for j in range(DIM):
            for c in range(DIM):
                row = [0] * (DIM * DIM)
                cell = MULT_TABLE[i][j]
                if cell is not None:
                    s, k = cell
                    row[DIM * c + k] += s
                for a in range(DIM):
                    right = MULT_TABLE[a][j]
                    if right is not None and right[1] == c:
                        row[DIM * a + i] -= right[0]
                    left = MULT_TABLE[i][a]
                    if left is not None and left[1] == c:
                        row[DIM * a + j] -= left[0]
                rows.append(tuple(row))
    return tuple(rows)


class DerivationBasis:
    """The canonical basis of Der(C) and coordinates relative to it.

    The basis is the reduced echelon basis of the solution space, read as
    64-vectors, so coordinates of any derivation are its entries at the
    pivot positions.
    """

    def __init__(self, space: Subspace):
        if space.dim != G2_DIM:
            raise InconsistencyError(f"Der(C) has dimension {space.dim}, expected {G2_DIM}")
        self.space = space
        self.basis = tuple(Derivation.from_vector(v) for v in space.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, D: Derivation) -> bool:
        return self.space.contains(D.vector)

    def coordinates(self, D: Derivation) -> tuple:
        return self.space.coordinates(D.vector)

    def from_coordinates(self, c: Sequence) -> Derivation:
        vec = [ZERO] * (DIM * DIM)
        for coef, b in zip(c, self.space.basis):
            if coef:
                for k, x in enumerate(b):
                    if x:
                        vec[k] = vec[k] + coef * x
        return Derivation.from_vector(vec)

    @cached_property
    def structure_constants(self) -> tuple:
        """``sc[a][b]`` = coordinates of [B_a, B_b]."""
        out = []
        for A in self.basis:
            out.append(tuple(self.coordinates(bracket(A, B)) for B in self.basis))
        return tuple(out)

    def bracket_coords(self, x: Sequence, y: Sequence) -> tuple:
        sc = self.structure_constants
        out = [ZERO] * G2_DIM
        ynz = [(b, y[b]) for b in range(G2_DIM) if y[b]]
        for a in range(G2_DIM):
            xa = x[a]
            if not xa:
                continue
            row = sc[a]
            for b, yb in ynz:
                f = xa * yb
                for k, s in enumerate(row[b]):
                    if s:
                        out[k] = out[k] + f * s
        return tuple(out)

    def ad(self, x: Sequence) -> tuple:
        """Matrix of ad x in coordinates (columns are images of basis vectors)."""
        cols = [self.bracket_coords(x, [Fraction(int(i == j)) for j in range(G2_DIM)]) for i in range(G2_DIM)]
        return linalg.transpose(cols)

    def killing_matrix(self) -> tuple:
        unit = [[Fraction(int(i == j)) for j in range(G2_DIM)] for i in range(G2_DIM)]
        ads = [self.ad(e) for e in unit]
        return tuple(
            tuple(linalg.trace(linalg.mat_mul(ads[a], ads[b])) for b in range(G2_DIM)) for a in range(G2_DIM)
        )


@lru_cache(maxsize=None)
def derivation_space() -> DerivationBasis:
    return DerivationBasis(linalg.nullspace(leibniz_system(), DIM * DIM))


def left_mult(x: Octonion) -> tuple:
    return linalg.transpose([mul_coords(x.coords, Octonion.basis(j).coords) for j in range(DIM)])


def right_mult(x: Octonion) -> tuple:
    return linalg.transpose([mul_coords(Octonion.basis(j).coords, x.coords) for j in range(DIM)])


def _commutator(A, B):
    return linalg.mat_sub(linalg.mat_mul(A, B), linalg.mat_mul(B, A))


def inner_derivation(x: Octonion, y: Octonion) -> Derivation:
    """D_{x,y} = [x_L, y_L] + [x_L, y_R] + [x_R, y_R]."""
    xl, xr = left_mult(x), right_mult(x)
    yl, yr = left_mult(y), right_mult(y)
    m = linalg.mat_add(linalg.mat_add(_commutator(xl, yl), _commutator(xl, yr)), _commutator(xr, yr))
    return Derivation(m)


def matrix_unit(i: int, j: int) -> tuple:
    """E_ij as a 3x3 matrix, 1-based indices."""
    return tuple(tuple(Fraction(int((r, c) == (i - 1, j - 1))) for c in range(3)) for r in range(3))


def d_T(T) -> Derivation:
    """u -> uT, v -> -vT^t (row vectors), zero on e1 and e2."""
    T = _as_matrix(T)
    if len(T) != 3 or any(len(r) != 3 for r in T):
        raise DomainError("d_T needs a 3x3 matrix")
    if T[0][0] + T[1][1] + T[2][2] != 0:
        raise DomainError("d_T needs a traceless matrix")
    M = [[ZERO] * DIM for _ in range(DIM)]
    for i in range(3):
        for j in range(3):
            if T[i][j]:
                M[U[j]][U[i]] = T[i][j]
                M[V[i]][V[j]] = -T[i][j]
    return Derivation(tuple(tuple(r) for r in M))


def bracket(D1: Derivation, D2: Derivation) -> Derivation:
    return Derivation(_commutator(D1.matrix, D2.matrix))


def sl3_basis() -> tuple:
    """E_ij (i != j), E11 - E22, E22 - E33."""
    out = [matrix_unit(i, j) for i in range(1, 4) for j in range(1, 4) if i != j]
    out.append(linalg.mat_sub(matrix_unit(1, 1), matrix_unit(2, 2)))
    out.append(linalg.mat_sub(matrix_unit(2, 2), matrix_unit(3, 3)))
    return tuple(out)


@lru_cache(maxsize=None)
def d_T_bracket_sign() -> int:
    """The sign s with [d_T, d_S] = d_{s[T,S]}, fixed by exhaustion on an sl(3) basis."""
    basis = sl3_basis()
    for s in (1, -1):
        if all(
            bracket(d_T(T), d_T(S)) == d_T(linalg.mat_scale(s, _commutator(T, S)))
            for T in basis
            for S in basis
        ):
            return s
    raise InconsistencyError("no sign relates the d_T bracket to the matrix commutator")


def e1_u(i: int) -> Derivation:
    """D_{e1, u_i}, 1-based."""
    return inner_derivation(Octonion.basis(E1), Octonion.basis(U[i - 1]))


def e2_v(i: int) -> Derivation:
    """D_{e2, v_i}, 1-based."""
    return inner_derivation(Octonion.basis(E2), Octonion.basis(V[i - 1]))


@dataclass(frozen=True)
class SpanReport:
    dim_der: int
    dim_e1_u: int
    dim_e2_v: int
    dim_sl3: int
    dim_combined: int
    equals_der: bool
    killing_det: object

    @property
    def ok(self) -> bool:
        return (
            self.dim_der == G2_DIM
            and self.dim_combined == G2_DIM
            and self.equals_der
            and self.dim_sl3 == 8
            and self.killing_det != 0
        )

    def lines(self) -> list[str]:
        return [
            f"dim Der(C) = {self.dim_der}",
            f"span D_(e1,u_i): {self.dim_e1_u}, span D_(e2,v_j): {self.dim_e2_v}, span d_T: {self.dim_sl3}",
            f"combined span dimension = {self.dim_combined}, equals Der(C): {self.equals_der}",
            f"Killing form determinant = {format_scalar(self.killing_det)}",
        ]


def span_check() -> SpanReport:
    """Compare the classical spanning set with the computed Der(C)."""
    L = derivation_space()
    n = DIM * DIM
    us = [e1_u(i).vector for i in (1, 2, 3)]
    vs = [e2_v(i).vector for i in (1, 2, 3)]
    ts = [d_T(T).vector for T in sl3_basis()]
    combined = Subspace(n, us + vs + ts)
    report = SpanReport(
        dim_der=L.dim,
        dim_e1_u=Subspace(n, us).dim,
        dim_e2_v=Subspace(n, vs).dim,
        dim_sl3=Subspace(n, ts).dim,
        dim_combined=combined.dim,
        equals_der=combined == L.space,
        killing_det=linalg.det(L.killing_matrix()),
    )
    if not report.ok:
        raise InconsistencyError("span check failed: " + "; ".join(report.lines()))
    return report
