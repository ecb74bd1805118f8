"""Exact linear algebra over Q and Q(zeta_N).

Matrices are tuples of row tuples holding ``Fraction`` or ``Cyc`` entries.
Elimination skips zero entries, which keeps the large but very sparse
constraint systems used elsewhere in the package cheap.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

Vector = tuple
Matrix = tuple  # tuple of row tuples

ZERO = Fraction(0)
ONE = Fraction(1)


def _exact(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        raise TypeError("floating-point entries are not allowed")
    return x


def _row_reduce(rows: Iterable[Sequence], ncols: int):
    work = [list(r) for r in rows if any(r)]
    for r in work:
        if len(r) != ncols:
            raise DomainError(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        prow = work[r]
        p = prow[c]
        if p != 1:
            inv = ONE / _exact(p)
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                row = work[i]
                f = row[c]
                if f:
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    basis = tuple(tuple(Fraction(x) if type(x) is int else x for x in row) for row in work[:r])
    return basis, tuple(pivots)


def rref(M: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Reduced row-echelon form with zero rows removed (rows = rank)."""
    if ncols is None:
        ncols = len(M[0]) if len(M) else 0
    return _row_reduce(M, ncols)[0]


def rank(M: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(M, ncols))


class Subspace:
    """A subspace of F^n stored by its canonical reduced echelon basis.

    Two subspaces compare equal exactly when their canonical bases agree.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        basis, pivots = _row_reduce(vectors, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, identity(n))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"

    def _check(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise DomainError(
                f"ambient dimension mismatch: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def residue(self, v: Sequence) -> list:
        """v minus its echelon reduction against the basis (zero iff v is inside)."""
        if len(v) != self.ambient_dim:
            raise DomainError(f"vector of length {len(v)} in ambient {self.ambient_dim}")
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            f = w[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        w[j] = w[j] - f * x
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.residue(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the canonical basis; v must lie in the subspace."""
        if not self.contains(v):
            raise DomainError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __le__(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def annihilator(self) -> "Subspace":
        """Linear functionals (as row vectors) vanishing on the subspace."""
        return nullspace(self.basis, self.ambient_dim) if self.basis else Subspace.full(self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        constraints = self.annihilator().basis + other.annihilator().basis
        if not constraints:
            return Subspace.full(self.ambient_dim)
        return nullspace(constraints, self.ambient_dim)

    __and__ = intersect


def nullspace(M: Sequence[Sequence], ncols: int | None = None) -> Subspace:
    """Solution space of M x = 0 as a :class:`Subspace` of F^ncols."""
    if ncols is None:
        ncols = len(M[0])
    R, pivots = _row_reduce(M, ncols)
    pivset = set(pivots)
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(R, pivots):
            if row[f]:
                v[p] = -row[f]
        vecs.append(v)
    return Subspace(ncols, vecs)


def subspace_ops(A: Subspace, B: Subspace, op: str):
    """Dispatch for ``intersect``, ``sum``, ``equals`` and ``contains`` (B <= A)."""
    A._check(B)
    if op == "intersect":
        return A.intersect(B)
    if op == "sum":
        return A + B
    if op == "equals":
        return A == B
    if op == "contains":
        return B <= A
    raise ValueError(f"unknown subspace operation {op!r}")


# -- dense matrix helpers -------------------------------------------------------

def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return tuple((ZERO,) * cols for _ in range(rows))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append(tuple(_dot_sparse(nz, col) for col in Bt))
    return tuple(out)


def _dot_sparse(nz, col):
    s = ZERO
    for k, a in nz:
        b = col[k]
        if b:
            s = s + a * b
    return s


def mat_vec(A: Matrix, v: Sequence) -> Vector:
    nz = [(k, x) for k, x in enumerate(v) if x]
    return tuple(_dot_sparse(nz, row) for row in A)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(c, A: Matrix) -> Matrix:
    return tuple(tuple(c * a if a else ZERO for a in row) for row in A)


def trace(A: Matrix):
    s = ZERO
    for i, row in enumerate(A):
        s = s + row[i]
    return s


def det(A: Matrix):
    """Determinant by fraction-exact elimination."""
    n = len(A)
    work = [[_exact(x) for x in r] for r in A]
    d = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if work[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            d = -d
        p = work[c][c]
        d = d * p
        for i in range(c + 1, n):
            f = work[i][c]
            if f:
                f = f / p
                for j in range(c, n):
                    if work[c][j]:
                        work[i][j] = work[i][j] - f * work[c][j]
    return d


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [tuple(A[i]) + identity(n)[i] for i in range(n)]
    R, pivots = _row_reduce(aug, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(R) != n:
        raise DomainError("matrix is singular")
    return tuple(row[n:] for row in R)
