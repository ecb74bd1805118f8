"""Group gradings of C and of L = Der(C).

A :class:`Grading` maps group elements to subspaces of the ambient algebra.
Octonion gradings live in coordinates of the standard basis; G2 gradings
live in coordinates relative to the fixed basis returned by
:func:`~g2grading.derivations.derivation_space`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Mapping, Sequence

from . import linalg
from .abelian import AbelianGroup, Character, GroupElement, characters
from .derivations import G2_DIM, Derivation, d_T, derivation_space, e1_u, e2_v, matrix_unit
from .errors import DomainError, InconsistencyError
from .linalg import Subspace
from .octonion import DIM as OCT_DIM
from .octonion import MULT_TABLE, mul_coords
from .scalar import format_scalar, parse_scalar

OCTONION = "octonion"
G2 = "g2"
AMBIENT_DIMS = {OCTONION: OCT_DIM, G2: G2_DIM}


def ambient_dim(ambient: str) -> int:
    try:
        return AMBIENT_DIMS[ambient]
    except KeyError:
        raise DomainError(f"unknown ambient {ambient!r}") from None


def product_function(ambient: str) -> Callable:
    """Bilinear product on coordinate vectors: octonion product or Lie bracket."""
    if ambient == OCTONION:
        return mul_coords
    if ambient == G2:
        return derivation_space().bracket_coords
    raise DomainError(f"unknown ambient {ambient!r}")


@dataclass(frozen=True)
class Grading:
    group: AbelianGroup
    ambient: str
    components: Mapping[GroupElement, Subspace] = field(default_factory=dict)

    def __post_init__(self):
        n = ambient_dim(self.ambient)
        comps = {}
        for label, space in self.components.items():
            if label not in self.group:
                raise DomainError(f"label {label} is not an element of {self.group}")
            if space.ambient_dim != n:
                raise DomainError(f"component at {label} lives in dimension {space.ambient_dim}, expected {n}")
            if space.dim:
                comps[label] = space
        object.__setattr__(self, "components", dict(sorted(comps.items())))

    @classmethod
    def from_vectors(cls, group: AbelianGroup, ambient: str, spans: Mapping) -> "Grading":
        """Build from label -> spanning vectors; repeated labels are summed."""
        n = ambient_dim(ambient)
        return cls(group, ambient, {g: Subspace(n, vecs) for g, vecs in spans.items()})

    @property
    def dim(self) -> int:
        return ambient_dim(self.ambient)

    @property
    def support(self) -> tuple[GroupElement, ...]:
        return tuple(self.components)

    def component(self, label: GroupElement) -> Subspace:
        return self.components.get(label) or Subspace.zero(self.dim)

    def dims(self) -> dict[GroupElement, int]:
        return {g: s.dim for g, s in self.components.items()}

    def relabel(self, sigma) -> "Grading":
        """The grading with component sigma(g) equal to this grading's component g."""
        return Grading(self.group, self.ambient, {sigma(g): s for g, s in self.components.items()})

    @cached_property
    def _adapted(self):
        labels, cols = [], []
        for g, s in self.components.items():
            for v in s.basis:
                labels.append(g)
                cols.append(v)
        B = linalg.transpose(cols)
        return labels, B, linalg.inverse(B)

    @cached_property
    def projections(self) -> dict[GroupElement, tuple]:
        """Projection matrices onto each component along the others."""
        labels, B, Binv = self._adapted
        out = {}
        for g in self.components:
            idx = [i for i, lab in enumerate(labels) if lab == g]
            block = tuple(tuple(row[i] for i in idx) for row in B)
            out[g] = linalg.mat_mul(block, tuple(Binv[i] for i in idx))
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "ambient": self.ambient,
            "components": [
                {"label": g.to_json(), "basis": [[format_scalar(x) for x in v] for v in s.basis]}
                for g, s in self.components.items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Grading":
        """Parse the grading JSON schema; any spanning set is accepted per component."""
        try:
            group = AbelianGroup(tuple(data["group"]["factors"]))
            ambient = data["ambient"]
            n = ambient_dim(ambient)
            spans: dict = {}
            for comp in data["components"]:
                label = group.element(comp["label"])
                vecs = [tuple(parse_scalar(x) for x in v) for v in comp["basis"]]
                for v in vecs:
                    if len(v) != n:
                        raise DomainError(f"basis vector of length {len(v)} in ambient {ambient}")
                spans.setdefault(label, []).extend(vecs)
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed grading JSON: {exc!r}") from exc
        return cls.from_vectors(group, ambient, spans)


@dataclass(frozen=True)
class GradingReport:
    direct_sum: bool
    multiplicative: bool
    generates: bool
    reason: str | None = None
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.direct_sum and self.multiplicative and self.generates

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out = {
            "ok": self.ok,
            "direct_sum": self.direct_sum,
            "multiplicative": self.multiplicative,
            "support_generates": self.generates,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.witness:
            out["witness"] = self.witness
        return out


def verify_grading(G: Grading) -> GradingReport:
    """Check the direct sum, A_g A_h in A_{g+h}, and that the support generates.

    Violations are reported, never raised.
    """
    n = G.dim
    total = sum(s.dim for s in G.components.values())
    whole = Subspace(n, [v for s in G.components.values() for v in s.basis])
    direct = total == n and whole.dim == n
    generates = G.group.is_generated_by(G.support)
    reason = None
    if not direct:
        reason = f"components have total dimension {total} spanning {whole.dim}, expected {n}"
    elif not generates:
        reason = "support does not generate the group"

    mult = True
    witness = None
    prod = product_function(G.ambient)
    for g, A in G.components.items():
        for h, B in G.components.items():
            target = G.component(g + h)
            for x in A.basis:
                for y in B.basis:
                    p = prod(x, y)
                    if any(p) and not target.contains(p):
                        mult = False
                        witness = {
                            "gamma": g.to_json(),
                            "delta": h.to_json(),
                            "product_label": (g + h).to_json(),
                            "x": [format_scalar(c) for c in x],
                            "y": [format_scalar(c) for c in y],
                            "xy": [format_scalar(c) for c in p],
                        }
                        break
                if not mult:
                    break
            if not mult:
                break
        if not mult:
            break
    if not mult and reason is None:
        reason = f"product of components {witness['gamma']} and {witness['delta']} leaves component {witness['product_label']}"
    return GradingReport(direct, mult, generates, reason, witness)


# -- induction from C to Der(C) ---------------------------------------------------

def induce_on_L(Gc: Grading) -> Grading:
    """The G2 grading with L_d = L meet (End C)_d, for an octonion grading Gc."""
    if Gc.ambient != OCTONION:
        raise DomainError("induce_on_L needs an octonion grading")
    L = derivation_space()
    support = Gc.support
    deltas = sorted({b - a for a in support for b in support})
    # images[g][x] = for each basis derivation, the nonzero entries of B(x)
    images = {
        g: [
            [{k: c for k, c in enumerate(linalg.mat_vec(B.matrix, x)) if c} for B in L]
            for x in Gc.components[g].basis
        ]
        for g in support
    }
    annihilators: dict = {}
    comps = {}
    for delta in deltas:
        rows = []
        for g in support:
            tgt = g + delta
            if tgt not in annihilators:
                annihilators[tgt] = [
                    [(k, c) for k, c in enumerate(f) if c] for f in Gc.component(tgt).annihilator().basis
                ]
            funcs = annihilators[tgt]
            for imgs in images[g]:
                for f in funcs:
                    row = []
                    for img in imgs:
                        s = 0
                        for k, fk in f:
                            ik = img.get(k)
                            if ik is not None:
                                s += fk * ik
                        row.append(s)
                    if any(row):
                        rows.append(row)
        space = linalg.nullspace(rows, G2_DIM) if rows else Subspace.full(G2_DIM)
        if space.dim:
            comps[delta] = space
    result = Grading(Gc.group, G2, comps)
    total = sum(s.dim for s in result.components.values())
    if total != G2_DIM:
        raise InconsistencyError(f"induced components have total dimension {total}, not {G2_DIM}")
    return result


# -- character duality --------------------------------------------------------------

def character_automorphism(G: Grading, chi: Character) -> tuple:
    """The block-scalar map acting as chi(g) on the component at g."""
    if chi.group != G.group:
        raise DomainError("character and grading are over different groups")
    n = G.dim
    acc = [[Fraction(0)] * n for _ in range(n)]
    for g, P in G.projections.items():
        c = chi(g)
        for i in range(n):
            row = P[i]
            out = acc[i]
            for j in range(n):
                if row[j]:
                    out[j] = out[j] + c * row[j]
    return tuple(tuple(r) for r in acc)


def is_multiplicative(A, ambient: str) -> bool:
    """A(e_i e_j) == A(e_i) A(e_j) for all pairs of basis vectors."""
    n = ambient_dim(ambient)
    prod = product_function(ambient)
    cols = linalg.transpose(A)
    if ambient == OCTONION:
        # basis products are signed basis vectors, so A(e_i e_j) is a signed column
        zero = (Fraction(0),) * n
        for i in range(n):
            for j in range(n):
                cell = MULT_TABLE[i][j]
                if cell is None:
                    lhs = zero
                else:
                    s, k = cell
                    lhs = cols[k] if s > 0 else tuple(-x for x in cols[k])
                if any(a != b for a, b in zip(lhs, prod(cols[i], cols[j]))):
                    return False
        return True
    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = linalg.mat_vec(A, prod(unit[i], unit[j]))
            rhs = prod(cols[i], cols[j])
            if any(a != b for a, b in zip(lhs, rhs)):
                return False
    return True


def character_action(G: Grading) -> dict[Character, tuple]:
    return {chi: character_automorphism(G, chi) for chi in characters(G.group)}


def _generator_characters(group: AbelianGroup) -> list[Character]:
    r = group.rank
    return [Character(group, tuple(int(i == j) for j in range(r))) for i in range(r)]


def check_action(group: AbelianGroup, action: Mapping[Character, Sequence], ambient: str) -> None:
    """Raise DomainError unless the action is a homomorphism into automorphisms."""
    n = ambient_dim(ambient)
    chars = characters(group)
    missing = [c for c in chars if c not in action]
    if missing:
        raise DomainError(f"action is missing {len(missing)} characters")
    mats = {c: tuple(tuple(r) for r in action[c]) for c in chars}
    for c, A in mats.items():
        if len(A) != n or any(len(r) != n for r in A):
            raise DomainError(f"action matrices must be {n}x{n}")
    if mats[chars[0]] != linalg.identity(n):
        raise DomainError("the trivial character must act as the identity")
    for c, A in mats.items():
        if not is_multiplicative(A, ambient):
            raise DomainError(f"character {list(c.exponents)} does not act by an algebra automorphism")
    # closing the law on generators gives it for all pairs; A_1 = I gives invertibility
    for c in chars:
        for psi in _generator_characters(group):
            if linalg.mat_mul(mats[c], mats[psi]) != mats[c * psi]:
                raise DomainError(f"action is not a homomorphism at {list(c.exponents)} * {list(psi.exponents)}")


def grading_from_action(
    group: AbelianGroup, action: Mapping[Character, Sequence], ambient: str | None = None
) -> Grading:
    """Simultaneous eigenspaces A_g = {a : chi o a = chi(g) a for all chi}."""
    if ambient is None:
        size = len(next(iter(action.values())))
        ambient = {OCT_DIM: OCTONION, G2_DIM: G2}.get(size)
        if ambient is None:
            raise DomainError(f"cannot infer the ambient from {size}x{size} matrices")
    check_action(group, action, ambient)
    n = ambient_dim(ambient)
    gens = _generator_characters(group)
    comps = {}
    for g in group.elements():
        rows = []
        for psi in gens:
            A = action[psi]
            lam = psi(g)
            for i in range(n):
                rows.append(tuple(A[i][j] - lam if i == j else A[i][j] for j in range(n)))
        space = linalg.nullspace(rows, n) if rows else Subspace.full(n)
        if space.dim:
            comps[g] = space
    result = Grading(group, ambient, comps)
    total = sum(s.dim for s in result.components.values())
    if total != n:
        raise InconsistencyError(f"eigenspaces have total dimension {total}, expected {n}")
    return result


# -- explicit G2 gradings ---------------------------------------------------------

def _coords(D: Derivation) -> tuple:
    return derivation_space().coordinates(D)


def elementary_L_grading(t: Sequence[GroupElement]) -> Grading:
    """The G2 grading determined by the degrees (g1, g2, g3) of u1, u2, u3.

    Diagonal d_T sit at the identity, d_{E_ij} at g_j - g_i, D_{e1,u_i} at
    g_i and D_{e2,v_i} at -g_i.  Coinciding labels are merged.
    """
    if len(t) != 3:
        raise DomainError("an elementary grading needs three degrees")
    group = t[0].group
    if any(x.group != group for x in t):
        raise DomainError("degrees must lie in one group")
    spans: dict = {}

    def put(label, D):
        spans.setdefault(label, []).append(_coords(D))

    put(group.identity, d_T(linalg.mat_sub(matrix_unit(1, 1), matrix_unit(2, 2))))
    put(group.identity, d_T(linalg.mat_sub(matrix_unit(2, 2), matrix_unit(3, 3))))
    for i in range(3):
        for j in range(3):
            if i != j:
                put(t[j] - t[i], d_T(matrix_unit(i + 1, j + 1)))
    for i in range(3):
        put(t[i], e1_u(i + 1))
        put(-t[i], e2_v(i + 1))
    return Grading.from_vectors(group, G2, spans)


def _d(i, j, sign):
    return d_T(linalg.mat_add(matrix_unit(i, j), linalg.mat_scale(sign, matrix_unit(j, i))))


def type9_L_grading(g: GroupElement | None = None, h: GroupElement | None = None,
                    k: GroupElement | None = None) -> Grading:
    """The non-elementary G2 grading over Z2^3 with trivial identity component.

    Defaults to g, h, k = (1,0,0), (0,1,0), (0,0,1).  The two components
    built from index 3 carry the labels matching the octonion Type 9 grading
    of :mod:`g2grading.catalog` (gk holds v3 - u3 there), so the result
    agrees with the induced grading under the normative product.
    """
    if g is None:
        from .abelian import make_group

        Z = make_group([2, 2, 2])
        g, h, k = Z.generators()
    group = g.group
    E = matrix_unit
    spans = {
        h: [d_T(linalg.mat_sub(E(1, 1), E(2, 2))), d_T(linalg.mat_sub(E(1, 1), E(3, 3)))],
        g: [-e1_u(1) + e2_v(1), _d(2, 3, -1)],
        k: [-e1_u(2) + e2_v(2), _d(1, 3, -1)],
        h + g: [e1_u(1) + e2_v(1), _d(2, 3, 1)],
        h + k: [e1_u(2) + e2_v(2), _d(1, 3, 1)],
        g + k: [-e1_u(3) + e2_v(3), _d(1, 2, -1)],
        h + g + k: [e1_u(3) + e2_v(3), _d(1, 2, 1)],
    }
    return Grading.from_vectors(group, G2, {lab: [_coords(D) for D in Ds] for lab, Ds in spans.items()})
