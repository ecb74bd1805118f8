"""Exact computations with gradings of the split octonions and of G2 = Der(C)."""

from .abelian import (
    AbelianGroup,
    Character,
    GroupAutomorphism,
    GroupElement,
    automorphisms,
    char_eval,
    characters,
    elem_order,
    make_group,
)
from .catalog import GradingDescriptor, admissible_params, canonical_c_grading, elementary_tuple
from .classify import classify_c_grading, iso_check, signature
from .derivations import (
    Derivation,
    bracket,
    d_T,
    derivation_space,
    inner_derivation,
    is_derivation,
    span_check,
)
from .grading import (
    Grading,
    character_automorphism,
    elementary_L_grading,
    grading_from_action,
    induce_on_L,
    type9_L_grading,
    verify_grading,
)
from .linalg import Subspace, nullspace, rref, subspace_ops
from .octonion import Octonion, bilinear, check_table, conjugate, norm, oct_mul, zorn_mul
from .scalar import Cyc, cyc, zeta

__version__ = "0.1.0"
