"""Lie algebra catalog, r-matrices, algebraic Schouten bracket and CYBE."""

from .algebras import (
    KINDS,
    LieAlgebraSpec,
    NotInAlgebra,
    UnsupportedAlgebra,
    build_algebra,
    commutator,
    custom_algebra,
    lorentz_matrix,
    sl2_complex,
    sl_to_sp,
    sl_to_sp_defect,
)
from .criterion import CriterionResult, DegeneratePoint, Stabilizer, basis_point, perp_criterion, stabilizer
from .rmatrices import (
    NoModification,
    PoincareOmega,
    TripleTensor,
    borel_r,
    canonical_trivector,
    cybe_defect,
    gl_w,
    identity_tensor,
    invariant_s,
    modified,
    omega_poincare,
    so_w,
    standard_r,
    symmetric_modification,
    symmetry_defect,
)
from .tensors import AlgebraMismatch, TensorElement, algebraic_schouten, vector_wedge3

__all__ = [
    "KINDS",
    "AlgebraMismatch",
    "CriterionResult",
    "DegeneratePoint",
    "LieAlgebraSpec",
    "NoModification",
    "NotInAlgebra",
    "PoincareOmega",
    "Stabilizer",
    "TensorElement",
    "TripleTensor",
    "UnsupportedAlgebra",
    "algebraic_schouten",
    "basis_point",
    "borel_r",
    "build_algebra",
    "canonical_trivector",
    "commutator",
    "custom_algebra",
    "cybe_defect",
    "gl_w",
    "identity_tensor",
    "invariant_s",
    "lorentz_matrix",
    "modified",
    "omega_poincare",
    "perp_criterion",
    "sl2_complex",
    "sl_to_sp",
    "sl_to_sp_defect",
    "so_w",
    "stabilizer",
    "standard_r",
    "symmetric_modification",
    "symmetry_defect",
    "vector_wedge3",
]
