"""Poisson bracket tables, Jacobi and Casimir checks, and phase-space constructors."""

from .cotangent import (
    NotAntisymmetric,
    cotangent_table,
    general_cotangent_table,
    gl_general_table,
    quadratic_cotangent_table,
    slxx_table,
    so_general_table,
    sp_wr_table,
    triangular_cotangent_table,
    xxpp_mixed_table,
    xxpp_mixed_table,
)
from .tables import (
    BracketMatrix,
    BracketTable,
    LagrangianCheck,
    Residual,
    SingularPoint,
    bivector_from_table,
    bracket,
    bracket_matrix_at,
    casimir_residual,
    is_casimir,
    is_poisson,
    jacobiator,
    lagrangian_section_check,
    nonzero_residuals,
    projection_consistent,
    split_xp,
    table_from_bivector,
    x_projection,
)

__all__ = [
    "BracketMatrix", "BracketTable", "LagrangianCheck", "NotAntisymmetric", "Residual", "SingularPoint",
    "bivector_from_table", "bracket", "bracket_matrix_at", "casimir_residual", "cotangent_table",
    "general_cotangent_table", "gl_general_table", "is_casimir", "is_poisson", "jacobiator",
    "lagrangian_section_check", "nonzero_residuals", "projection_consistent", "quadratic_cotangent_table",
    "slxx_table", "so_general_table", "sp_wr_table", "split_xp", "table_from_bivector",
    "triangular_cotangent_table", "x_projection", "xxpp_mixed_table",
]
