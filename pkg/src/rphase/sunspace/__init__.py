"""SU(n)-invariant Poisson structures on C^n: r_V, the invariant ansatz and explicit families."""

from .families import (
    DeltaAnsatz,
    HelperCheck,
    InvalidFamily,
    SunFamily,
    bracket_square_defect,
    corollary_defect,
    family_table,
    helper_identities,
    hermiticity_defect,
    in_z,
    invariant_delta,
    is_sphere_tangent,
    sphere_casimir,
    sun_r_field,
    tangency_field,
    warunek_residual,
)

__all__ = [
    "DeltaAnsatz", "HelperCheck", "InvalidFamily", "SunFamily", "bracket_square_defect", "corollary_defect",
    "family_table", "helper_identities", "hermiticity_defect", "in_z", "invariant_delta", "is_sphere_tangent",
    "sphere_casimir", "sun_r_field", "tangency_field", "warunek_residual",
]
