"""Polynomial multivector fields, fundamental fields of actions and the Schouten bracket."""

from .actions import (
    ActionMismatch,
    ActionSpec,
    cotangent_action,
    default_action,
    fundamental_field,
    fundamental_vector,
    omega_at,
    omega_vanishes_at,
)
from .constants import (
    complex_euler,
    complex_rotation,
    complex_space,
    cotangent_space,
    norm_squared,
    pi0_complex,
    pi0_cotangent,
    realify_bivector_n1,
)
from .fields import (
    MultivectorField,
    SpaceMismatch,
    contraction,
    coordinate_vector,
    evaluate_at,
    schouten_field,
    vector_bracket,
    wedge,
    wedge_all,
)

__all__ = [
    "ActionMismatch", "ActionSpec", "MultivectorField", "SpaceMismatch", "complex_euler", "complex_rotation",
    "complex_space", "contraction", "coordinate_vector", "cotangent_action", "cotangent_space", "default_action",
    "evaluate_at", "fundamental_field", "omega_at", "omega_vanishes_at", "fundamental_vector", "norm_squared", "pi0_complex", "pi0_cotangent",
    "realify_bivector_n1", "schouten_field", "vector_bracket", "wedge", "wedge_all",
]
