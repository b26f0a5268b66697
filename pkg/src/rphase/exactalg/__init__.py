"""Exact coefficient arithmetic: Gaussian rationals, polynomials with formal
parameters, reduced rational functions, and a canonical text form."""

from .gauss import GaussQ, I_UNIT, ONE, ZERO
from .linalg import det_poly, nullspace, rank, rref, solve_in_span
from .parse import ParseError, parse_poly
from .poly import (
    I,
    Poly,
    Scalar,
    conjugate,
    coords,
    declare_parameter,
    is_parameter,
    param,
    parameter_kind,
    poly_diff,
    render,
)
from .rational import RationalFn, div_exact, poly_gcd, rational_reduce

__all__ = [
    "GaussQ",
    "I_UNIT",
    "ONE",
    "ZERO",
    "I",
    "Poly",
    "Scalar",
    "RationalFn",
    "ParseError",
    "conjugate",
    "coords",
    "declare_parameter",
    "det_poly",
    "div_exact",
    "is_parameter",
    "nullspace",
    "param",
    "parameter_kind",
    "parse_poly",
    "poly_diff",
    "poly_gcd",
    "rank",
    "rational_reduce",
    "render",
    "rref",
    "solve_in_span",
]
