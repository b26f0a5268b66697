"""Phase-space bracket tables on T*V built from r and w = r + s."""

from __future__ import annotations

from itertools import combinations

from ..exactalg import GaussQ, Poly, coords, param
from ..liealg import (
    NoModification,
    TensorElement,
    build_algebra,
    identity_tensor,
    invariant_s,
    standard_r,
    symmetry_defect,
)
from ..mvfield import cotangent_space, default_action, fundamental_field, pi0_cotangent
from .tables import BracketTable, table_from_bivector

EPS = param("eps")


class NotAntisymmetric(ValueError):
    pass


def _endv(t: TensorElement) -> TensorElement:
    return t.to_endv()


def _check_antisymmetric(r: TensorElement) -> None:
    for (j, k, l, m), v in r.coeffs.items():
        other = r.coeffs.get((k, j, m, l))
        if other is None or other != -v:
            raise NotAntisymmetric(f"r^{{{j + 1}{k + 1}}}_{{{l + 1}{m + 1}}} is not minus r^{{{k + 1}{j + 1}}}_{{{m + 1}{l + 1}}}")


def cotangent_table(r: TensorElement, w: TensorElement | None = None, *, canonical: bool = True,
                    provenance: str = "cotangent") -> BracketTable:
    """{x^j,x^k} = r x x, {p_l,p_m} = p p r, {x^k,p_l} = -delta + sum p_j w^{jk}_{lm} x^m.

    ``w`` defaults to ``r``; ``canonical=False`` drops the -delta term.
    """
    r = _endv(r)
    w = r if w is None else _endv(w)
    n = r.size or w.size
    space = cotangent_space(n)
    v = coords(*space)
    x, p = v[:n], v[n:]
    pairs = []
    for (j, k, l, m), c in r.coeffs.items():
        if j < k:
            pairs.append(((j, k), x[l] * x[m] * c))
        if l < m:
            pairs.append(((n + l, n + m), p[j] * p[k] * c))
    for (j, k, l, m), c in w.coeffs.items():
        pairs.append(((k, n + l), p[j] * x[m] * c))
    if canonical:
        for k in range(n):
            pairs.append(((k, n + k), Poly.const(-1)))
    return BracketTable.from_pairs(space, pairs, provenance)


def triangular_cotangent_table(r: TensorElement, provenance: str = "triangular pi0 + r_T*V") -> BracketTable:
    """pi0 + r_{T*V}; Poisson whenever r is triangular."""
    rr = _endv(r)
    _check_antisymmetric(rr)
    return cotangent_table(rr, rr, provenance=provenance)


def general_cotangent_table(r: TensorElement, s: TensorElement, provenance: str = "general w = r + s",
                            strict: bool = True) -> BracketTable:
    """pi0 + r_V + r_V* + (r + s)_{VV*}.

    ``s`` must be symmetric in its upper indices; ``strict=False`` skips the
    check so that off-symmetric perturbations can be probed for Jacobi failure.
    """
    s = _endv(s)
    d = symmetry_defect(s)
    if strict and not d.is_zero():
        witness = min(d.coeffs)
        raise NoModification(witness, "s is not symmetric in its upper indices")
    rr = _endv(r)
    return cotangent_table(rr, rr + s, provenance=provenance)


def quadratic_cotangent_table(r: TensorElement, w: TensorElement, provenance: str = "quadratic part") -> BracketTable:
    return cotangent_table(r, w, canonical=False, provenance=provenance)


# -- explicit tables from the sl(n) phase-space construction -------------------------------


def slxx_table(n: int, eps: Poly = EPS) -> BracketTable:
    """{x^j, x^k} = eps x^j x^k for j < k."""
    space = tuple(f"x{j}" for j in range(1, n + 1))
    x = coords(*space)
    return BracketTable.from_pairs(space, [((j, k), x[j] * x[k] * eps) for j, k in combinations(range(n), 2)], "slxx")


def xxpp_mixed_table(n: int, eps: Poly = EPS, canonical: bool = True) -> BracketTable:
    """Quadratic sl(n) phase-space brackets, with the -delta term when ``canonical``."""
    space = cotangent_space(n)
    v = coords(*space)
    x, p = v[:n], v[n:]
    pairs = []
    for j, k in combinations(range(n), 2):
        pairs.append(((j, k), x[j] * x[k] * eps))
        pairs.append(((n + j, n + k), -(p[j] * p[k] * eps)))
    for j in range(n):
        diag = Poly.zero(space)
        for i in range(n):
            weight = 1 - (0 if i == j else (1 if i > j else -1))
            if weight:
                diag = diag + x[i] * p[i] * weight
        for k in range(n):
            val = x[j] * p[k]
            if j == k:
                val = val + diag
            pairs.append(((j, n + k), val * eps))
        if canonical:
            pairs.append(((j, n + j), Poly.const(-1)))
    return BracketTable.from_pairs(space, pairs, "xxpp+mixed1" if canonical else "xxpp+mixed")


def sp_wr_table(n: int, eps: Poly = EPS, canonical: bool = True) -> BracketTable:
    """Fundamental field of the standard sp(n) r-matrix on T*V, plus pi0."""
    g = build_algebra("sp", n)
    field = fundamental_field(standard_r(g, eps), default_action(g))
    if canonical:
        field = field + pi0_cotangent(n)
    return table_from_bivector(field, "sp standard r + pi0" if canonical else "sp standard r")


def gl_general_table(n: int, eps: Poly = EPS, lam: Poly | None = None, strict: bool = True) -> BracketTable:
    """General table for gl(n) with s_lambda = s + lambda I(x)I (lambda defaults to eps)."""
    g = build_algebra("gl", n)
    lam = eps if lam is None else lam
    s = invariant_s(g, eps).to_endv() + identity_tensor(n).scale(lam)
    return general_cotangent_table(standard_r(g, eps), s, provenance=f"gl({n}) general, lambda = {lam}", strict=strict)


def so_general_table(n: int, eps: Poly = EPS, lam: Poly | None = None, strict: bool = True) -> BracketTable:
    """General table for so(n) with w_lambda = r - i s_lambda."""
    g = build_algebra("so", n)
    lam = eps if lam is None else lam
    s = (invariant_s(g, eps).to_endv() + identity_tensor(n).scale(lam)).scale(GaussQ(0, -1))
    return general_cotangent_table(standard_r(g, eps), s, provenance=f"so({n}) general, w = r - i s_lambda", strict=strict)
