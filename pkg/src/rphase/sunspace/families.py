"""SU(n)-invariant Poisson structures on C^n.

Coordinates are ``z1..zn, zb1..zbn`` with zb the complex conjugate of z.
An invariant bivector has the form Delta = (1/2) a pi0 + (1/2) b z∧Jz, with
a, b functions of t = ||z||^2 stored as polynomials in the coordinate ``t``.
pi0 + r_V is Poisson exactly when a a' + b (a - a' t) = t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..brackets import BracketTable, casimir_residual, table_from_bivector
from ..exactalg import GaussQ, Poly, RationalFn, coords, param, poly_diff, rational_reduce
from ..mvfield import (
    MultivectorField,
    complex_euler,
    complex_rotation,
    complex_space,
    contraction,
    norm_squared,
    pi0_complex,
    schouten_field,
    wedge,
)

EPS = param("eps")
SIGMA = param("sigma")
H = param("h")
T = Poly.gen("t")
HALF = GaussQ("1/2")
I_ = GaussQ(0, 1)


def _t_deriv(f: Poly) -> Poly:
    return poly_diff(f, "t") if "t" in f.variables else Poly.zero(("t",))


def _coerce_t(f) -> Poly:
    f = Poly.coerce(f)
    extra = [v for v in f.variables if v != "t"]
    if extra:
        raise ValueError(f"ansatz functions depend on t only, found {extra}")
    return f.with_gens(("t",))


@dataclass(frozen=True)
class DeltaAnsatz:
    """a(t), b(t) of the invariant bivector; b may be rational."""

    a: Poly
    b: Poly | RationalFn

    def __post_init__(self):
        object.__setattr__(self, "a", _coerce_t(self.a))
        if isinstance(self.b, RationalFn):
            if self.b.is_polynomial:
                object.__setattr__(self, "b", _coerce_t(self.b.as_poly()))
        else:
            object.__setattr__(self, "b", _coerce_t(self.b))

    @classmethod
    def solved(cls, a) -> "DeltaAnsatz":
        """b = (t - a a') / (a - a' t), the general solution for given a."""
        a = _coerce_t(a)
        ap = _t_deriv(a)
        den = a - ap * T
        if not den:
            raise ZeroDivisionError("a - a' t vanishes identically; b is not determined by a")
        return cls(a, rational_reduce(T - a * ap, den))

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.b, Poly)


def warunek_residual(d: DeltaAnsatz) -> Poly | RationalFn:
    """a a' + b (a - a' t) - t; zero iff [Delta, Delta] = ||z||^2 Jz∧pi0."""
    a, b = d.a, d.b
    ap = _t_deriv(a)
    if isinstance(b, RationalFn):
        res = RationalFn(a * ap - T) + b * (a - ap * T)
        return res.as_poly() if res.is_polynomial else res
    return a * ap + b * (a - ap * T) - T


def in_z(f: Poly, n: int) -> Poly:
    """Substitute t = ||z||^2."""
    return f.subs({"t": norm_squared(n)}) if "t" in f.variables else f.with_gens(complex_space(n))


def sun_r_field(n: int, eps: Poly | int = EPS) -> MultivectorField:
    """r_V = i eps sum_{j,k} sgn(k-j) (1/2 N_j∧N_k - 1/2 Nb_j∧Nb_k + |z^j|^2 d_k∧db_k).

    N_k = z^k d_k and Nb_k = zb^k db_k.
    """
    eps = Poly.coerce(eps)
    space = complex_space(n)
    v = coords(*space)
    z, zb = v[:n], v[n:]
    terms = []
    for j in range(n):
        for k in range(n):
            if j == k:
                continue
            sg = 1 if k > j else -1
            c = eps.scale(I_ * sg)
            terms.append((c.scale(HALF) * z[j] * z[k], (j, k)))
            terms.append((-(c.scale(HALF)) * zb[j] * zb[k], (n + j, n + k)))
            terms.append((c * z[j] * zb[j], (k, n + k)))
    return MultivectorField.from_terms(space, 2, terms)


def invariant_delta(d: DeltaAnsatz, n: int) -> MultivectorField:
    """(1/2) a pi0 + (1/2) b z∧Jz at t = ||z||^2."""
    if not d.is_polynomial:
        raise ValueError("field construction needs polynomial a and b")
    a, b = in_z(d.a, n), in_z(d.b, n)
    zjz = wedge(complex_euler(n), complex_rotation(n))
    return pi0_complex(n).scale(a.scale(HALF)) + zjz.scale(b.scale(HALF))


def corollary_defect(n: int, eps: Poly = EPS) -> MultivectorField:
    """[r_V, r_V] + eps^2 ||z||^2 Jz∧pi0."""
    r = sun_r_field(n, eps)
    jw = wedge(complex_rotation(n), pi0_complex(n)).scale(norm_squared(n) * eps * eps)
    return schouten_field(r, r) + jw


def bracket_square_defect(d: DeltaAnsatz, n: int) -> MultivectorField:
    """[Delta, Delta] - ||z||^2 Jz∧pi0."""
    delta = invariant_delta(d, n)
    jw = wedge(complex_rotation(n), pi0_complex(n)).scale(norm_squared(n))
    return schouten_field(delta, delta) - jw


# -- tangency and helper identities -------------------------------------------------------


def tangency_field(d: DeltaAnsatz, n: int) -> MultivectorField:
    """Delta(d ||z||^2); zero iff Delta is tangent to the spheres."""
    return contraction(invariant_delta(d, n), norm_squared(n))


def is_sphere_tangent(d: DeltaAnsatz, n: int) -> bool:
    return tangency_field(d, n).is_zero()


@dataclass(frozen=True)
class HelperCheck:
    aa: MultivectorField
    bb: MultivectorField
    ab: MultivectorField

    @property
    def holds(self) -> bool:
        return self.aa.is_zero() and self.bb.is_zero() and self.ab.is_zero()


def helper_identities(a, b, n: int = 2) -> HelperCheck:
    """Defects of the three Schouten identities behind the warunek condition.

    [a/2 pi0, a/2 pi0] = a a' Jz∧pi0, [b z∧Jz, b z∧Jz] = 0 and
    [a/2 pi0, b/2 z∧Jz] = b/2 (a - a' t) Jz∧pi0.
    """
    a, b = _coerce_t(a), _coerce_t(b)
    ap = _t_deriv(a)
    jw = wedge(complex_rotation(n), pi0_complex(n))
    zjz = wedge(complex_euler(n), complex_rotation(n))
    ha = pi0_complex(n).scale(in_z(a, n).scale(HALF))
    hb = zjz.scale(in_z(b, n).scale(HALF))
    bz = zjz.scale(in_z(b, n))
    aa = schouten_field(ha, ha) - jw.scale(in_z(a * ap, n))
    bb = schouten_field(bz, bz)
    ab = schouten_field(ha, hb) - jw.scale(in_z((b * (a - ap * T)).scale(HALF), n))
    return HelperCheck(aa, bb, ab)


# -- explicit families ---------------------------------------------------------------------


class InvalidFamily(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class SunFamily:
    case: str
    n: int
    params: dict
    ansatz: DeltaAnsatz
    table: BracketTable = field(repr=False)


def _scalar_inverse(h: Poly) -> Poly:
    if not h:
        raise InvalidFamily("h must be nonzero")
    if h.is_constant:
        return Poly.const(h.constant_value().inverse())
    if len(h.terms) == 1 and not h.variables:
        return h ** -1
    raise InvalidFamily(f"h = {h} must be a nonzero constant or a parameter monomial")


def _sign(sigma) -> Poly:
    sigma = Poly.coerce(sigma)
    if sigma.is_constant and sigma.constant_value() not in (GaussQ(1), GaussQ(-1)):
        raise InvalidFamily("sigma must be +1, -1 or the sign parameter")
    return sigma


def _family_field(d: DeltaAnsatz, n: int, eps: Poly) -> MultivectorField:
    return (sun_r_field(n, 1) + invariant_delta(d, n)).scale(eps)


def family_table(case: str, n: int, *, sigma=SIGMA, h=H, eps: Poly = EPS, a=None, b=None) -> SunFamily:
    """Bracket table eps (r_V + Delta) for the named case.

    ``sphere``: a = sigma t, b = sigma.  ``twisted``: a = h/eps + sigma t,
    b = -sigma, built as eps (r_V + Delta(sigma t, -sigma)) + (h/2) pi0 so that
    eps stays a polynomial parameter.  ``degree4``: a = h, b = t/h.
    ``custom``: caller supplies a and b.
    """
    if n < 2:
        raise InvalidFamily("n must be at least 2")
    eps = Poly.coerce(eps)
    if case == "sphere":
        s = _sign(sigma)
        d = DeltaAnsatz(T * s, s)
        fld = _family_field(d, n, eps)
        params = {"sigma": str(s)}
    elif case == "twisted":
        s = _sign(sigma)
        h = Poly.coerce(h)
        d = DeltaAnsatz(T * s, -s)
        fld = _family_field(d, n, eps) + pi0_complex(n).scale(h.scale(HALF))
        params = {"sigma": str(s), "h": str(h)}
    elif case == "degree4":
        h = Poly.coerce(h)
        hinv = _scalar_inverse(h)
        d = DeltaAnsatz(h.with_gens(("t",)), T * hinv)
        fld = _family_field(d, n, eps)
        params = {"h": str(h)}
    elif case == "custom":
        if a is None or b is None:
            raise InvalidFamily("custom case needs a and b")
        d = DeltaAnsatz(a, b)
        fld = _family_field(d, n, eps)
        params = {"a": str(d.a), "b": str(d.b)}
    else:
        raise InvalidFamily(f"unknown case {case!r}")
    tag = f"su({n}) {case} " + ", ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return SunFamily(case, n, params, d, table_from_bivector(fld, tag))


def sphere_casimir(fam: SunFamily | BracketTable) -> list:
    t = fam.table if isinstance(fam, SunFamily) else fam
    n = len(t.generators) // 2
    return casimir_residual(t, norm_squared(n))


def hermiticity_defect(t: BracketTable) -> list[tuple[str, str]]:
    """Pairs where conj({f,g}) differs from {conj f, conj g} on generators."""
    n = len(t.generators) // 2
    swap = {}
    for k in range(n):
        swap[t.generators[k]] = t.generators[n + k]
        swap[t.generators[n + k]] = t.generators[k]
    bad = []
    for a, b in combinations(t.generators, 2):
        lhs = t.entry(a, b).conjugate(swap)
        rhs = t.entry(swap[a], swap[b])
        if lhs != rhs:
            bad.append((a, b))
    return bad
