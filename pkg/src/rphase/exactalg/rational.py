"""Exact division, polynomial gcd and reduced rational functions."""

from __future__ import annotations

from collections.abc import Mapping

from .poly import Poly, _sign_positions, conjugate as _conjugate_poly, poly_diff

__all__ = ["div_exact", "poly_gcd", "RationalFn", "rational_reduce"]


def _check_domain(p: Poly) -> None:
    signpos = _sign_positions(p.gens)
    if signpos and any(k[i] for k in p.terms for i in signpos):
        raise ValueError("division and gcd need an integral domain; sign parameters are not supported here")


def _monomial_content(p: Poly) -> tuple[int, ...]:
    it = iter(p.terms)
    m = list(next(it))
    for k in it:
        for i, e in enumerate(k):
            if e < m[i]:
                m[i] = e
    return tuple(m)


def _shift(p: Poly, m: tuple[int, ...]) -> Poly:
    if not any(m):
        return p
    return Poly._make(p.gens, {tuple(a - b for a, b in zip(k, m)): c for k, c in p.terms.items()})


def _grlex(k):
    return (sum(k), k)


def div_exact(a: Poly, b: Poly) -> Poly | None:
    """Return ``a / b`` if ``b`` divides ``a`` exactly, else ``None``."""
    if not b.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.gens != b.gens:
        gens, ta, tb = a._aligned(b)
        a, b = Poly._make(gens, ta), Poly._make(gens, tb)
    if not a.terms:
        return a
    _check_domain(a)
    _check_domain(b)
    ma, mb = _monomial_content(a), _monomial_content(b)
    a0, b0 = _shift(a, ma), _shift(b, mb)
    lk, lc = max(b0.terms.items(), key=lambda kv: _grlex(kv[0]))
    inv = lc.inverse()
    rem = dict(a0.terms)
    quot = {}
    bl = list(b0.terms.items())
    while rem:
        rk = max(rem, key=_grlex)
        dk = tuple(x - y for x, y in zip(rk, lk))
        if any(e < 0 for e in dk):
            return None
        qc = rem[rk] * inv
        quot[dk] = qc
        for k, c in bl:
            kk = tuple(x + y for x, y in zip(k, dk))
            v = rem.get(kk)
            v = -(qc * c) if v is None else v - qc * c
            if v:
                rem[kk] = v
            else:
                rem.pop(kk, None)
    q = Poly._make(a.gens, quot)
    return _shift(q, tuple(y - x for x, y in zip(ma, mb)))


def _monic(p: Poly) -> Poly:
    _, lc = p.leading_term()
    return p if lc == 1 else p.scale(lc.inverse())


def _content_in(p: Poly, name: str) -> Poly:
    coeffs = sorted(p.as_univariate(name).values(), key=len)
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant:
            break
    return g


def _prem(f: Poly, g: Poly, name: str) -> Poly:
    """Sparse pseudo-remainder of ``f`` by ``g`` in the variable ``name``."""
    d = g.degree(name)
    gu = g.as_univariate(name)
    lc = gu[d]
    var = Poly.gen(name, f.gens)
    r = f
    while r.terms:
        m = r.degree(name)
        if m < d:
            break
        lr = r.as_univariate(name)[m]
        r = r * lc - lr * g * var ** (m - d)
    return r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over Q(i)[generators] (parameters treated as variables)."""
    if f.gens != g.gens:
        gens, tf, tg = f._aligned(g)
        f, g = Poly._make(gens, tf), Poly._make(gens, tg)
    if not f.terms:
        return _monic(g) if g.terms else g
    if not g.terms:
        return _monic(f)
    _check_domain(f)
    _check_domain(g)
    mf, mg = _monomial_content(f), _monomial_content(g)
    mono = tuple(max(0, min(a, b)) if (a >= 0 and b >= 0) else 0 for a, b in zip(mf, mg))
    f, g = _shift(f, mf), _shift(g, mg)
    core = _gcd_core(f, g)
    if any(mono):
        core = Poly._make(core.gens, {tuple(a + b for a, b in zip(k, mono)): c for k, c in core.terms.items()})
    return _monic(core)


def _gcd_core(f: Poly, g: Poly) -> Poly:
    one = Poly.const(1, f.gens)
    if f.is_constant or g.is_constant:
        return one
    uf, ug = set(f.used_gens()), set(g.used_gens())
    for name in sorted(uf - ug):
        return poly_gcd(_content_in(f, name), g)
    for name in sorted(ug - uf):
        return poly_gcd(f, _content_in(g, name))
    if len(f) >= len(g):
        q = div_exact(f, g)
        if q is not None:
            return g
    else:
        q = div_exact(g, f)
        if q is not None:
            return f
    name = min(sorted(uf), key=lambda v: max(f.degree(v), g.degree(v)))
    cf, cg = _content_in(f, name), _content_in(g, name)
    c = poly_gcd(cf, cg)
    pf, pg = div_exact(f, cf), div_exact(g, cg)
    if pf.degree(name) < pg.degree(name):
        pf, pg = pg, pf
    while True:
        r = _prem(pf, pg, name)
        if not r.terms:
            pp = pg
            break
        if r.degree(name) == 0:
            pp = one
            break
        r = div_exact(r, _content_in(r, name))
        pf, pg = pg, r
    return c * _monic(pp)


class RationalFn:
    """Reduced quotient of polynomials with a monic, unit-free denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        red = rational_reduce(Poly.coerce(num), Poly.coerce(den))
        object.__setattr__(self, "num", red.num)
        object.__setattr__(self, "den", red.den)

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RationalFn":
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RationalFn is immutable")

    def __reduce__(self):
        return (RationalFn._make, (self.num, self.den))

    @classmethod
    def coerce(cls, value) -> "RationalFn":
        if isinstance(value, RationalFn):
            return value
        p = Poly.coerce(value)
        return cls._make(p, Poly.const(1, p.gens))

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self) -> bool:
        return bool(self.num.terms)

    def as_poly(self) -> Poly:
        if not self.den.is_constant:
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(self.den.constant_value().inverse())

    def __add__(self, other) -> "RationalFn":
        if not isinstance(other, RationalFn):
            other = RationalFn.coerce(other)
        if self.den == other.den:
            return rational_reduce(self.num + other.num, self.den)
        return rational_reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFn":
        return RationalFn._make(-self.num, self.den)

    def __sub__(self, other) -> "RationalFn":
        return self + (-RationalFn.coerce(other))

    def __rsub__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) - self

    def __mul__(self, other) -> "RationalFn":
        if not isinstance(other, RationalFn):
            other = RationalFn.coerce(other)
        return rational_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFn":
        other = RationalFn.coerce(other)
        if not other.num.terms:
            raise ZeroDivisionError("division by the zero rational function")
        return rational_reduce(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFn":
        return RationalFn.coerce(other) / self

    def __pow__(self, e: int) -> "RationalFn":
        if e < 0:
            return RationalFn._make(self.den, self.num) ** (-e) if self.num.terms else 1 / self
        return RationalFn._make(self.num ** e, self.den ** e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int)) or hasattr(other, "denominator"):
            other = RationalFn.coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def diff(self, name: str) -> "RationalFn":
        dn, dd = poly_diff(self.num, name), poly_diff(self.den, name)
        return rational_reduce(dn * self.den - self.num * dd, self.den * self.den)

    def conjugate(self, swap: Mapping[str, str] | None = None) -> "RationalFn":
        return rational_reduce(_conjugate_poly(self.num, swap), _conjugate_poly(self.den, swap))

    def subs(self, mapping) -> "RationalFn":
        return RationalFn.coerce(self.num.subs(mapping)) / RationalFn.coerce(self.den.subs(mapping))

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFn({str(self)!r})"


def _normalize_units(num: Poly, den: Poly) -> RationalFn:
    # parameter monomials and Gaussian constants are units
    nc = len(den.variables)
    m = _monomial_content(den)
    unit = (0,) * nc + m[nc:]
    num, den = _shift(num, unit), _shift(den, unit)
    _, lc = den.leading_term()
    if lc != 1:
        inv = lc.inverse()
        num, den = num.scale(inv), den.scale(inv)
    return RationalFn._make(num, den)


def rational_reduce(num: Poly, den: Poly) -> RationalFn:
    """Reduced representative of ``num/den``."""
    num, den = Poly.coerce(num), Poly.coerce(den)
    if not den.terms:
        raise ZeroDivisionError("zero denominator")
    if num.gens != den.gens:
        gens, tn, td = num._aligned(den)
        num, den = Poly._make(gens, tn), Poly._make(gens, td)
    if not num.terms:
        return RationalFn._make(num, Poly.const(1, num.gens))
    if den.is_constant or (len(den) == 1 and den.is_scalar):
        return _normalize_units(num, den)
    q = div_exact(num, den)
    if q is not None:
        return RationalFn._make(q, Poly.const(1, num.gens))
    g = poly_gcd(num, den)
    if not g.is_constant:
        num, den = div_exact(num, g), div_exact(den, g)
    return _normalize_units(num, den)

