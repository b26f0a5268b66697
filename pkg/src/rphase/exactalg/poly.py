"""Sparse multivariate polynomials over the Gaussian rationals.

A :class:`Poly` carries an ordered tuple of generator names.  Generators are
either *coordinates* (the ring variables: ``x1``, ``p2``, ``z1``, ``zb1``,
``t``...) or *formal parameters* registered with :func:`declare_parameter`
(``eps``, ``lam``, ``h``, ``sigma``...).  Parameters belong to the coefficient
ring: they are never differentiated, they are fixed by conjugation, and they
may carry negative exponents (so ``1/h`` is a legal coefficient).  A
parameter declared with kind ``"sign"`` satisfies ``s**2 == 1``.

A polynomial without coordinates is a *scalar*; there is no separate class.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from operator import add
from typing import Union

from gmpy2 import mpq

from .gauss import ONE, ZERO, GaussQ, render_gauss, to_mpq

__all__ = [
    "Poly",
    "Scalar",
    "declare_parameter",
    "is_parameter",
    "parameter_kind",
    "param",
    "coords",
    "I",
    "poly_diff",
    "conjugate",
]

_PARAMETER_KINDS: dict[str, str] = {}
_PARAMETER_ORDER: dict[str, int] = {}


def declare_parameter(name: str, kind: str = "real") -> None:
    """Register ``name`` as a formal parameter of the coefficient ring."""
    if kind not in ("real", "sign"):
        raise ValueError(f"unknown parameter kind {kind!r}")
    if name == "i":
        raise ValueError("'i' is reserved for the imaginary unit")
    known = _PARAMETER_KINDS.get(name)
    if known is not None and known != kind:
        raise ValueError(f"parameter {name!r} already declared with kind {known!r}")
    if known is None:
        _PARAMETER_KINDS[name] = kind
        _PARAMETER_ORDER[name] = len(_PARAMETER_ORDER)


for _name in ("eps", "lam", "h", "a0", "b0"):
    declare_parameter(_name)
declare_parameter("sigma", "sign")


def is_parameter(name: str) -> bool:
    return name in _PARAMETER_KINDS


def parameter_kind(name: str) -> str | None:
    return _PARAMETER_KINDS.get(name)


# -- generator bookkeeping -------------------------------------------------

_CANON_CACHE: dict[tuple[str, ...], tuple[str, ...]] = {}
_MERGE_CACHE: dict[tuple[tuple[str, ...], tuple[str, ...]], tuple] = {}
_SIGN_CACHE: dict[tuple[str, ...], tuple[int, ...]] = {}
_NCOORD_CACHE: dict[tuple[str, ...], int] = {}


def _canonical_gens(gens: tuple[str, ...]) -> tuple[str, ...]:
    out = _CANON_CACHE.get(gens)
    if out is None:
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator names in {gens}")
        if "i" in gens:
            raise ValueError("'i' is reserved for the imaginary unit")
        cs = [g for g in gens if g not in _PARAMETER_KINDS]
        ps = sorted((g for g in gens if g in _PARAMETER_KINDS), key=_PARAMETER_ORDER.__getitem__)
        out = tuple(cs + ps)
        _CANON_CACHE[gens] = out
        _CANON_CACHE[out] = out
    return out


def _n_coords(gens: tuple[str, ...]) -> int:
    n = _NCOORD_CACHE.get(gens)
    if n is None:
        n = sum(1 for g in gens if g not in _PARAMETER_KINDS)
        _NCOORD_CACHE[gens] = n
    return n


def _sign_positions(gens: tuple[str, ...]) -> tuple[int, ...]:
    pos = _SIGN_CACHE.get(gens)
    if pos is None:
        pos = tuple(i for i, g in enumerate(gens) if _PARAMETER_KINDS.get(g) == "sign")
        _SIGN_CACHE[gens] = pos
    return pos


def _merge(g1: tuple[str, ...], g2: tuple[str, ...]):
    key = (g1, g2)
    hit = _MERGE_CACHE.get(key)
    if hit is None:
        seen = set(g1)
        merged = _canonical_gens(g1 + tuple(g for g in g2 if g not in seen))
        idx1 = tuple(merged.index(g) for g in g1)
        idx2 = tuple(merged.index(g) for g in g2)
        hit = (merged, idx1, idx2)
        _MERGE_CACHE[key] = hit
    return hit


def _remap(terms: dict, idx: tuple[int, ...], n: int) -> dict:
    if idx == tuple(range(n)):
        return terms
    out = {}
    for k, c in terms.items():
        new = [0] * n
        for pos, e in zip(idx, k):
            new[pos] = e
        out[tuple(new)] = c
    return out


def _reduce_signs(k: tuple[int, ...], signpos: tuple[int, ...]) -> tuple[int, ...]:
    if any(k[p] not in (0, 1) for p in signpos):
        k = list(k)
        for p in signpos:
            k[p] %= 2
        k = tuple(k)
    return k


Coefficient = Union[int, mpq, GaussQ]


class Poly:
    """Immutable sparse polynomial; see the module docstring."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, gens: Iterable[str] = (), terms: Mapping[tuple[int, ...], Coefficient] | None = None):
        gens = tuple(gens)
        canon = _canonical_gens(gens)
        raw = {}
        n = len(gens)
        ncoord = _n_coords(canon)
        for k, c in (terms or {}).items():
            k = tuple(int(e) for e in k)
            if len(k) != n:
                raise ValueError(f"exponent tuple {k} does not match generators {gens}")
            c = GaussQ.coerce(c)
            if c:
                raw[k] = raw.get(k, ZERO) + c
        if canon != gens:
            raw = _remap(raw, tuple(canon.index(g) for g in gens), n)
        for k in raw:
            if any(e < 0 for e in k[:ncoord]):
                raise ValueError("coordinates cannot carry negative exponents")
        signpos = _sign_positions(canon)
        if signpos:
            red = {}
            for k, c in raw.items():
                k = _reduce_signs(k, signpos)
                red[k] = red.get(k, ZERO) + c
            raw = red
        object.__setattr__(self, "gens", canon)
        object.__setattr__(self, "terms", {k: c for k, c in raw.items() if c})
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, gens: tuple[str, ...], terms: dict) -> "Poly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "gens", gens)
        object.__setattr__(obj, "terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly._make, (self.gens, self.terms))

    # -- construction helpers ----------------------------------------------

    @classmethod
    def zero(cls, gens: Iterable[str] = ()) -> "Poly":
        return cls._make(_canonical_gens(tuple(gens)), {})

    @classmethod
    def const(cls, value: Coefficient, gens: Iterable[str] = ()) -> "Poly":
        gens = _canonical_gens(tuple(gens))
        c = GaussQ.coerce(value)
        return cls._make(gens, {(0,) * len(gens): c} if c else {})

    @classmethod
    def gen(cls, name: str, gens: Iterable[str] | None = None) -> "Poly":
        gens = _canonical_gens(tuple(gens) if gens is not None else (name,))
        if name not in gens:
            raise ValueError(f"{name!r} is not among {gens}")
        k = [0] * len(gens)
        k[gens.index(name)] = 1
        return cls._make(gens, {tuple(k): ONE})

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls.const(value)

    # -- basic properties ---------------------------------------------------

    @property
    def variables(self) -> tuple[str, ...]:
        """Declared coordinate names (parameters excluded)."""
        return self.gens[: _n_coords(self.gens)]

    @property
    def parameters(self) -> tuple[str, ...]:
        return self.gens[_n_coords(self.gens):]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def is_scalar(self) -> bool:
        """True when no coordinate occurs with a positive exponent."""
        nc = _n_coords(self.gens)
        return all(not any(k[:nc]) for k in self.terms)

    @property
    def is_constant(self) -> bool:
        return all(not any(k) for k in self.terms)

    def constant_value(self) -> GaussQ:
        """The Gaussian-rational value of a constant polynomial."""
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        for c in self.terms.values():
            return c
        return ZERO

    def used_gens(self) -> tuple[str, ...]:
        live = [False] * len(self.gens)
        for k in self.terms:
            for i, e in enumerate(k):
                if e:
                    live[i] = True
        return tuple(g for g, flag in zip(self.gens, live) if flag)

    def degree(self, name: str | None = None) -> int:
        """Total coordinate degree, or degree in one generator; -1 for zero."""
        if not self.terms:
            return -1
        if name is None:
            nc = _n_coords(self.gens)
            return max(sum(k[:nc]) for k in self.terms)
        if name not in self.gens:
            return 0
        i = self.gens.index(name)
        return max(k[i] for k in self.terms)

    def with_gens(self, gens: Iterable[str]) -> "Poly":
        """Re-express in a ring whose generators include ``gens``."""
        merged, idx1, _ = _merge(self.gens, tuple(gens))
        return Poly._make(merged, _remap(self.terms, idx1, len(merged)))

    def drop_unused(self) -> "Poly":
        used = set(self.used_gens())
        keep = tuple(g for g in self.gens if g in used)
        idx = [self.gens.index(g) for g in keep]
        return Poly._make(keep, {tuple(k[i] for i in idx): c for k, c in self.terms.items()})

    # -- arithmetic -----------------------------------------------------------

    def _aligned(self, other: "Poly"):
        if self.gens is other.gens or self.gens == other.gens:
            return self.gens, self.terms, other.terms
        merged, idx1, idx2 = _merge(self.gens, other.gens)
        n = len(merged)
        return merged, _remap(self.terms, idx1, n), _remap(other.terms, idx2, n)

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        gens, a, b = self._aligned(other)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                s = prev + c
                if s:
                    out[k] = s
                else:
                    del out[k]
        return Poly._make(gens, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._make(self.gens, {k: -c for k, c in self.terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def scale(self, c: Coefficient) -> "Poly":
        c = GaussQ.coerce(c)
        if not c:
            return Poly._make(self.gens, {})
        return Poly._make(self.gens, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            if isinstance(other, (GaussQ, int, mpq)) or hasattr(other, "denominator"):
                return self.scale(other)
            return NotImplemented
        gens, a, b = self._aligned(other)
        if not a or not b:
            return Poly._make(gens, {})
        if len(a) < len(b):
            a, b = b, a
        signpos = _sign_positions(gens)
        acc: dict = {}
        bl = [(k2, c2.re, c2.im) for k2, c2 in b.items()]
        for k1, c1 in a.items():
            x, y = c1.re, c1.im
            for k2, u, v in bl:
                k = tuple(map(add, k1, k2))
                if signpos:
                    k = _reduce_signs(k, signpos)
                if y or v:
                    re = x * u - y * v
                    im = x * v + y * u
                else:
                    re = x * u
                    im = 0
                prev = acc.get(k)
                if prev is None:
                    acc[k] = [re, im]
                else:
                    prev[0] += re
                    prev[1] += im
        out = {}
        for k, (re, im) in acc.items():
            if re or im:
                out[k] = GaussQ._raw(to_mpq(re), to_mpq(im))
        return Poly._make(gens, out)

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self.terms) == 1 and self.is_scalar:
                (k, c), = self.terms.items()
                return Poly(self.gens, {tuple(-x for x in k): c.inverse()}) ** (-e)
            raise ValueError("negative powers are only defined for parameter monomials")
        result = Poly.const(1, self.gens)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> "Poly":
        """Division by a nonzero constant or by a parameter monomial."""
        if isinstance(other, Poly):
            if len(other.terms) == 1 and other.is_scalar:
                return self * other ** -1
            raise ValueError("use rational_reduce for polynomial division")
        return self.scale(GaussQ.coerce(other).inverse())

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        _, a, b = self._aligned(other)
        return a == b

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def named_terms(self) -> frozenset:
        out = []
        for k, c in self.terms.items():
            out.append((tuple((g, e) for g, e in zip(self.gens, k) if e), c))
        return frozenset(out)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.named_terms())
            object.__setattr__(self, "_hash", h)
        return h

    # -- calculus and substitution ----------------------------------------------

    def diff(self, name: str) -> "Poly":
        return poly_diff(self, name)

    def conjugate(self, swap: Mapping[str, str] | None = None) -> "Poly":
        return conjugate(self, swap)

    def subs(self, mapping: Mapping[str, "Poly | Coefficient"]) -> "Poly":
        """Substitute generators by polynomials or exact constants."""
        targets = [(self.gens.index(g), Poly.coerce(v)) for g, v in mapping.items() if g in self.gens]
        if not targets:
            return self
        positions = {i for i, _ in targets}
        keep = tuple(g for i, g in enumerate(self.gens) if i not in positions)
        keep_idx = [i for i in range(len(self.gens)) if i not in positions]
        result = Poly.zero(keep)
        for v in (p for _, p in targets):
            result = result.with_gens(v.gens)
        powers: dict[tuple[int, int], Poly] = {}

        def power(slot: int, value: Poly, e: int) -> Poly:
            key = (slot, e)
            if key not in powers:
                powers[key] = value ** e if e >= 0 else value ** e
            return powers[key]

        groups: dict[tuple, dict] = {}
        for k, c in self.terms.items():
            sub_key = tuple(k[i] for i, _ in targets)
            rest = tuple(k[i] for i in keep_idx)
            groups.setdefault(sub_key, {})[rest] = c
        for sub_key, rest_terms in groups.items():
            factor = Poly.const(1)
            for (slot, value), e in zip(targets, sub_key):
                if e:
                    factor = factor * power(slot, value, e)
            result = result + Poly(keep, rest_terms) * factor
        return result

    def evaluate(self, point: Mapping[str, Coefficient]) -> "Poly":
        return self.subs(point)

    def coefficient(self, monomial: Mapping[str, int]) -> "Poly":
        """Scalar coefficient of a coordinate monomial (parameters kept)."""
        nc = _n_coords(self.gens)
        want = [0] * nc
        for g, e in monomial.items():
            if g not in self.variables:
                if e:
                    return Poly.zero(self.parameters)
                continue
            want[self.gens.index(g)] = e
        want = tuple(want)
        out = {k[nc:]: c for k, c in self.terms.items() if k[:nc] == want}
        return Poly._make(self.parameters, out)

    def coordinate_terms(self) -> dict[tuple[int, ...], "Poly"]:
        """Group terms by coordinate exponent; values are scalars."""
        nc = _n_coords(self.gens)
        params = self.parameters
        groups: dict[tuple[int, ...], dict] = {}
        for k, c in self.terms.items():
            groups.setdefault(k[:nc], {})[k[nc:]] = c
        return {k: Poly._make(params, v) for k, v in groups.items()}

    def as_univariate(self, name: str) -> dict[int, "Poly"]:
        """Coefficients in ``name`` as polynomials over the remaining generators."""
        if name not in self.gens:
            return {0: self} if self.terms else {}
        i = self.gens.index(name)
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            kk = k[:i] + (0,) + k[i + 1:]
            out.setdefault(k[i], {})[kk] = c
        return {e: Poly._make(self.gens, t) for e, t in out.items()}

    def leading_term(self) -> tuple[tuple[int, ...], GaussQ]:
        """Leading (exponent, coefficient) in graded-lex order over all generators."""
        k = max(self.terms, key=lambda m: (sum(m), m))
        return k, self.terms[k]

    # -- rendering --------------------------------------------------------------------

    def sort_key(self, k: tuple[int, ...]):
        nc = _n_coords(self.gens)
        ck, pk = k[:nc], k[nc:]
        return (-sum(ck), tuple(-e for e in ck), -sum(pk), tuple(-e for e in pk))

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"


Scalar = Poly


def _monomial_str(gens, k) -> str:
    parts = []
    for g, e in zip(gens, k):
        if e == 1:
            parts.append(g)
        elif e:
            parts.append(f"{g}^{e}")
    return "*".join(parts)


def render(p: Poly) -> str:
    """Canonical text: graded-lex monomial order, explicit ``i`` and parameters."""
    if not p.terms:
        return "0"
    nc = _n_coords(p.gens)
    # params printed before coordinates inside a term
    order = list(range(nc, len(p.gens))) + list(range(nc))
    gens = [p.gens[i] for i in order]
    pieces = []
    for k in sorted(p.terms, key=p.sort_key):
        c = p.terms[k]
        mono = _monomial_str(gens, [k[i] for i in order])
        if c.im and c.re:
            coeff, neg = render_gauss(c), False
        elif c.im:
            neg = c.im < 0
            coeff = render_gauss(-c if neg else c)
        else:
            neg = c.re < 0
            coeff = render_gauss(-c if neg else c)
        if mono:
            body = mono if coeff == "1" else f"{coeff}*{mono}"
        else:
            body = coeff
        pieces.append(("-" if neg else "+", body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def param(name: str) -> Poly:
    """The formal parameter ``name`` as a scalar."""
    if not is_parameter(name):
        raise ValueError(f"{name!r} is not a declared parameter")
    return Poly.gen(name)


def coords(*names: str) -> tuple[Poly, ...]:
    """Coordinate generators sharing one ring."""
    gens = _canonical_gens(tuple(names))
    return tuple(Poly.gen(n, gens) for n in names)


I = Poly.const(GaussQ(0, 1))


def poly_diff(f: Poly, v: str) -> Poly:
    """Partial derivative with respect to the coordinate ``v``."""
    if v not in f.variables:
        raise ValueError(f"unknown variable {v!r}; ring variables are {f.variables}")
    i = f.gens.index(v)
    out = {}
    for k, c in f.terms.items():
        e = k[i]
        if e:
            out[k[:i] + (e - 1,) + k[i + 1:]] = c * e
    return Poly._make(f.gens, out)


def _check_swap(swap: Mapping[str, str]) -> None:
    for a, b in swap.items():
        if is_parameter(a) or is_parameter(b):
            raise ValueError(f"swap {a!r} <-> {b!r} touches a formal parameter")
        if swap.get(b, b) != a:
            raise ValueError(f"swap is not an involution at {a!r}")


def conjugate(f, swap: Mapping[str, str] | None = None):
    """Complex-conjugate coefficients and rename variables by an involution.

    Works on :class:`Poly` and on objects exposing ``conjugate(swap)``.
    """
    if not isinstance(f, Poly):
        return f.conjugate(swap)
    swap = dict(swap or {})
    _check_swap(swap)
    missing = tuple(swap[g] for g in f.variables if g in swap and swap[g] not in f.gens)
    if missing:
        f = f.with_gens(missing)
    perm = [f.gens.index(swap.get(g, g)) for g in f.gens]
    out = {}
    for k, c in f.terms.items():
        new = [0] * len(k)
        for src, e in enumerate(k):
            new[perm[src]] = e
        out[tuple(new)] = c.conjugate()
    return Poly._make(f.gens, out)
