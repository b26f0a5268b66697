"""Polynomial multivector fields on a coordinate space."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from ..exactalg import GaussQ, Poly, poly_diff


class SpaceMismatch(ValueError):
    pass


def _sort_sign(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    if len(set(idx)) != len(idx):
        return 0, idx
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def _acc(out: dict, key, value: Poly) -> None:
    prev = out.get(key)
    v = value if prev is None else prev + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass(frozen=True, eq=False)
class MultivectorField:
    """Degree-k field: coefficient of d_{i1}∧...∧d_{ik} for i1 < ... < ik.

    Coefficients are polynomials whose ring starts with ``space`` so that
    canonical rendering uses the declared coordinate order.
    """

    space: tuple[str, ...]
    degree: int
    coeffs: dict

    @classmethod
    def from_terms(cls, space: Sequence[str], degree: int, terms: Iterable) -> "MultivectorField":
        space = tuple(space)
        out: dict = {}
        for c, idx in terms:
            idx = tuple(space.index(i) if isinstance(i, str) else i for i in idx)
            if len(idx) != degree:
                raise ValueError(f"index {idx} does not have length {degree}")
            sign, idx = _sort_sign(idx)
            if not sign:
                continue
            c = c if isinstance(c, Poly) else Poly.const(c)
            c = c.with_gens(space)
            _acc(out, idx, c if sign > 0 else -c)
        return cls(space, degree, out)

    @classmethod
    def zero(cls, space: Sequence[str], degree: int) -> "MultivectorField":
        return cls(tuple(space), degree, {})

    @classmethod
    def function(cls, space: Sequence[str], f) -> "MultivectorField":
        return cls.from_terms(space, 0, [(f, ())])

    @classmethod
    def vector(cls, space: Sequence[str], comps: Mapping) -> "MultivectorField":
        return cls.from_terms(space, 1, [(c, (k,)) for k, c in comps.items()])

    def component(self, idx: Sequence) -> Poly:
        """Antisymmetric component access by names or positions."""
        idx = tuple(self.space.index(i) if isinstance(i, str) else i for i in idx)
        sign, key = _sort_sign(idx)
        zero = Poly.zero(self.space)
        if not sign:
            return zero
        c = self.coeffs.get(key)
        if c is None:
            return zero
        return c if sign > 0 else -c

    # -- linear structure ---------------------------------------------------------

    def _check(self, other: "MultivectorField") -> None:
        if self.space != other.space:
            raise SpaceMismatch(f"fields on {self.space} and {other.space}")

    def __add__(self, other: "MultivectorField") -> "MultivectorField":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add fields of different degree")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _acc(out, k, v)
        return MultivectorField(self.space, self.degree, out)

    def __neg__(self) -> "MultivectorField":
        return self.scale(-1)

    def __sub__(self, other: "MultivectorField") -> "MultivectorField":
        return self + (-other)

    def scale(self, f) -> "MultivectorField":
        """Multiply by a function or scalar."""
        f = f if isinstance(f, Poly) else Poly.const(f)
        out = {}
        for k, v in self.coeffs.items():
            w = v * f
            if w:
                out[k] = w
        return MultivectorField(self.space, self.degree, out)

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultivectorField):
            return NotImplemented
        if self.space != other.space or self.degree != other.degree:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def subs(self, mapping) -> "MultivectorField":
        out = {}
        for k, v in self.coeffs.items():
            w = v.subs(mapping)
            if w:
                out[k] = w.with_gens(self.space) if w.variables else w
        return MultivectorField(self.space, self.degree, out)

    # -- output ---------------------------------------------------------------

    def render(self) -> list[tuple[str, str]]:
        return [("∧".join("d_" + self.space[i] for i in k) or "1", str(self.coeffs[k])) for k in sorted(self.coeffs)]

    def __str__(self) -> str:
        return " + ".join(f"({c})*{k}" for k, c in self.render()) or "0"

    def to_json(self) -> str:
        data = {
            "space": list(self.space),
            "degree": self.degree,
            "coeffs": [{"index": list(k), "value": str(self.coeffs[k])} for k in sorted(self.coeffs)],
        }
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def wedge(a: MultivectorField, b: MultivectorField) -> MultivectorField:
    """Exterior product; degree overflow yields the zero field."""
    a._check(b)
    deg = a.degree + b.degree
    if deg > len(a.space):
        return MultivectorField.zero(a.space, deg)
    out: dict = {}
    for i, f in a.coeffs.items():
        for j, g in b.coeffs.items():
            sign, key = _sort_sign(i + j)
            if sign:
                prod = f * g
                _acc(out, key, prod if sign > 0 else -prod)
    return MultivectorField(a.space, deg, out)


def wedge_all(fields: Sequence[MultivectorField]) -> MultivectorField:
    acc = fields[0]
    for f in fields[1:]:
        acc = wedge(acc, f)
    return acc


def _diff_table(f: MultivectorField) -> dict:
    out = {}
    for k, v in f.coeffs.items():
        for l, name in enumerate(f.space):
            d = poly_diff(v, name) if name in v.variables else None
            if d:
                out[(l, k)] = d
    return out


def vector_bracket(u: MultivectorField, v: MultivectorField) -> MultivectorField:
    """[U,V]^i = sum_l (V^l d_l U^i - U^l d_l V^i), so that [X_M, Y_M] = [X,Y]_M."""
    u._check(v)
    if u.degree != 1 or v.degree != 1:
        raise ValueError("vector_bracket takes two vector fields")
    du, dv = _diff_table(u), _diff_table(v)
    out: dict = {}
    for i in range(len(u.space)):
        acc = None
        for l in range(len(u.space)):
            vl = v.coeffs.get((l,))
            ul = u.coeffs.get((l,))
            if vl is not None and (l, (i,)) in du:
                t = vl * du[(l, (i,))]
                acc = t if acc is None else acc + t
            if ul is not None and (l, (i,)) in dv:
                t = -(ul * dv[(l, (i,))])
                acc = t if acc is None else acc + t
        if acc:
            out[(i,)] = acc
    return MultivectorField(u.space, 1, out)


def schouten_field(p: MultivectorField, q: MultivectorField) -> MultivectorField:
    """Trivector [P,Q]^{ijk} = sum_l (P^{il} d_l Q^{jk} + Q^{il} d_l P^{jk}) + cyclic.

    With this sign [fK, fK] = f^2 [K, K] - 2f K(df)∧K for constant K, and
    [P, P] = 2 * Jacobiator of the coordinate brackets {x^i, x^j} = P^{ij}.
    """
    p._check(q)
    if p.degree != 2 or q.degree != 2:
        raise ValueError("schouten_field takes two bivector fields")
    n = len(p.space)
    dp, dq = _diff_table(p), _diff_table(q)

    def comp(f: MultivectorField, a: int, b: int):
        if a == b:
            return None, 0
        if a < b:
            return f.coeffs.get((a, b)), 1
        return f.coeffs.get((b, a)), -1

    def dcomp(table: dict, l: int, a: int, b: int):
        if a == b:
            return None, 0
        if a < b:
            return table.get((l, (a, b))), 1
        return table.get((l, (b, a))), -1

    out: dict = {}
    for i, j, k in combinations(range(n), 3):
        acc = None
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l in range(n):
                for f, table in ((p, dq), (q, dp)):
                    x, sx = comp(f, a, l)
                    if x is None:
                        continue
                    y, sy = dcomp(table, l, b, c)
                    if y is None:
                        continue
                    t = x * y
                    if sx * sy < 0:
                        t = -t
                    acc = t if acc is None else acc + t
        if acc:
            out[(i, j, k)] = acc
    return MultivectorField(p.space, 3, out)


def contraction(p: MultivectorField, f: Poly) -> MultivectorField:
    """P(df) on the first slot: (P(df))^j = sum_i P^{ij} d_i f."""
    if p.degree != 2:
        raise ValueError("contraction is defined here for bivectors")
    comps: dict = {}
    for i, name in enumerate(p.space):
        if name not in f.variables:
            continue
        d = poly_diff(f, name)
        if not d:
            continue
        for j in range(len(p.space)):
            c = p.component((i, j))
            if c:
                _acc(comps, (j,), c * d)
    return MultivectorField(p.space, 1, comps)


def evaluate_at(f: MultivectorField, point) -> MultivectorField:
    """Substitute rational coordinates; the result has scalar coefficients."""
    if isinstance(point, Mapping):
        mapping = dict(point)
        if set(mapping) != set(f.space):
            raise ValueError(f"point must assign every coordinate of {f.space}")
    else:
        point = list(point)
        if len(point) != len(f.space):
            raise ValueError(f"point has {len(point)} coordinates, space has {len(f.space)}")
        mapping = dict(zip(f.space, point))
    mapping = {k: v if isinstance(v, Poly) else Poly.const(GaussQ.coerce(v)) for k, v in mapping.items()}
    out = {}
    for k, v in f.coeffs.items():
        w = v.subs(mapping)
        if w:
            out[k] = w
    return MultivectorField(f.space, f.degree, out)


def coordinate_vector(space: Sequence[str], name: str) -> MultivectorField:
    return MultivectorField.vector(space, {name: 1})
