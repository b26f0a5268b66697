"""Bracket tables on generators and their Leibniz extension."""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from ..exactalg import GaussQ, Poly, RationalFn, det_poly, poly_diff, rational_reduce
from ..mvfield import MultivectorField

Value = Poly | RationalFn


def _d(f: Poly, name: str) -> Poly | None:
    if name not in f.variables:
        return None
    d = poly_diff(f, name)
    return d or None


@dataclass(frozen=True, eq=False)
class BracketTable:
    """Antisymmetric table {g_i, g_j} stored for i < j.

    ``entries`` maps index pairs (i, j), i < j, to nonzero Poly or RationalFn
    values.  ``provenance`` is a free-form tag describing the construction.
    """

    generators: tuple[str, ...]
    entries: dict
    provenance: str = ""

    @classmethod
    def from_pairs(cls, generators: Sequence[str], pairs, provenance: str = "") -> "BracketTable":
        """Build from ((a, b), value) items with names or indices; later items add up."""
        gens = tuple(generators)
        out: dict = {}
        for (a, b), v in pairs:
            i = gens.index(a) if isinstance(a, str) else a
            j = gens.index(b) if isinstance(b, str) else b
            if i == j:
                if v:
                    raise ValueError(f"diagonal entry {{{gens[i]},{gens[i]}}} must vanish")
                continue
            if isinstance(v, (int, GaussQ)):
                v = Poly.const(v)
            if i > j:
                i, j, v = j, i, -v
            prev = out.get((i, j))
            v = v if prev is None else prev + v
            if v:
                out[(i, j)] = _with_gens(v, gens)
            else:
                out.pop((i, j), None)
        return cls(gens, out, provenance)

    def entry(self, a, b) -> Value:
        i = self.generators.index(a) if isinstance(a, str) else a
        j = self.generators.index(b) if isinstance(b, str) else b
        if i == j:
            return Poly.zero(self.generators)
        if i < j:
            return self.entries.get((i, j), Poly.zero(self.generators))
        v = self.entries.get((j, i))
        return Poly.zero(self.generators) if v is None else -v

    @property
    def is_polynomial(self) -> bool:
        return all(isinstance(v, Poly) for v in self.entries.values())

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketTable):
            return NotImplemented
        if self.generators != other.generators:
            return False
        keys = set(self.entries) | set(other.entries)
        return all(self.entry(*k) == other.entry(*k) for k in keys)

    __hash__ = None

    def subs(self, mapping) -> "BracketTable":
        return BracketTable.from_pairs(
            self.generators, [(k, v.subs(mapping)) for k, v in self.entries.items()], self.provenance
        )

    def restrict(self, names: Sequence[str], mapping=None) -> "BracketTable":
        """Sub-table on ``names`` after substituting ``mapping`` into entries."""
        pairs = []
        for a, b in combinations(names, 2):
            v = self.entry(a, b)
            if mapping:
                v = v.subs(mapping)
            pairs.append(((a, b), v))
        return BracketTable.from_pairs(tuple(names), pairs, self.provenance)

    def with_provenance(self, tag: str) -> "BracketTable":
        return BracketTable(self.generators, self.entries, tag)

    def __add__(self, other: "BracketTable") -> "BracketTable":
        if self.generators != other.generators:
            raise ValueError("tables over different generators")
        return BracketTable.from_pairs(
            self.generators, list(self.entries.items()) + list(other.entries.items()), self.provenance or other.provenance
        )

    def render(self) -> list[tuple[str, str, str]]:
        g = self.generators
        return [(g[i], g[j], str(self.entries[(i, j)])) for i, j in sorted(self.entries)]

    def __str__(self) -> str:
        return "\n".join(f"{{{a},{b}}} = {v}" for a, b, v in self.render()) or "(zero table)"

    def to_json(self) -> str:
        data = {
            "generators": list(self.generators),
            "entries": [{"left": a, "right": b, "value": v} for a, b, v in self.render()],
            "provenance": self.provenance,
        }
        return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def _with_gens(v: Value, gens: tuple[str, ...]) -> Value:
    if isinstance(v, Poly):
        return v.with_gens(gens)
    return v


def table_from_bivector(p: MultivectorField, provenance: str = "bivector") -> BracketTable:
    if p.degree != 2:
        raise ValueError("table_from_bivector expects a bivector field")
    return BracketTable(p.space, dict(p.coeffs), provenance)


def bivector_from_table(t: BracketTable) -> MultivectorField:
    if not t.is_polynomial:
        raise ValueError("only polynomial tables correspond to polynomial bivector fields")
    return MultivectorField.from_terms(t.generators, 2, [(v, k) for k, v in t.entries.items()])


# -- Leibniz extension ---------------------------------------------------------------


def _poly_bracket(t: BracketTable, f: Poly, g: Poly) -> Value:
    gens = t.generators
    df = {i: d for i, name in enumerate(gens) if (d := _d(f, name)) is not None}
    if not df:
        return Poly.zero(gens)
    dg = {j: d for j, name in enumerate(gens) if (d := _d(g, name)) is not None}
    acc: Value = Poly.zero(gens)
    for i, a in df.items():
        for j, b in dg.items():
            if i == j:
                continue
            e = t.entry(i, j)
            if e:
                acc = acc + (e * (a * b) if isinstance(e, RationalFn) else e * a * b)
    return acc


def bracket(t: BracketTable, f, g) -> Value:
    """Biderivation extension of the table; the quotient rule handles fractions."""
    if isinstance(f, RationalFn) or isinstance(g, RationalFn):
        f, g = RationalFn.coerce(f), RationalFn.coerce(g)
        a, b, c, d = f.num, f.den, g.num, g.den
        terms = [(_poly_bracket(t, a, c), b * d)]
        if not d.is_constant:
            terms.append((_poly_bracket(t, a, d), -(b * c)))
        if not b.is_constant:
            terms.append((_poly_bracket(t, b, c), -(a * d)))
        if not b.is_constant and not d.is_constant:
            terms.append((_poly_bracket(t, b, d), a * c))
        acc = RationalFn(0)
        for br, coef in terms:
            acc = acc + RationalFn.coerce(br) * coef
        return acc / RationalFn(b * b * d * d)
    return _poly_bracket(t, Poly.coerce(f), Poly.coerce(g))


def _vector_apply(t: BracketTable, i: int, h: Value) -> Value:
    """{g_i, h} = sum_b {g_i, g_b} d_b h."""
    if isinstance(h, RationalFn):
        return bracket(t, Poly.gen(t.generators[i], t.generators), h)
    acc: Value = Poly.zero(t.generators)
    for b, name in enumerate(t.generators):
        if b == i:
            continue
        d = _d(h, name)
        if d is None:
            continue
        e = t.entry(i, b)
        if e:
            acc = acc + (e * d)
    return acc


@dataclass(frozen=True)
class Residual:
    triple: tuple[str, str, str]
    value: Value

    def __bool__(self) -> bool:
        return bool(self.value)


def _residual(t: BracketTable, i: int, j: int, k: int) -> Residual:
    v = _vector_apply(t, i, t.entry(j, k)) + _vector_apply(t, j, t.entry(k, i)) + _vector_apply(t, k, t.entry(i, j))
    if isinstance(v, RationalFn) and v.is_polynomial:
        v = v.as_poly()
    g = t.generators
    return Residual((g[i], g[j], g[k]), v)


def _residual_job(args) -> Residual:
    t, i, j, k = args
    return _residual(t, i, j, k)


def jacobiator(t: BracketTable, executor=None) -> list[Residual]:
    """Jacobi residual for every generator triple i < j < k, in that order.

    ``executor`` may be any concurrent.futures executor; results keep the
    triple order regardless of completion order.
    """
    triples = list(combinations(range(len(t.generators)), 3))
    if executor is None:
        return [_residual(t, *ijk) for ijk in triples]
    return list(executor.map(_residual_job, [(t, *ijk) for ijk in triples]))


def is_poisson(t: BracketTable, executor=None) -> bool:
    return not any(jacobiator(t, executor))


def nonzero_residuals(t: BracketTable, executor=None) -> list[Residual]:
    return [r for r in jacobiator(t, executor) if r]


def casimir_residual(t: BracketTable, f) -> list[Value]:
    """{f, g_i} for each generator."""
    return [bracket(t, f, Poly.gen(g, t.generators)) for g in t.generators]


def is_casimir(t: BracketTable, f) -> bool:
    return not any(casimir_residual(t, f))


# -- nondegeneracy -----------------------------------------------------------------


class SingularPoint(ValueError):
    pass


@dataclass(frozen=True)
class BracketMatrix:
    matrix: list
    determinant: Poly


def bracket_matrix_at(t: BracketTable, point) -> BracketMatrix:
    """M_ij = {g_i, g_j}(point) over the parameter ring, with its determinant."""
    if isinstance(point, dict):
        mapping = dict(point)
    else:
        point = list(point)
        if len(point) != len(t.generators):
            raise ValueError(f"point has {len(point)} coordinates, table has {len(t.generators)} generators")
        mapping = dict(zip(t.generators, point))
    mapping = {k: Poly.const(GaussQ.coerce(v)) if not isinstance(v, Poly) else v for k, v in mapping.items()}
    n = len(t.generators)
    mat = [[Poly.const(0)] * n for _ in range(n)]
    for (i, j), v in t.entries.items():
        if isinstance(v, RationalFn):
            den = v.den.subs(mapping)
            if not den:
                raise SingularPoint(f"denominator of {{{t.generators[i]},{t.generators[j]}}} vanishes at the point")
            val = rational_reduce(v.num.subs(mapping), den)
            if not val.is_polynomial:
                raise SingularPoint("entry is not polynomial in the parameters at this point")
            val = val.as_poly()
        else:
            val = v.subs(mapping)
        mat[i][j] = val
        mat[j][i] = -val
    return BracketMatrix(mat, det_poly(mat))


# -- cotangent checks -----------------------------------------------------------------


def split_xp(t: BracketTable) -> tuple[list[str], list[str]]:
    xs = [g for g in t.generators if g.startswith("x")]
    ps = [g for g in t.generators if g.startswith("p")]
    if len(xs) + len(ps) != len(t.generators):
        raise ValueError("generators must split into x... and p... coordinates")
    return xs, ps


@dataclass(frozen=True)
class LagrangianCheck:
    ok: bool
    pp_residuals: dict
    xx_p_dependence: list

    def __bool__(self) -> bool:
        return self.ok


def lagrangian_section_check(t: BracketTable) -> LagrangianCheck:
    """p = 0 is first class and the {x,x} block is free of p."""
    xs, ps = split_xp(t)
    zero = {p: 0 for p in ps}
    res = {}
    for a, b in combinations(ps, 2):
        v = t.entry(a, b).subs(zero)
        if v:
            res[(a, b)] = v
    dep = []
    for a, b in combinations(xs, 2):
        v = t.entry(a, b)
        used = v.num.variables + v.den.variables if isinstance(v, RationalFn) else _used(v)
        if any(p in used for p in ps):
            dep.append((a, b))
    return LagrangianCheck(not res and not dep, res, dep)


def _used(v: Poly) -> tuple[str, ...]:
    return tuple(g for g in v.used_gens() if g in v.variables)


def x_projection(t: BracketTable) -> BracketTable:
    """{x,x} block with p set to zero."""
    xs, ps = split_xp(t)
    return t.restrict(xs, {p: 0 for p in ps})


def projection_consistent(t: BracketTable, base: BracketTable) -> bool:
    """The x-block of ``t`` reproduces the base table (the projection is Poisson)."""
    return x_projection(t) == base.restrict(base.generators)
