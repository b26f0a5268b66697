"""Stabilizers, trace-orthogonal complements and the stabilizer criterion."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..exactalg import GaussQ, ZERO, nullspace, rank, solve_in_span
from .algebras import LieAlgebraSpec, SparseMat, mat_str

Vec = list[GaussQ]


class DegeneratePoint(ValueError):
    pass


def _realify_rows(rows: list[Vec], real: bool) -> list[Vec]:
    if not real:
        return rows
    out = []
    for r in rows:
        out.append([GaussQ(c.re) for c in r])
        out.append([GaussQ(c.im) for c in r])
    return out


def _action_point(g: LieAlgebraSpec, x) -> list[GaussQ]:
    pt = [GaussQ.coerce(c) for c in x]
    if g.affine:
        pt = pt + [GaussQ(1)]
    if len(pt) != g.size:
        raise ValueError(f"point has {len(x)} coordinates, {g.label} acts on dimension {g.size - g.affine}")
    return pt


def basis_point(g: LieAlgebraSpec, k: int | None = None) -> list[GaussQ]:
    """e_k (1-based, default e_n) in the space the algebra acts on."""
    n = g.size - int(g.affine)
    k = g.n if k is None else k
    return [GaussQ(int(i == k - 1)) for i in range(n)]


@dataclass(frozen=True, eq=False)
class Stabilizer:
    algebra: LieAlgebraSpec
    point: tuple
    basis: list[Vec]
    perp: list[Vec]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def describe(self, v: Vec) -> str:
        parts = []
        for c, name in zip(v, self.algebra.names):
            if c:
                parts.append(f"({c})*{name}" if c != 1 else name)
        return " + ".join(parts) or "0"


def stabilizer(g: LieAlgebraSpec, x) -> Stabilizer:
    """g_x = {X : Xx = 0} and its trace-form orthogonal complement."""
    pt = _action_point(g, x)
    if not any(pt[: g.size - int(g.affine)]) and not g.affine:
        raise DegeneratePoint("the stabilizer of 0 is the whole algebra")
    rows = [[ZERO] * g.dim for _ in range(g.size)]
    for a, m in enumerate(g.matrices):
        for (i, j), c in m.items():
            if pt[j]:
                rows[i][a] = rows[i][a] + c * pt[j]
    stab = nullspace(_realify_rows(rows, g.real), g.dim)
    form = g.form
    cond = []
    for v in stab:
        cond.append([sum((v[a] * form[a][b] for a in range(g.dim)), ZERO) for b in range(g.dim)])
    perp = nullspace(_realify_rows(cond, g.real), g.dim) if cond else nullspace([], g.dim)
    return Stabilizer(g, tuple(pt), stab, perp)


def bracket_vec(g: LieAlgebraSpec, u: Vec, v: Vec) -> Vec:
    out = [ZERO] * g.dim
    for a, x in enumerate(u):
        if not x:
            continue
        for b, y in enumerate(v):
            if not y or a == b:
                continue
            for c, f in g.bracket(a, b).items():
                out[c] = out[c] + x * y * f
    return out


@dataclass(frozen=True, eq=False)
class Violation:
    left: str
    right: str
    commutator: list[list[str]]
    outside: list[list[str]]


@dataclass(frozen=True, eq=False)
class CriterionResult:
    holds: bool
    violations: list[Violation]
    stabilizer_dim: int
    perp_dim: int
    violation_span_dim: int
    root_block_span_dim: int
    witness: Violation | None = field(default=None)


def _project_out(g: LieAlgebraSpec, stab: Stabilizer, v: Vec) -> Vec:
    """Component along g_x-perp in the splitting g = g_x + g_x-perp (when direct)."""
    basis = stab.basis + stab.perp
    if rank(basis) < g.dim:
        return v
    coeffs = solve_in_span(basis, v)
    out = [ZERO] * g.dim
    for c, b in zip(coeffs[len(stab.basis):], stab.perp):
        for i in range(g.dim):
            out[i] = out[i] + c * b[i]
    return out


def _span_mod(stab_rows: list[Vec], extra: list[Vec]) -> int:
    # coefficient vectors of real forms are real, so the Q(i)-rank is the real rank
    if not extra:
        return 0
    return rank(stab_rows + extra) - (rank(stab_rows) if stab_rows else 0)


def _outside(stab: Stabilizer, c: Vec) -> bool:
    if not stab.basis:
        return any(c)
    return solve_in_span(stab.basis, c) is None


def perp_criterion(g: LieAlgebraSpec, x) -> CriterionResult:
    """Check [g_x-perp, g_x-perp] inside g_x and measure the failure."""
    stab = stabilizer(g, x)
    comms: list[Vec] = []
    violations: list[Violation] = []
    root_comms: list[Vec] = []
    cartan = {a for a, nm in enumerate(g.names) if nm.startswith("H")}
    root_perp = [v for v in stab.perp if not any(v[a] for a in cartan)]
    for u, v in combinations(stab.perp, 2):
        c = bracket_vec(g, u, v)
        comms.append(c)
        if _outside(stab, c):
            out = _project_out(g, stab, c)
            violations.append(
                Violation(stab.describe(u), stab.describe(v), mat_str(g.combine(c), g.size), mat_str(g.combine(out), g.size))
            )
    for u, v in combinations(root_perp, 2):
        root_comms.append(bracket_vec(g, u, v))
    span = _span_mod(stab.basis, comms)
    root_span = _span_mod(stab.basis, root_comms)
    witness = _named_witness(g, stab)
    return CriterionResult(not violations, violations, stab.dim, len(stab.perp), span, root_span, witness)


def _named_witness(g: LieAlgebraSpec, stab: Stabilizer) -> Violation | None:
    """For su(n) report [F_1^n, G_1^n] when it escapes g_x (the displayed witness)."""
    if g.kind != "su":
        return None
    a, b = g.index(f"F1^{g.n}"), g.index(f"G1^{g.n}")
    u = [GaussQ(int(i == a)) for i in range(g.dim)]
    v = [GaussQ(int(i == b)) for i in range(g.dim)]
    c = bracket_vec(g, u, v)
    if not _outside(stab, c):
        return None
    return Violation(g.names[a], g.names[b], mat_str(g.combine(c), g.size), mat_str(g.combine(_project_out(g, stab, c)), g.size))


def commutator_matrix(g: LieAlgebraSpec, a: str, b: str) -> SparseMat:
    from .algebras import commutator

    return commutator(g.matrices[g.index(a)], g.matrices[g.index(b)])
