"""Linear and affine actions of cataloged algebras, and fundamental fields."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from ..exactalg import GaussQ, Poly, coords
from ..liealg import LieAlgebraSpec, TensorElement, UnsupportedAlgebra
from ..liealg.algebras import SparseMat, commutator, mat_add
from .fields import MultivectorField, vector_bracket, wedge


class ActionMismatch(ValueError):
    pass


def _conj(m: SparseMat) -> SparseMat:
    return {k: v.conjugate() for k, v in m.items() if v}


@dataclass(frozen=True, eq=False)
class ActionSpec:
    """Each basis element acts by x -> A x + b on the coordinate space.

    ``linear[a]`` is A as a sparse matrix on ``space``; ``translation[a]``
    maps coordinate positions to constants.
    """

    algebra: LieAlgebraSpec
    space: tuple[str, ...]
    linear: tuple
    translation: tuple = field(default=())

    @property
    def dim(self) -> int:
        return len(self.space)

    def _trans(self, a: int) -> dict:
        return self.translation[a] if self.translation else {}

    @cached_property
    def _vectors(self) -> tuple:
        return tuple(self._vector(a) for a in range(self.algebra.dim))

    def _vector(self, a: int) -> MultivectorField:
        x = coords(*self.space)
        comps: dict[int, Poly] = {}
        for (i, j), c in self.linear[a].items():
            t = x[j].scale(c)
            comps[i] = comps[i] + t if i in comps else t
        for i, c in self._trans(a).items():
            t = Poly.const(c)
            comps[i] = comps[i] + t if i in comps else t
        return MultivectorField.vector(self.space, comps)

    def vector_field(self, a: int | str) -> MultivectorField:
        """Fundamental vector field X_M(x) = A x + b."""
        if isinstance(a, str):
            a = self.algebra.index(a)
        return self._vectors[a]

    def representation_defect(self) -> list[tuple[str, str]]:
        """Basis pairs where act([X,Y]) differs from [act X, act Y] (with cocycle)."""
        g = self.algebra
        bad = []
        for a in range(g.dim):
            for b in range(a + 1, g.dim):
                lhs = commutator(self.linear[a], self.linear[b])
                rhs: SparseMat = {}
                for c, f in g.bracket(a, b).items():
                    rhs = mat_add(rhs, self.linear[c], f)
                tl = _apply(self.linear[a], self._trans(b))
                for k, v in _apply(self.linear[b], self._trans(a)).items():
                    tl[k] = tl.get(k, GaussQ(0)) - v
                tr: dict = {}
                for c, f in g.bracket(a, b).items():
                    for k, v in self._trans(c).items():
                        tr[k] = tr.get(k, GaussQ(0)) + f * v
                if _clean(mat_add(lhs, rhs, GaussQ(-1))) or _clean_vec(tl, tr):
                    bad.append((g.names[a], g.names[b]))
        return bad

    def bracket_defect(self) -> list[tuple[str, str]]:
        """Basis pairs where [X_M, Y_M] != [X,Y]_M as polynomial vector fields."""
        g = self.algebra
        bad = []
        for a in range(g.dim):
            for b in range(a + 1, g.dim):
                lhs = vector_bracket(self.vector_field(a), self.vector_field(b))
                rhs = MultivectorField.zero(self.space, 1)
                for c, f in g.bracket(a, b).items():
                    rhs = rhs + self.vector_field(c).scale(f)
                if lhs != rhs:
                    bad.append((g.names[a], g.names[b]))
        return bad


def _apply(m: SparseMat, v: dict) -> dict:
    out: dict = {}
    for (i, j), c in m.items():
        if j in v:
            out[i] = out.get(i, GaussQ(0)) + c * v[j]
    return out


def _clean(m: SparseMat) -> bool:
    return any(v for v in m.values())


def _clean_vec(a: dict, b: dict) -> bool:
    return any(a.get(k, GaussQ(0)) != b.get(k, GaussQ(0)) for k in set(a) | set(b))


def default_action(g: LieAlgebraSpec) -> ActionSpec:
    """Defining action on the coordinate space of the catalog conventions."""
    if g.kind in ("sl", "gl", "so"):
        space = tuple(f"x{j}" for j in range(1, g.n + 1))
        return ActionSpec(g, space, g.matrices)
    if g.kind == "sp":
        space = tuple(f"x{j}" for j in range(1, g.n + 1)) + tuple(f"p{j}" for j in range(1, g.n + 1))
        return ActionSpec(g, space, g.matrices)
    if g.kind == "su":
        n = g.n
        space = tuple(f"z{j}" for j in range(1, n + 1)) + tuple(f"zb{j}" for j in range(1, n + 1))
        mats = []
        for m in g.matrices:
            big = dict(m)
            for (i, j), c in _conj(m).items():
                big[(i + n, j + n)] = c
            mats.append(big)
        return ActionSpec(g, space, tuple(mats))
    if g.kind == "lorentz":
        return ActionSpec(g, tuple(f"x{j}" for j in range(4)), g.matrices)
    if g.kind == "poincare":
        n = g.size - 1
        space = tuple(f"x{j}" for j in range(n))
        lin, trans = [], []
        for m in g.matrices:
            lin.append({k: v for k, v in m.items() if k[0] < n and k[1] < n})
            trans.append({i: v for (i, j), v in m.items() if j == n and i < n})
        return ActionSpec(g, space, tuple(lin), tuple(trans))
    raise UnsupportedAlgebra(f"no default action for {g.label}")


def cotangent_action(g: LieAlgebraSpec) -> ActionSpec:
    """Lift to T*V with coordinates (x, p): X acts as diag(X, -X^T)."""
    if g.kind not in ("sl", "gl", "so"):
        raise UnsupportedAlgebra(f"the cotangent lift is provided for sl, gl and so, not {g.label}")
    n = g.size
    space = tuple(f"x{j}" for j in range(1, n + 1)) + tuple(f"p{j}" for j in range(1, n + 1))
    mats = []
    for m in g.matrices:
        big = dict(m)
        for (i, j), c in m.items():
            big[(j + n, i + n)] = -c
        mats.append(big)
    return ActionSpec(g, space, tuple(mats))


def fundamental_field(w: TensorElement, action: ActionSpec) -> MultivectorField:
    """w_M(x) = w x, wedge of fundamental vector fields termwise."""
    if w.space not in ("L2", "L3"):
        raise ValueError("fundamental_field takes a wedge-power element")
    if w.algebra is None or w.algebra.label != action.algebra.label:
        raise ActionMismatch(f"tensor over {w.algebra.label if w.algebra else None}, action of {action.algebra.label}")
    degree = 2 if w.space == "L2" else 3
    out = MultivectorField.zero(action.space, degree)
    for idx, c in w.coeffs.items():
        term = action.vector_field(idx[0])
        for a in idx[1:]:
            term = wedge(term, action.vector_field(a))
        out = out + term.scale(c)
    return out


def fundamental_vector(coeffs: Sequence, action: ActionSpec) -> MultivectorField:
    """X_M for X = sum_a coeffs[a] * basis_a."""
    out = MultivectorField.zero(action.space, 1)
    for a, c in enumerate(coeffs):
        if c:
            out = out + action.vector_field(a).scale(c)
    return out


def omega_at(g: LieAlgebraSpec, x) -> MultivectorField:
    """Omega_M at x for the canonical invariant trivector; x lies in the defining space.

    For su(n) the point z = x is paired with zb = conj(x).
    """
    from ..liealg import canonical_trivector
    from .fields import evaluate_at

    act = default_action(g)
    pt = [GaussQ.coerce(c) for c in x]
    if g.kind == "su":
        pt = pt + [c.conjugate() for c in pt]
    return evaluate_at(fundamental_field(canonical_trivector(g), act), pt)


def omega_vanishes_at(g: LieAlgebraSpec, x) -> bool:
    return omega_at(g, x).is_zero()
