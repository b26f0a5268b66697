"""Matrix Lie algebras with explicit named bases."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from ..exactalg import GaussQ, ONE, ZERO, rref

SparseMat = dict[tuple[int, int], GaussQ]

KINDS = ("sl", "gl", "so", "sp", "su", "lorentz", "poincare", "custom")


class UnsupportedAlgebra(ValueError):
    pass


class NotInAlgebra(ValueError):
    pass


def mat_mul(a: SparseMat, b: SparseMat) -> SparseMat:
    rows: dict[int, list[tuple[int, GaussQ]]] = {}
    for (i, j), c in b.items():
        rows.setdefault(i, []).append((j, c))
    out: SparseMat = {}
    for (i, k), c in a.items():
        for j, d in rows.get(k, ()):
            v = out.get((i, j), ZERO) + c * d
            if v:
                out[(i, j)] = v
            else:
                out.pop((i, j), None)
    return out


def mat_add(a: SparseMat, b: SparseMat, scale: GaussQ = ONE) -> SparseMat:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, ZERO) + c * scale
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def mat_scale(a: SparseMat, c) -> SparseMat:
    c = GaussQ.coerce(c)
    return {k: v * c for k, v in a.items()} if c else {}


def commutator(a: SparseMat, b: SparseMat) -> SparseMat:
    return mat_add(mat_mul(a, b), mat_mul(b, a), GaussQ(-1))


def trace(a: SparseMat) -> GaussQ:
    t = ZERO
    for (i, j), c in a.items():
        if i == j:
            t = t + c
    return t


def transpose(a: SparseMat) -> SparseMat:
    return {(j, i): c for (i, j), c in a.items()}


def unit(i: int, j: int, c=1) -> SparseMat:
    """Matrix unit E_ij (0-based) times c."""
    return {(i, j): GaussQ.coerce(c)}


def mat_str(a: SparseMat, size: int) -> list[list[str]]:
    return [[str(a.get((i, j), ZERO)) for j in range(size)] for i in range(size)]


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """A Lie algebra given by a named basis of size x size matrices.

    ``real`` marks algebras whose structure coefficients must be real (su,
    the realified Lorentz algebra); decompositions then run over Q on the
    realified entries.  ``affine`` marks augmented matrices carrying a
    translation column (Poincare).
    """

    kind: str
    n: int
    names: tuple[str, ...]
    matrices: tuple[SparseMat, ...]
    size: int
    real: bool = False
    affine: bool = False
    signature: tuple[int, int] | None = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def label(self) -> str:
        if self.signature is not None:
            return f"{self.kind}({self.signature[0]},{self.signature[1]})"
        return f"{self.kind}({self.n})"

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not a basis element of {self.label}") from None

    # -- coordinates ------------------------------------------------------------

    def _flat(self, m: SparseMat) -> dict:
        if not self.real:
            return dict(m)
        out = {}
        for (i, j), c in m.items():
            if c.re:
                out[(i, j, 0)] = GaussQ._raw(c.re, ZERO.re)
            if c.im:
                out[(i, j, 1)] = GaussQ._raw(c.im, ZERO.re)
        return out

    @cached_property
    def _decomposer(self):
        flats = [self._flat(m) for m in self.matrices]
        positions = sorted({k for f in flats for k in f})
        rows = [[f.get(p, ZERO) for p in positions] for f in flats]
        red, piv = rref(rows)
        if len(piv) != self.dim:
            raise ValueError(f"basis of {self.label} is linearly dependent")
        chosen = [positions[p] for p in piv]
        # invert the square block basis[:, chosen]
        square = [[flats[a].get(p, ZERO) for a in range(self.dim)] for p in chosen]
        aug = [row + [ONE if i == j else ZERO for j in range(self.dim)] for i, row in enumerate(square)]
        red2, _ = rref(aug)
        inv = [row[self.dim:] for row in red2]
        return chosen, inv

    def decompose(self, m: SparseMat) -> list[GaussQ]:
        """Coefficients of ``m`` in the basis; raises NotInAlgebra otherwise."""
        chosen, inv = self._decomposer
        f = self._flat(m)
        vals = [f.get(p, ZERO) for p in chosen]
        coeffs = [ZERO] * self.dim
        for a in range(self.dim):
            acc = ZERO
            for b, v in enumerate(vals):
                if v:
                    acc = acc + inv[a][b] * v
            coeffs[a] = acc
        if self.combine(coeffs) != {k: v for k, v in m.items() if v}:
            raise NotInAlgebra(f"matrix is not in {self.label}")
        return coeffs

    def contains(self, m: SparseMat) -> bool:
        try:
            self.decompose(m)
        except NotInAlgebra:
            return False
        return True

    def combine(self, coeffs) -> SparseMat:
        out: SparseMat = {}
        for c, m in zip(coeffs, self.matrices):
            c = GaussQ.coerce(c)
            if c:
                out = mat_add(out, m, c)
        return out

    # -- structure ----------------------------------------------------------------

    @cached_property
    def structure_constants(self) -> dict[tuple[int, int], dict[int, GaussQ]]:
        """f[(a, b)] = {c: coefficient of X_c in [X_a, X_b]} for a < b."""
        out = {}
        for a, b in combinations(range(self.dim), 2):
            coeffs = self.decompose(commutator(self.matrices[a], self.matrices[b]))
            out[(a, b)] = {c: v for c, v in enumerate(coeffs) if v}
        return out

    def bracket(self, a: int, b: int) -> dict[int, GaussQ]:
        if a == b:
            return {}
        if a < b:
            return self.structure_constants[(a, b)]
        return {c: -v for c, v in self.structure_constants[(b, a)].items()}

    @cached_property
    def form(self) -> list[list[GaussQ]]:
        """Trace form Tr(X_a X_b) of the defining representation."""
        return [[trace(mat_mul(x, y)) for y in self.matrices] for x in self.matrices]

    def jacobi_defect(self) -> list[tuple[int, int, int]]:
        bad = []
        for a, b, c in combinations(range(self.dim), 3):
            total: dict[int, GaussQ] = {}
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                for d, u in self.bracket(y, z).items():
                    for e, v in self.bracket(x, d).items():
                        total[e] = total.get(e, ZERO) + u * v
            if any(total.values()):
                bad.append((a, b, c))
        return bad

    def form_invariance_defect(self) -> list[tuple[int, int, int]]:
        bad = []
        form = self.form
        for x in range(self.dim):
            for y in range(self.dim):
                for z in range(self.dim):
                    s = ZERO
                    for c, v in self.bracket(x, y).items():
                        s = s + v * form[c][z]
                    for c, v in self.bracket(x, z).items():
                        s = s + v * form[y][c]
                    if s:
                        bad.append((x, y, z))
        return bad

    def defining_condition_defect(self) -> list[str]:
        return [name for name, m in zip(self.names, self.matrices) if not _defining_ok(self, m)]

    def to_json(self) -> str:
        data = {
            "kind": self.kind,
            "n": self.n,
            "signature": list(self.signature) if self.signature else None,
            "dim": self.dim,
            "size": self.size,
            "basis": [{"name": nm, "matrix": mat_str(m, self.size)} for nm, m in zip(self.names, self.matrices)],
        }
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


def _defining_ok(g: LieAlgebraSpec, m: SparseMat) -> bool:
    size = g.size
    if g.kind == "sl":
        return not trace(m)
    if g.kind == "so":
        return mat_add(m, transpose(m)) == {}
    if g.kind == "sp":
        om = _omega(g.n)
        return mat_add(mat_mul(om, m), mat_mul(transpose(m), om)) == {}
    if g.kind == "su":
        adj = {(j, i): c.conjugate() for (i, j), c in m.items()}
        return mat_add(m, adj) == {} and not trace(m)
    if g.kind in ("lorentz", "poincare"):
        lin = {k: v for k, v in m.items() if k[0] < size - 1 and k[1] < size - 1} if g.affine else m
        eta = _metric(*g.signature)
        return mat_add(mat_mul(eta, lin), mat_mul(transpose(lin), eta)) == {}
    return True


def _omega(n: int) -> SparseMat:
    out: SparseMat = {}
    for j in range(n):
        out[(j, n + j)] = ONE
        out[(n + j, j)] = GaussQ(-1)
    return out


def _metric(p: int, q: int) -> SparseMat:
    return {(k, k): ONE if k < p else GaussQ(-1) for k in range(p + q)}


# -- catalog ----------------------------------------------------------------------


def _build_gl(n: int, traceless: bool) -> tuple[list[str], list[SparseMat]]:
    names, mats = [], []
    for j in range(n):
        for k in range(n):
            if j != k:
                names.append(f"e{j + 1}^{k + 1}")
                mats.append(unit(j, k))
    if traceless:
        for j in range(n - 1):
            names.append(f"H{j + 1}")
            mats.append(mat_add(unit(j, j), unit(j + 1, j + 1, -1)))
    else:
        for j in range(n):
            names.append(f"e{j + 1}^{j + 1}")
            mats.append(unit(j, j))
    return names, mats


def _build_so(n: int):
    names, mats = [], []
    for j, k in combinations(range(n), 2):
        names.append(f"M{j + 1}^{k + 1}")
        mats.append(mat_add(unit(j, k), unit(k, j, -1)))
    return names, mats


def _build_sp(n: int):
    # coordinates (x^1..x^n, p_1..p_n); e_jk = E[j, n+k], e^jk = E[n+j, k]
    names, mats = [], []
    for j in range(n):
        for k in range(j, n):
            names.append(f"a{j + 1}{k + 1}")
            mats.append(mat_add(unit(j, n + k), unit(k, n + j)))
    for j in range(n):
        for k in range(j, n):
            names.append(f"b{j + 1}{k + 1}")
            mats.append(mat_add(unit(n + j, k), unit(n + k, j)))
    for j in range(n):
        for k in range(n):
            names.append(f"d{j + 1}^{k + 1}")
            mats.append(mat_add(unit(j, k), unit(n + k, n + j, -1)))
    return names, mats


def _build_su(n: int):
    names, mats = [], []
    i = GaussQ(0, 1)
    for j, k in combinations(range(n), 2):
        names.append(f"F{j + 1}^{k + 1}")
        mats.append(mat_add(unit(j, k), unit(k, j, -1)))
    for j, k in combinations(range(n), 2):
        names.append(f"G{j + 1}^{k + 1}")
        mats.append(mat_add(unit(j, k, i), unit(k, j, i)))
    for j in range(n - 1):
        names.append(f"H{j + 1}")
        mats.append(mat_add(unit(j + 1, j + 1, i), unit(j, j, -i)))
    return names, mats


_PAULI = (
    {(0, 0): ONE, (1, 1): ONE},
    {(0, 1): ONE, (1, 0): ONE},
    {(0, 1): GaussQ(0, -1), (1, 0): GaussQ(0, 1)},
    {(0, 0): ONE, (1, 1): GaussQ(-1)},
)

SL2_STANDARD = {
    "X+": {(0, 1): ONE},
    "X-": {(1, 0): ONE},
    "H": {(0, 0): GaussQ("1/2"), (1, 1): GaussQ("-1/2")},
}


def lorentz_matrix(a: SparseMat) -> SparseMat:
    """4x4 real matrix of X -> A X + X A^dagger on X = x^mu sigma_mu."""
    adag = {(j, i): c.conjugate() for (i, j), c in a.items()}
    out: SparseMat = {}
    for nu, s_nu in enumerate(_PAULI):
        img = mat_add(mat_mul(a, s_nu), mat_mul(s_nu, adag))
        for mu, s_mu in enumerate(_PAULI):
            c = trace(mat_mul(s_mu, img)) * GaussQ("1/2")
            if c:
                out[(mu, nu)] = c
    return out


def _build_lorentz():
    i = GaussQ(0, 1)
    names, mats = [], []
    for nm in ("X+", "X-", "H"):
        names.append(nm)
        mats.append(lorentz_matrix(SL2_STANDARD[nm]))
    for nm in ("X+", "X-", "H"):
        names.append("J" + nm)
        mats.append(lorentz_matrix(mat_scale(SL2_STANDARD[nm], i)))
    return names, mats


def _build_poincare(p: int, q: int):
    n = p + q
    g = [1 if k < p else -1 for k in range(n)]
    names, mats = [], []
    for k in range(n):
        names.append(f"P{k}")
        mats.append(unit(k, n))
    for k, m in combinations(range(n), 2):
        # (Omega_km)_ab = delta_ak g_mb - delta_am g_kb
        names.append(f"Om{k}{m}")
        mats.append(mat_add(unit(k, m, g[m]), unit(m, k, -g[k])))
    return names, mats


def build_algebra(kind: str, n: int | None = None, signature: tuple[int, int] | None = None) -> LieAlgebraSpec:
    """Catalog lookup.

    ``sp`` with parameter n acts on a 2n-dimensional space; ``lorentz`` is the
    realified sl(2, C) acting on Minkowski space by X -> A X + X A^dagger;
    ``poincare`` takes ``signature=(p, q)`` (default (1, 3)).
    """
    if kind in ("sl", "gl", "so", "su"):
        if n is None or n < (1 if kind == "gl" else 2):
            raise UnsupportedAlgebra(f"{kind}({n}) is not supported")
        if kind in ("sl", "gl"):
            names, mats = _build_gl(n, kind == "sl")
        elif kind == "so":
            names, mats = _build_so(n)
        else:
            names, mats = _build_su(n)
        return LieAlgebraSpec(kind, n, tuple(names), tuple(mats), n, real=(kind == "su"))
    if kind == "sp":
        if n is None or n < 1:
            raise UnsupportedAlgebra(f"sp({n}) is not supported")
        names, mats = _build_sp(n)
        return LieAlgebraSpec(kind, n, tuple(names), tuple(mats), 2 * n)
    if kind == "lorentz":
        if signature not in (None, (1, 3)) or n not in (None, 4):
            raise UnsupportedAlgebra("the Lorentz algebra is realized only in signature (1, 3)")
        names, mats = _build_lorentz()
        return LieAlgebraSpec(kind, 4, tuple(names), tuple(mats), 4, real=True, signature=(1, 3))
    if kind == "poincare":
        p, q = signature if signature is not None else (1, 3)
        if p < 0 or q < 0 or p + q < 2:
            raise UnsupportedAlgebra(f"poincare{(p, q)} is not supported")
        if n is not None and n != p + q:
            raise UnsupportedAlgebra(f"n={n} does not match signature {(p, q)}")
        names, mats = _build_poincare(p, q)
        return LieAlgebraSpec(kind, p + q, tuple(names), tuple(mats), p + q + 1, real=True, affine=True, signature=(p, q))
    raise UnsupportedAlgebra(f"unknown algebra kind {kind!r}")


def custom_algebra(label: str, basis: dict[str, SparseMat], size: int, real: bool = False) -> LieAlgebraSpec:
    """Algebra spanned by user matrices (closure is checked eagerly)."""
    g = LieAlgebraSpec("custom", size, tuple(basis), tuple(basis.values()), size, real=real, extra={"label": label})
    g.structure_constants  # noqa: B018 - raises NotInAlgebra if not closed
    return g


def sl2_complex() -> LieAlgebraSpec:
    """Complex sl(2) with the standard basis X+, X-, H = diag(1/2, -1/2)."""
    return custom_algebra("sl2c", dict(SL2_STANDARD), 2)


# -- sl(n) inside sp(n) by the cotangent lift ----------------------------------------------


def _lift(a: SparseMat, n: int) -> SparseMat:
    """A -> diag(A, -A^T) on (x, p)."""
    out: SparseMat = {}
    for (i, j), v in a.items():
        out[(i, j)] = v
        out[(n + j, n + i)] = -v
    return out


def sl_to_sp(n: int) -> dict[str, list[GaussQ]]:
    """Coordinates in the sp(n) basis of the image of each sl(n) basis element.

    e_j^k goes to d_j^k; Cartan elements go to the matching combination of d_j^j.
    """
    sl, sp = build_algebra("sl", n), build_algebra("sp", n)
    return {name: sp.decompose(_lift(m, n)) for name, m in zip(sl.names, sl.matrices)}


def sl_to_sp_defect(n: int) -> list[tuple[str, str]]:
    """Basis pairs where phi([X, Y]) differs from [phi X, phi Y]."""
    sl, sp = build_algebra("sl", n), build_algebra("sp", n)
    bad = []
    for a, b in combinations(range(sl.dim), 2):
        lhs = _lift(commutator(sl.matrices[a], sl.matrices[b]), n)
        rhs = commutator(_lift(sl.matrices[a], n), _lift(sl.matrices[b], n))
        if sp.decompose(lhs) != sp.decompose(rhs):
            bad.append((sl.names[a], sl.names[b]))
    return bad
