"""Standard r-matrices, invariant symmetric elements and the CYBE defect."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..exactalg import GaussQ, Poly, param, rref
from .algebras import LieAlgebraSpec, UnsupportedAlgebra, build_algebra
from .tensors import TensorElement, _accumulate

EPS = param("eps")
HALF = GaussQ("1/2")


class NoModification(ValueError):
    """No lambda makes s + lambda I(x)I symmetric in its upper indices."""

    def __init__(self, witness: tuple[int, int, int, int], message: str):
        super().__init__(f"{message}; witness index (j,k,l,m) = {tuple(i + 1 for i in witness)}")
        self.witness = witness


def standard_r(g: LieAlgebraSpec, eps: Poly = EPS) -> TensorElement:
    """The standard r-matrix of a catalog algebra, scaled by ``eps``."""
    n = g.n
    terms = []
    if g.kind in ("sl", "gl"):
        for j, k in combinations(range(1, n + 1), 2):
            terms.append((eps, (f"e{j}^{k}", f"e{k}^{j}")))
    elif g.kind == "so":
        for j in range(1, n + 1):
            jp = n + 1 - j
            for k in range(j + 1, jp):
                # M_k^{j'} with k < j'
                terms.append((eps, (f"M{j}^{k}", f"M{k}^{jp}")))
    elif g.kind == "sp":
        for j, k in combinations(range(1, n + 1), 2):
            terms.append((eps, (f"d{j}^{k}", f"d{k}^{j}")))
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                lo, hi = min(j, k), max(j, k)
                terms.append((eps.scale(HALF), (f"a{lo}{hi}", f"b{lo}{hi}")))
    elif g.kind == "su":
        for j, k in combinations(range(1, n + 1), 2):
            terms.append((eps.scale(HALF), (f"F{j}^{k}", f"G{j}^{k}")))
    else:
        raise UnsupportedAlgebra(f"no standard r-matrix is cataloged for {g.label}; supply a custom tensor")
    return TensorElement.from_terms("L2", g, terms)


def invariant_s(g: LieAlgebraSpec, eps: Poly = EPS) -> TensorElement:
    """Symmetric invariant element of g (x) g for gl and so."""
    n = g.n
    terms = []
    if g.kind == "gl":
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                terms.append((eps, (f"e{j}^{k}", f"e{k}^{j}")))
    elif g.kind == "so":
        # (eps/2) sum_{j,k} M_j^k (x) M_k^j = -eps sum_{j<k} M_j^k (x) M_j^k
        for j, k in combinations(range(1, n + 1), 2):
            terms.append((-eps, (f"M{j}^{k}", f"M{j}^{k}")))
    else:
        raise UnsupportedAlgebra(f"invariant_s is cataloged for gl and so, not {g.label}")
    return TensorElement.from_terms("gg", g, terms)


def identity_tensor(size: int) -> TensorElement:
    """I (x) I in End V (x) End V."""
    one = Poly.const(1)
    return TensorElement("EE", None, {(j, k, j, k): one for j in range(size) for k in range(size)}, size)


def symmetry_defect(s: TensorElement) -> TensorElement:
    """s^{jk}_{lm} - s^{kj}_{lm} as an EE table."""
    s = s.to_endv()
    out: dict = {}
    for (j, k, l, m), v in s.coeffs.items():
        _accumulate(out, (j, k, l, m), v)
        _accumulate(out, (k, j, l, m), -v)
    return TensorElement("EE", None, out, s.size)


@dataclass(frozen=True)
class Modification:
    lam: Poly
    witness_slope: tuple[int, int, int, int]


def symmetric_modification(s: TensorElement) -> Modification:
    """The unique lambda with s + lambda I(x)I symmetric in upper indices.

    The defect at each index is c + lambda*slope with slope in {0, +1, -1};
    a nonzero slope fixes lambda, zero slopes demand c = 0.
    """
    d = symmetry_defect(s)
    size = d.size
    lam = None
    where = None
    for j in range(size):
        for k in range(size):
            for l in range(size):
                for m in range(size):
                    c = d.coeffs.get((j, k, l, m), Poly.const(0))
                    slope = int(j == l and k == m) - int(k == l and j == m)
                    if slope == 0:
                        if c:
                            raise NoModification((j, k, l, m), "defect is independent of lambda and nonzero")
                        continue
                    cand = -c if slope > 0 else c
                    if lam is None:
                        lam, where = cand, (j, k, l, m)
                    elif cand != lam:
                        raise NoModification((j, k, l, m), f"conflicting values {lam} and {cand}")
    if lam is None:
        raise NoModification((0, 0, 0, 0), "no index constrains lambda")
    return Modification(lam, where)


def modified(s: TensorElement, lam) -> TensorElement:
    lam = lam if isinstance(lam, Poly) else Poly.const(lam)
    s = s.to_endv()
    return s + identity_tensor(s.size).scale(lam)


# -- classical Yang-Baxter --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TripleTensor:
    """Element of End V^(x3) keyed by (a,b,c,d,e,f) for E_ab (x) E_cd (x) E_ef."""

    size: int
    coeffs: dict

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_matrix(self) -> list[list[Poly]]:
        n = self.size
        dim = n ** 3
        zero = Poly.const(0)
        mat = [[zero] * dim for _ in range(dim)]
        for (a, b, c, d, e, f), v in self.coeffs.items():
            mat[(a * n + c) * n + e][(b * n + d) * n + f] = v
        return mat

    def render(self, limit: int | None = None) -> list[str]:
        keys = sorted(self.coeffs)[:limit]
        return [
            f"E{a + 1}{b + 1}(x)E{c + 1}{d + 1}(x)E{e + 1}{f + 1}: {self.coeffs[(a, b, c, d, e, f)]}"
            for a, b, c, d, e, f in keys
        ]


def cybe_defect(w: TensorElement) -> TripleTensor:
    """[w12,w13] + [w12,w23] + [w13,w23] on V(x)V(x)V."""
    w = w.to_endv()
    terms = [((j, l), (k, m), v) for (j, k, l, m), v in w.coeffs.items()]
    out: dict = {}

    def mul(x, y):
        return (x[0], y[1]) if x[1] == y[0] else None

    def add(key, v):
        _accumulate(out, key, v)

    for (a1, b1, v1) in terms:
        for (a2, b2, v2) in terms:
            c = v1 * v2
            # [w12, w13]: first factors multiply
            p, q = mul(a1, a2), mul(a2, a1)
            if p:
                add(p + b1 + b2, c)
            if q:
                add(q + b1 + b2, -c)
            # [w12, w23]: middle factors
            p, q = mul(b1, a2), mul(a2, b1)
            if p:
                add(a1 + p + b2, c)
            if q:
                add(a1 + q + b2, -c)
            # [w13, w23]: third factors
            p, q = mul(b1, b2), mul(b2, b1)
            if p:
                add(a1 + a2 + p, c)
            if q:
                add(a1 + a2 + q, -c)
    return TripleTensor(w.size, out)


def gl_w(n: int, eps: Poly = EPS) -> TensorElement:
    """w = r + s for gl(n)."""
    g = build_algebra("gl", n)
    return standard_r(g, eps).to_endv() + invariant_s(g, eps).to_endv()


def so_w(n: int, eps: Poly = EPS, sign: int = -1, lam=None) -> TensorElement:
    """w = r + sign*i*s_lam for so(n); the default is the minus branch with s (no shift)."""
    g = build_algebra("so", n)
    s = invariant_s(g, eps).to_endv()
    if lam is not None:
        s = modified(s, lam)
    return standard_r(g, eps).to_endv() + s.scale(GaussQ(0, sign))


# -- Poincare invariant trivector ---------------------------------------------------


@dataclass(frozen=True, eq=False)
class PoincareOmega:
    omega: TensorElement
    raw_summands: int
    ordered_summands: int


def omega_poincare(p: int, q: int) -> PoincareOmega:
    """Omega = g^{jk} g^{lm} e_j∧e_l∧Omega_km for the Poincare algebra R^{p+q} ⋊ o(p,q)."""
    if p + q <= 3:
        raise UnsupportedAlgebra("the invariant trivector is cataloged for p+q > 3")
    g = build_algebra("poincare", signature=(p, q))
    n = p + q
    ginv = [1 if k < p else -1 for k in range(n)]
    terms = []
    raw = 0
    for j in range(n):
        for l in range(n):
            k, m = j, l  # diagonal metric
            if k == m or j == l:
                continue
            raw += 1
            coeff = ginv[j] * ginv[l]
            if k < m:
                terms.append((coeff, (f"P{j}", f"P{l}", f"Om{k}{m}")))
            else:
                terms.append((-coeff, (f"P{j}", f"P{l}", f"Om{m}{k}")))
    return PoincareOmega(TensorElement.from_terms("L3", g, terms), raw, 2 * raw)


# -- canonical invariant trivector of a semisimple algebra ------------------------------


def canonical_trivector(g: LieAlgebraSpec) -> TensorElement:
    """Omega with Omega^dagger(X,Y,Z) = Tr([X,Y]Z), indices raised by the trace form."""
    dim = g.dim
    form = g.form
    aug = [row + [GaussQ(int(i == j)) for j in range(dim)] for i, row in enumerate(form)]
    red, piv = rref(aug)
    if len(piv) != dim or piv[-1] >= dim:
        raise ValueError(f"trace form of {g.label} is degenerate")
    kinv = [row[dim:] for row in red]
    low: dict[tuple[int, int, int], GaussQ] = {}
    for a, b in combinations(range(dim), 2):
        coeffs = g.bracket(a, b)
        for c in range(dim):
            t = GaussQ(0)
            for e, f in coeffs.items():
                t = t + f * form[e][c]
            if t:
                low[(a, b, c)] = t
    terms = []
    for (a, b, c), t in low.items():
        for a2 in range(dim):
            if not kinv[a2][a]:
                continue
            for b2 in range(dim):
                if not kinv[b2][b]:
                    continue
                for c2 in range(dim):
                    if not kinv[c2][c]:
                        continue
                    terms.append((t * kinv[a2][a] * kinv[b2][b] * kinv[c2][c] * GaussQ("1/3"), (a2, b2, c2)))
    return TensorElement.from_terms("L3", g, [(Poly.const(c), k) for c, k in terms])



def borel_r(eps: Poly = EPS) -> TensorElement:
    """Triangular r = eps H∧X+ in gl(2), H = (e1^1 - e2^2)/2, X+ = e1^2."""
    g = build_algebra("gl", 2)
    half = eps.scale(GaussQ("1/2"))
    terms = [(half, ("e1^1", "e1^2")), (-half, ("e2^2", "e1^2"))]
    return TensorElement.from_terms("L2", g, terms)
