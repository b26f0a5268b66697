"""Star involution on the Lambda-localized phase space of so(n) and its reality.

Elements of the localized ring are written N / Lambda^k with N polynomial,
so identities are checked by clearing powers of Lambda and comparing
numerators exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..brackets import BracketTable, bracket, cotangent_table, so_general_table
from ..exactalg import GaussQ, Poly, RationalFn, coords, div_exact, param, rational_reduce
from ..liealg import TensorElement, build_algebra, identity_tensor, invariant_s, standard_r
from ..mvfield import cotangent_space

EPS = param("eps")


class NotLocalized(ValueError):
    """Denominator is not a unit times a power of Lambda."""


@dataclass(frozen=True)
class Invariants:
    x2: Poly
    p2: Poly
    E: Poly
    Lam: Poly


def invariants(n: int, eps: Poly = EPS, branch: int = -1) -> Invariants:
    """x^2, p^2, E = <p,x> and Lambda = 1 + 2i eps E - eps^2 x^2 p^2 (minus branch).

    The plus branch uses the complex-conjugate Lambda.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    v = coords(*cotangent_space(n))
    x, p = v[:n], v[n:]
    x2 = sum((xi * xi for xi in x[1:]), x[0] * x[0])
    p2 = sum((pi * pi for pi in p[1:]), p[0] * p[0])
    E = sum((p[j] * x[j] for j in range(1, n)), p[0] * x[0])
    i = GaussQ(0, -branch)
    lam = 1 + (E * eps).scale(2 * i) - x2 * p2 * eps * eps
    return Invariants(x2, p2, E, lam)


@dataclass(frozen=True)
class LocFn:
    """num / Lambda^k (k may be negative)."""

    num: Poly
    k: int

    def __bool__(self) -> bool:
        return bool(self.num)


@dataclass(frozen=True, eq=False)
class StarStructure:
    n: int
    table: BracketTable
    lam: Poly
    inv: Invariants
    eps: Poly
    branch: int
    w: TensorElement
    r: TensorElement

    @property
    def generators(self) -> tuple[str, ...]:
        return self.table.generators

    # -- localized arithmetic ---------------------------------------------------

    def loc(self, f) -> LocFn:
        """Coerce Poly, LocFn or RationalFn with Lambda-power denominator."""
        if isinstance(f, LocFn):
            return f
        if isinstance(f, RationalFn):
            return self._from_rational(f)
        return LocFn(Poly.coerce(f), 0)

    def _from_rational(self, f: RationalFn) -> LocFn:
        den, k = f.den, 0
        while not den.is_scalar:
            q = div_exact(den, self.lam)
            if q is None:
                raise NotLocalized(f"denominator {f.den} is not a unit times a power of Lambda")
            den, k = q, k + 1
        if den.is_constant:
            return LocFn(f.num.scale(den.constant_value().inverse()), k)
        q = div_exact(f.num, den)
        if q is None:
            raise NotLocalized(f"parameter factor {den} of the denominator does not divide the numerator")
        return LocFn(q, k)

    def align(self, a: LocFn, b: LocFn) -> tuple[Poly, Poly, int]:
        k = max(a.k, b.k)
        return a.num * self.lam ** (k - a.k), b.num * self.lam ** (k - b.k), k

    def sub(self, a, b) -> LocFn:
        a, b = self.loc(a), self.loc(b)
        x, y, k = self.align(a, b)
        return self.normalize(LocFn(x - y, k))

    def mul(self, a, b) -> LocFn:
        a, b = self.loc(a), self.loc(b)
        return LocFn(a.num * b.num, a.k + b.k)

    def normalize(self, f: LocFn) -> LocFn:
        """Divide out Lambda while exact; negative powers are multiplied in."""
        num, k = f.num, f.k
        if not num:
            return LocFn(num, 0)
        if k < 0:
            return LocFn(num * self.lam ** (-k), 0)
        while k > 0:
            q = div_exact(num, self.lam)
            if q is None:
                break
            num, k = q, k - 1
        return LocFn(num, k)

    def equal(self, a, b) -> bool:
        return not self.sub(a, b)

    def as_rational(self, f) -> RationalFn:
        f = self.normalize(self.loc(f))
        if f.k == 0:
            return RationalFn(f.num)
        return rational_reduce(f.num, self.lam ** f.k)

    def bracket(self, a, b) -> LocFn:
        """{N/L^a, M/L^b} = (L{N,M} - a N{L,M} - b M{N,L}) / L^(a+b+1)."""
        a, b = self.loc(a), self.loc(b)
        t = self.table
        if a.k == 0 and b.k == 0:
            return LocFn(bracket(t, a.num, b.num), 0)
        num = self.lam * bracket(t, a.num, b.num)
        if a.k:
            num = num - (a.num * bracket(t, self.lam, b.num)).scale(a.k)
        if b.k:
            num = num - (b.num * bracket(t, a.num, self.lam)).scale(b.k)
        return self.normalize(LocFn(num, a.k + b.k + 1))

    # -- star ----------------------------------------------------------------------

    def T(self, j: int) -> Poly:
        """T_j = p_j + i eps p^2 x_j (0-based j), so that p_j* = T_j / Lambda."""
        v = coords(*self.generators)
        i = GaussQ(0, -self.branch)
        return v[self.n + j] + (self.inv.p2 * v[j] * self.eps).scale(i)

    def star(self, f) -> LocFn:
        """Antilinear multiplicative extension of x* = x, p_j* = T_j / Lambda."""
        f = self.loc(f)
        num = f.num.conjugate()
        by_deg: dict[int, dict] = {}
        gens = num.gens
        ppos = [gens.index(g) for g in self.generators[self.n:] if g in gens]
        for key, c in num.terms.items():
            d = sum(key[i] for i in ppos)
            by_deg.setdefault(d, {})[key] = c
        top = max(by_deg) if by_deg else 0
        tsub = {self.generators[self.n + j]: self.T(j) for j in range(self.n)}
        acc = Poly.zero(self.generators)
        for d, terms in by_deg.items():
            part = Poly(gens, terms).subs(tsub)
            acc = acc + part * self.lam ** (top - d)
        # (num / L^k)* = num* L^k
        return self.normalize(LocFn(acc, top - f.k))


def star_structure(n: int, eps: Poly = EPS, branch: int = -1) -> StarStructure:
    """so(n) general table with w = r + branch*i*s_eps and its star."""
    if branch not in (-1, 1):
        raise ValueError("branch must be -1 or +1")
    g = build_algebra("so", n)
    r = standard_r(g, eps).to_endv()
    s = (invariant_s(g, eps).to_endv() + identity_tensor(n).scale(eps)).scale(GaussQ(0, branch))
    w = r + s
    table = cotangent_table(r, w, provenance=f"so({n}) general, w = r {'-' if branch < 0 else '+'} i s_eps")
    inv = invariants(n, eps, branch)
    return StarStructure(n, table, inv.Lam, inv, eps, branch, w, r)


def star_of(S: StarStructure, f) -> RationalFn:
    return S.as_rational(S.star(f))


def _gen(S: StarStructure, name: str) -> Poly:
    return Poly.gen(name, S.generators)


@dataclass(frozen=True)
class Defect:
    pair: tuple[str, ...]
    numerator: Poly
    lam_power: int

    def __bool__(self) -> bool:
        return bool(self.numerator)


def involution_defect(S: StarStructure) -> list[Defect]:
    """star(star(g)) - g for every generator, Lambda-cleared."""
    out = []
    for name in S.generators:
        g = _gen(S, name)
        d = S.sub(S.star(S.star(g)), g)
        out.append(Defect((name,), d.num, d.k))
    return out


def reality_defect(S: StarStructure, f: str, g: str) -> Defect:
    """{f,g}* - {f*,g*}, Lambda-cleared."""
    a, b = _gen(S, f), _gen(S, g)
    lhs = S.star(S.bracket(a, b))
    rhs = S.bracket(S.star(a), S.star(b))
    d = S.sub(lhs, rhs)
    return Defect((f, g), d.num, d.k)


def all_reality_defects(S: StarStructure) -> list[Defect]:
    return [reality_defect(S, a, b) for a, b in combinations(S.generators, 2)]


# -- auxiliary identities ----------------------------------------------------------


def universal_table(n: int, eps: Poly = EPS, branch: int = -1) -> BracketTable:
    """pi0 + branch*i (s_eps)_{VV*} alone (r set to zero)."""
    g = build_algebra("so", n)
    s = (invariant_s(g, eps).to_endv() + identity_tensor(n).scale(eps)).scale(GaussQ(0, branch))
    zero = TensorElement("EE", None, {}, n)
    return cotangent_table(zero, s, provenance=f"so({n}) universal part")


def x2p2_defects(n: int, table: BracketTable | None = None, eps: Poly = EPS) -> dict[str, Poly]:
    """Residuals of the invariant-function bracket identities (minus branch)."""
    table = table or star_structure(n, eps).table
    inv = invariants(n, eps)
    v = coords(*cotangent_space(n))
    x, p = v[:n], v[n:]
    i = GaussQ(0, 1)
    x2, p2, E, L = inv.x2, inv.p2, inv.E, inv.Lam
    half = GaussQ("1/2")
    out = {}
    for j in range(n):
        k = j + 1
        out[f"{{x2,x{k}}}"] = bracket(table, x2, x[j])
        out[f"{{p2/2,x{k}}}"] = bracket(table, p2.scale(half), x[j]) - (p[j] + (p2 * x[j] * eps).scale(i))
        out[f"{{p2,p{k}}}"] = bracket(table, p2, p[j])
        out[f"{{p{k},x2/2}}"] = bracket(table, p[j], x2.scale(half)) - (x[j] + (x2 * p[j] * eps).scale(i))
        out[f"{{E,x{k}}}"] = bracket(table, E, x[j]) - (x[j] + (E * x[j] * eps).scale(2 * i) - (x2 * p[j] * eps).scale(i))
        out[f"{{p{k},E}}"] = bracket(table, p[j], E) - (p[j] + (E * p[j] * eps).scale(2 * i) - (p2 * x[j] * eps).scale(i))
        out[f"{{Lambda,x{k}}}"] = bracket(table, L, x[j]) - (L * x[j] * eps).scale(2 * i)
        out[f"{{p{k},Lambda}}"] = bracket(table, p[j], L) - (p[j] * L * eps).scale(2 * i)
    return out


def univ_defects(n: int, eps: Poly = EPS) -> dict[str, Poly]:
    """{p_j, x^k} - (delta + i eps (E delta + p_j x^k - x_j p^k)) under the universal table."""
    t = universal_table(n, eps)
    inv = invariants(n, eps)
    v = coords(*cotangent_space(n))
    x, p = v[:n], v[n:]
    i = GaussQ(0, 1)
    out = {}
    for j in range(n):
        for k in range(n):
            expect = (inv.E * int(j == k) + p[j] * x[k] - x[j] * p[k]) * eps
            expect = expect.scale(i) + int(j == k)
            out[f"{{p{j + 1},x{k + 1}}}"] = bracket(t, p[j], x[k]) - expect
    return out


def T_identities(S: StarStructure) -> dict[str, Poly]:
    """{T_j, Lambda} = 2i eps T_j Lambda and {T_j, T_k} = T_l T_m r^{lm}_{jk}."""
    n = S.n
    i = GaussQ(0, -S.branch)
    out = {}
    Ts = [S.T(j) for j in range(n)]
    for j in range(n):
        out[f"{{T{j + 1},Lambda}}"] = bracket(S.table, Ts[j], S.lam) - (Ts[j] * S.lam * S.eps).scale(2 * i)
    for j, k in combinations(range(n), 2):
        rhs = Poly.zero(S.generators)
        for (l, m, jj, kk), c in S.r.coeffs.items():
            if (jj, kk) == (j, k):
                rhs = rhs + Ts[l] * Ts[m] * c
        out[f"{{T{j + 1},T{k + 1}}}"] = bracket(S.table, Ts[j], Ts[k]) - rhs
    return out


def skew_defect(n: int, eps: Poly = EPS) -> list[tuple[int, int, int, int]]:
    """Index tuples where r^{jk}_{mn} + r^{mk}_{jn} != 0 (Kronecker metric)."""
    r = standard_r(build_algebra("so", n), eps).to_endv()
    bad = []
    rng = range(n)
    zero = Poly.const(0)
    for j in rng:
        for k in rng:
            for m in rng:
                for q in rng:
                    v = r.coeffs.get((j, k, m, q), zero) + r.coeffs.get((m, k, j, q), zero)
                    if v:
                        bad.append((j, k, m, q))
    return bad
