"""Small exact linear algebra over Q(i) and determinants over polynomial rings."""

from __future__ import annotations

from collections.abc import Sequence

from .gauss import GaussQ, ZERO
from .poly import Poly

Vector = list[GaussQ]


def rref(rows: Sequence[Sequence[GaussQ]]) -> tuple[list[list[GaussQ]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[GaussQ.coerce(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[GaussQ]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[GaussQ]], ncols: int) -> list[Vector]:
    """Basis of {v : rows . v = 0}."""
    if not rows:
        return [[GaussQ(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = GaussQ(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_space_basis(rows: Sequence[Sequence[GaussQ]]) -> list[Vector]:
    return rref(rows)[0]


def solve_in_span(basis: Sequence[Sequence[GaussQ]], target: Sequence[GaussQ]) -> Vector | None:
    """Coefficients c with sum c_i basis_i = target, or None."""
    k = len(basis)
    n = len(target)
    aug = [[basis[i][j] for i in range(k)] + [GaussQ.coerce(target[j])] for j in range(n)]
    red, piv = rref(aug)
    if k in piv:
        return None
    sol = [ZERO] * k
    for row, p in zip(red, piv):
        sol[p] = row[k]
    return sol


def det_poly(mat: Sequence[Sequence[Poly]]) -> Poly:
    """Division-free determinant by expansion along rows with memoized minors."""
    n = len(mat)
    if n == 0:
        return Poly.const(1)
    memo: dict[tuple[int, frozenset], Poly] = {}

    def minor(row: int, cols: frozenset) -> Poly:
        if row == n:
            return Poly.const(1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Poly.const(0)
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            entry = mat[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols - {c})
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[key] = total
        return total

    return minor(0, frozenset(range(n)))
