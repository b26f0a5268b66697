import pytest

from rphase.brackets import bracket, cotangent_table, is_poisson
from rphase.exactalg import GaussQ, Poly, RationalFn, coords, param, rational_reduce
from rphase.liealg import build_algebra, standard_r
from rphase.mvfield import cotangent_space
from rphase.reality import (
    NotLocalized,
    T_identities,
    all_reality_defects,
    invariants,
    involution_defect,
    reality_defect,
    skew_defect,
    star_of,
    star_structure,
    univ_defects,
    universal_table,
    x2p2_defects,
)

EPS = param("eps")
I = GaussQ(0, 1)


@pytest.fixture(scope="module", params=[2, 3])
def S(request):
    return star_structure(request.param)


def test_lambda_undeformed_limit():
    assert invariants(3).Lam.subs({"eps": 0}) == Poly.const(1)


def test_star_examples():
    S = star_structure(2)
    inv = S.inv
    assert star_of(S, inv.Lam) == RationalFn(1, inv.Lam)
    want = rational_reduce(inv.E + (inv.p2 * inv.x2 * EPS).scale(I), inv.Lam)
    assert star_of(S, inv.E) == want
    x1 = Poly.gen("x1", S.generators)
    assert star_of(S, x1) == RationalFn(x1)
    assert star_of(S, RationalFn(1, inv.Lam)) == RationalFn(inv.Lam)


def test_not_localized():
    S = star_structure(2)
    with pytest.raises(NotLocalized):
        S.loc(RationalFn(1, S.lam + 1))


def test_T_is_reduced_over_lambda():
    S = star_structure(2)
    r = rational_reduce(S.T(0), S.lam)
    assert r.den == S.lam or r.den == -S.lam


def test_E_x_bracket():
    S = star_structure(3)
    inv = S.inv
    v = coords(*S.generators)
    for j in range(3):
        want = v[j] + (inv.E * v[j] * EPS).scale(2 * I) - (inv.x2 * v[3 + j] * EPS).scale(I)
        assert bracket(S.table, inv.E, v[j]) == want


def test_identities(S):
    assert not any(x2p2_defects(S.n, S.table).values())
    assert not any(x2p2_defects(S.n, universal_table(S.n)).values())
    assert not any(univ_defects(S.n).values())
    assert not any(T_identities(S).values())
    assert skew_defect(S.n) == []


def test_involution(S):
    assert not any(involution_defect(S))


def test_reality(S):
    assert not any(all_reality_defects(S))
    assert not reality_defect(S, "x1", "p2")


def test_table_is_poisson(S):
    assert is_poisson(S.table)


def test_plus_branch_is_conjugate():
    S = star_structure(2, branch=1)
    assert S.lam == star_structure(2).lam.conjugate()
    assert not any(all_reality_defects(S))
    assert not any(involution_defect(S))


def test_invariants_are_casimirs_of_r_part():
    n = 3
    r = standard_r(build_algebra("so", n))
    t = cotangent_table(r, canonical=False)
    inv = invariants(n)
    for f in (inv.x2, inv.p2, inv.E):
        for g in cotangent_space(n):
            assert not bracket(t, f, Poly.gen(g, cotangent_space(n)))


def test_bad_branch():
    with pytest.raises(ValueError):
        star_structure(2, branch=0)
