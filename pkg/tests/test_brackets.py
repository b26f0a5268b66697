"""Bracket tables, Jacobi residuals and the phase-space constructions."""

import pytest

from rphase.brackets import (
    BracketTable,
    NotAntisymmetric,
    bracket,
    bracket_matrix_at,
    bivector_from_table,
    casimir_residual,
    cotangent_table,
    general_cotangent_table,
    gl_general_table,
    is_poisson,
    jacobiator,
    lagrangian_section_check,
    projection_consistent,
    slxx_table,
    so_general_table,
    sp_wr_table,
    table_from_bivector,
    triangular_cotangent_table,
    x_projection,
    xxpp_mixed_table,
)
from rphase.exactalg import GaussQ, Poly, RationalFn, coords, param
from rphase.liealg import NoModification, TensorElement, borel_r, build_algebra, invariant_s, standard_r
from rphase.mvfield import cotangent_space, pi0_cotangent

EPS = param("eps")


def test_slxx_leibniz_example():
    t = slxx_table(3)
    x1, x2, x3 = coords("x1", "x2", "x3")
    assert bracket(t, x1 * x2, x3) == (x1 * x2 * x3 * EPS).scale(2)
    assert bracket(t, Poly.const(1), x1) == Poly.const(0)


def test_quotient_rule():
    t = slxx_table(2)
    x1, x2 = coords("x1", "x2")
    got = bracket(t, RationalFn(1, x1), x2)
    # {1/x1, x2} = -{x1,x2}/x1^2 = -eps x2 / x1
    assert got == RationalFn(-(x2 * EPS), x1)


def test_roundtrip_with_bivectors():
    p = pi0_cotangent(2)
    t = table_from_bivector(p)
    assert bivector_from_table(t) == p
    assert t.entry("x1", "p1") == Poly.const(-1)
    assert table_from_bivector(p.scale(0)).is_zero()


def test_residual_order_and_count():
    t = xxpp_mixed_table(2)
    res = jacobiator(t)
    assert len(res) == 4
    assert [r.triple for r in res][0] == ("x1", "x2", "p1")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_slxx_poisson(n):
    assert is_poisson(slxx_table(n))


@pytest.mark.parametrize("n", [2, 3])
def test_sl_phase_space_constructions_agree(n):
    t = xxpp_mixed_table(n)
    assert is_poisson(t)
    assert t == gl_general_table(n)
    assert t == sp_wr_table(n)
    assert projection_consistent(t, slxx_table(n))


def test_r_zero_gives_canonical_table():
    zero = TensorElement("EE", None, {}, 2)
    assert cotangent_table(zero) == table_from_bivector(pi0_cotangent(2))


def test_borel_triangular():
    t = triangular_cotangent_table(borel_r())
    assert is_poisson(t)
    assert lagrangian_section_check(t).ok


def test_sl2_standard_r_not_triangular():
    t = triangular_cotangent_table(standard_r(build_algebra("sl", 2)))
    assert not is_poisson(t)


def test_not_antisymmetric():
    bad = TensorElement("EE", None, {(0, 1, 0, 1): Poly.const(1)}, 2)
    with pytest.raises(NotAntisymmetric):
        triangular_cotangent_table(bad)


def test_general_requires_symmetric_s():
    g = build_algebra("gl", 2)
    with pytest.raises(NoModification):
        general_cotangent_table(standard_r(g), invariant_s(g))


@pytest.mark.parametrize("lam", [Poly.const(0), EPS.scale(2)])
def test_perturbed_lambda_breaks_jacobi(lam):
    assert not is_poisson(gl_general_table(2, lam=lam, strict=False))
    assert not is_poisson(so_general_table(3, lam=lam, strict=False))


def test_so_general_poisson():
    assert is_poisson(so_general_table(3))


def test_determinant_at_origin_and_e1():
    t = xxpp_mixed_table(2)
    assert bracket_matrix_at(t, [0, 0, 0, 0]).determinant == Poly.const(1)
    d = bracket_matrix_at(t, [1, 0, 0, 0]).determinant
    assert d.subs({"eps": 0}) != Poly.const(0)
    assert bracket_matrix_at(BracketTable(cotangent_space(1), {}), [0, 0]).determinant == Poly.const(0)


def test_lagrangian_counterexample():
    gens = cotangent_space(2)
    t = BracketTable.from_pairs(gens, [(("p1", "p2"), Poly.gen("x1", gens))])
    chk = lagrangian_section_check(t)
    assert not chk.ok
    assert chk.pp_residuals == {("p1", "p2"): Poly.gen("x1", gens)}


def test_x_projection_of_general_gl():
    proj = x_projection(gl_general_table(3))
    assert proj == slxx_table(3)


def test_constant_is_casimir():
    assert not any(casimir_residual(slxx_table(3), Poly.const(1)))


def test_entries_are_antisymmetric():
    t = slxx_table(2)
    assert t.entry("x2", "x1") == -t.entry("x1", "x2")
    with pytest.raises(ValueError):
        BracketTable.from_pairs(("a",), [(("a", "a"), GaussQ(1))])
