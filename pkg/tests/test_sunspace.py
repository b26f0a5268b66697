import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rphase.brackets import is_poisson
from rphase.exactalg import Poly, RationalFn
from rphase.sunspace import (
    DeltaAnsatz,
    InvalidFamily,
    bracket_square_defect,
    corollary_defect,
    family_table,
    helper_identities,
    hermiticity_defect,
    is_sphere_tangent,
    sphere_casimir,
    warunek_residual,
)
from rphase.sunspace.families import H, SIGMA, T


@pytest.mark.parametrize("n", [2, 3])
def test_corollary(n):
    assert corollary_defect(n).is_zero()


@pytest.mark.parametrize("sigma", [1, -1, SIGMA])
def test_case_one_ansatz(sigma):
    d = DeltaAnsatz(T * sigma, Poly.const(1) * sigma)
    assert not warunek_residual(d)
    assert bracket_square_defect(d, 2).is_zero()


def test_solved_form():
    d = DeltaAnsatz.solved(1 - T * T)
    assert isinstance(d.b, RationalFn)
    assert not warunek_residual(d)
    with pytest.raises(ZeroDivisionError):
        DeltaAnsatz.solved(T)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4))
@settings(max_examples=30, deadline=None)
def test_solved_form_always_satisfies(coeffs):
    a = sum((T**k * c for k, c in enumerate(coeffs)), Poly.zero(("t",)))
    try:
        d = DeltaAnsatz.solved(a)
    except ZeroDivisionError:
        return
    assert not warunek_residual(d)


def test_helper_identities():
    assert helper_identities(1 + T * T, T).holds
    assert helper_identities(T * 3, Poly.const(2)).holds


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("case", ["sphere", "twisted", "degree4"])
def test_families_are_poisson_and_hermitian(case, n):
    fam = family_table(case, n)
    assert is_poisson(fam.table)
    assert hermiticity_defect(fam.table) == []


def test_sphere_casimir_only_for_sphere():
    assert not any(sphere_casimir(family_table("sphere", 2)))
    assert any(sphere_casimir(family_table("twisted", 2)))


def test_custom_a_t_b_1_is_poisson():
    # a = t, b = 1 satisfies a a' + b (a - a' t) = t
    fam = family_table("custom", 2, a=T, b=1)
    assert not warunek_residual(fam.ansatz)
    assert is_poisson(fam.table)


@pytest.mark.parametrize("a,b", [(T * 2, 1), (Poly.const(1), 0)])
def test_violating_ansatz_breaks_jacobi(a, b):
    fam = family_table("custom", 2, a=a, b=b)
    assert warunek_residual(fam.ansatz)
    assert not is_poisson(fam.table)


@pytest.mark.parametrize("a,b,tangent", [(T, 1, True), (T * 2, 1, False), (T * 2, 2, True), (Poly.const(1), 0, False), (T * T, T, True)])
def test_tangency_iff_a_equals_bt(a, b, tangent):
    assert is_sphere_tangent(DeltaAnsatz(a, b), 2) is tangent


def test_invalid_families():
    with pytest.raises(InvalidFamily):
        family_table("degree4", 2, h=0)
    with pytest.raises(InvalidFamily):
        family_table("sphere", 2, sigma=2)
    with pytest.raises(InvalidFamily):
        family_table("nope", 2)
    with pytest.raises(ValueError):
        DeltaAnsatz(Poly.gen("z1"), 1)


def test_degree4_uses_inverse_h():
    fam = family_table("degree4", 2)
    assert fam.ansatz.b == (T * H**-1).with_gens(("t",))
