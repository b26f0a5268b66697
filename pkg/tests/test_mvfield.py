import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rphase.exactalg import GaussQ, Poly, coords, param
from rphase.liealg import TensorElement, algebraic_schouten, build_algebra, omega_poincare, standard_r
from rphase.mvfield import (
    ActionMismatch,
    MultivectorField,
    SpaceMismatch,
    complex_rotation,
    contraction,
    cotangent_action,
    default_action,
    evaluate_at,
    fundamental_field,
    norm_squared,
    omega_vanishes_at,
    pi0_complex,
    pi0_cotangent,
    schouten_field,
    vector_bracket,
    wedge,
)

EPS = param("eps")
SPACE = ("x1", "x2", "x3")
X = coords(*SPACE)


@st.composite
def vector_fields(draw):
    comps = []
    for _ in SPACE:
        c = Poly.zero(SPACE)
        for coef, (a, b, e) in draw(st.lists(st.tuples(st.integers(-2, 2), st.tuples(*[st.integers(0, 2)] * 3)), max_size=3)):
            c = c + X[0] ** a * X[1] ** b * X[2] ** e * coef
        comps.append(c)
    return MultivectorField.vector(SPACE, dict(enumerate(comps)))


@given(vector_fields(), vector_fields(), vector_fields())
@settings(max_examples=25, deadline=None)
def test_schouten_of_decomposables_is_symmetric_and_vanishes_on_squares(u, v, w):
    p, q = wedge(u, v), wedge(v, w)
    assert schouten_field(p, q) == schouten_field(q, p)
    assert wedge(u, u).is_zero()


@given(vector_fields(), vector_fields(), vector_fields())
@settings(max_examples=25, deadline=None)
def test_vector_bracket_jacobi(u, v, w):
    j = vector_bracket(u, vector_bracket(v, w)) + vector_bracket(v, vector_bracket(w, u)) + vector_bracket(w, vector_bracket(u, v))
    assert j.is_zero()


@pytest.mark.parametrize("kind,n", [("sl", 2), ("sl", 3), ("so", 3), ("so", 4), ("sp", 1), ("su", 2)])
def test_cross_oracle(kind, n):
    g = build_algebra(kind, n)
    act = default_action(g)
    r = standard_r(g)
    rm = fundamental_field(r, act)
    assert schouten_field(rm, rm) == fundamental_field(algebraic_schouten(r, r), act)


@pytest.mark.parametrize("kind,n", [("sl", 3), ("so", 4), ("sp", 2), ("su", 3), ("gl", 2), ("lorentz", None)])
def test_actions_are_representations(kind, n):
    act = default_action(build_algebra(kind, n))
    assert not act.representation_defect()
    assert not act.bracket_defect()


def test_cotangent_action_is_representation():
    act = cotangent_action(build_algebra("sl", 3))
    assert not act.representation_defect()


def test_sl2_r_field():
    g = build_algebra("sl", 2)
    rv = fundamental_field(standard_r(g), default_action(g))
    x1, x2 = coords("x1", "x2")
    assert rv == MultivectorField.from_terms(("x1", "x2"), 2, [(x1 * x2 * EPS, (0, 1))])
    at = evaluate_at(rv, [1, 1])
    assert at.component((0, 1)) == EPS


@pytest.mark.parametrize("sig", [(1, 3), (2, 2)])
def test_poincare_omega_vanishes(sig):
    g = build_algebra("poincare", signature=sig)
    assert fundamental_field(omega_poincare(*sig).omega, default_action(g)).is_zero()


def test_lorentz_fields():
    g = build_algebra("lorentz")
    act = default_action(g)
    real = TensorElement.from_terms("L3", g, [(1, ("X+", "H", "X-"))])
    imag = TensorElement.from_terms("L3", g, [(1, ("X+", "JH", "X-"))])
    assert fundamental_field(real, act).is_zero()
    assert not fundamental_field(imag, act).is_zero()


@pytest.mark.parametrize("kind,n", [("so", 3), ("sl", 3), ("sp", 2), ("su", 2), ("su", 3)])
def test_omega_agrees_with_criterion(kind, n):
    from rphase.liealg import basis_point, perp_criterion

    g = build_algebra(kind, n)
    assert omega_vanishes_at(g, basis_point(g)) == perp_criterion(g, basis_point(g)).holds


def test_constants():
    assert pi0_cotangent(2).component((0, 2)) == Poly.const(-1)
    assert pi0_complex(1).component((0, 1)) == Poly.const(GaussQ(0, 2))
    x1 = Poly.gen("x1", pi0_cotangent(1).space)
    assert contraction(pi0_cotangent(1), x1).component(("p1",)) == Poly.const(-1)
    assert wedge(complex_rotation(2), complex_rotation(2)).is_zero()
    assert norm_squared(1) == Poly.gen("z1", ("z1", "zb1")) * Poly.gen("zb1", ("z1", "zb1"))


def test_errors():
    with pytest.raises(SpaceMismatch):
        wedge(MultivectorField.zero(("x1",), 1), MultivectorField.zero(("y1",), 1))
    g, h = build_algebra("sl", 2), build_algebra("so", 3)
    with pytest.raises(ActionMismatch):
        fundamental_field(standard_r(g), default_action(h))
    with pytest.raises(ValueError):
        evaluate_at(pi0_cotangent(1), [0])
