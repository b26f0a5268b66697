import pytest

from rphase.exactalg import GaussQ, Poly, param
from rphase.liealg import (
    NoModification,
    TensorElement,
    UnsupportedAlgebra,
    algebraic_schouten,
    basis_point,
    borel_r,
    build_algebra,
    cybe_defect,
    gl_w,
    identity_tensor,
    invariant_s,
    perp_criterion,
    sl_to_sp,
    sl_to_sp_defect,
    so_w,
    stabilizer,
    standard_r,
    symmetric_modification,
)
from rphase.liealg.algebras import commutator

EPS = param("eps")


@pytest.mark.parametrize(
    "kind,n,dim",
    [("sl", 2, 3), ("sl", 4, 15), ("gl", 3, 9), ("so", 3, 3), ("so", 5, 10), ("sp", 1, 3), ("sp", 2, 10), ("su", 2, 3), ("su", 3, 8)],
)
def test_dimensions_and_defining_conditions(kind, n, dim):
    g = build_algebra(kind, n)
    assert g.dim == dim
    assert not g.defining_condition_defect()
    assert not g.jacobi_defect()
    assert not g.form_invariance_defect()


def test_named_bases():
    assert build_algebra("so", 3).names == ("M1^2", "M1^3", "M2^3")
    sp2 = build_algebra("sp", 2)
    assert {"a11", "a12", "a22", "b11", "b12", "b22", "d1^2"} <= set(sp2.names)


def test_su2_bracket():
    g = build_algebra("su", 2)
    c = commutator(g.matrices[g.index("F1^2")], g.matrices[g.index("G1^2")])
    i2 = GaussQ(0, 2)
    assert c == {(0, 0): i2, (1, 1): -i2}


def test_unsupported():
    with pytest.raises((UnsupportedAlgebra, ValueError)):
        build_algebra("e8", 3)


@pytest.mark.parametrize("kind,n", [("sl", 3), ("so", 4), ("sp", 2)])
def test_schouten_square_is_ad_invariant(kind, n):
    g = build_algebra(kind, n)
    r = standard_r(g)
    rr = algebraic_schouten(r, r)
    assert not rr.is_zero()
    assert all(d.is_zero() for d in rr.ad_invariance_defect().values())


def test_invariant_s_is_invariant():
    s = invariant_s(build_algebra("so", 4))
    assert all(d.is_zero() for d in s.ad_invariance_defect().values())


def test_borel_is_triangular():
    r = borel_r()
    assert algebraic_schouten(r, r).is_zero()
    assert not cybe_defect(r).coeffs


@pytest.mark.parametrize("n", [2, 3])
def test_gl_w_solves_cybe(n):
    assert not cybe_defect(gl_w(n)).coeffs


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("sign", [-1, 1])
def test_so_w_solves_cybe(n, sign):
    assert not cybe_defect(so_w(n, sign=sign)).coeffs


def test_r_alone_fails_cybe_and_zero_passes():
    assert cybe_defect(standard_r(build_algebra("gl", 2)).to_endv()).coeffs
    assert not cybe_defect(TensorElement("EE", None, {}, 2)).coeffs


@pytest.mark.parametrize("kind,n", [("gl", 2), ("gl", 3), ("so", 3), ("so", 4)])
def test_symmetric_modification_is_eps(kind, n):
    m = symmetric_modification(invariant_s(build_algebra(kind, n)))
    assert m.lam == EPS


def test_gl_s_eps_components():
    s = symmetric_modification(invariant_s(build_algebra("gl", 2)))
    s_eps = invariant_s(build_algebra("gl", 2)).to_endv() + identity_tensor(2).scale(s.lam)
    for j in range(2):
        for k in range(2):
            for l in range(2):
                for m in range(2):
                    want = EPS * (int(j == m and k == l) + int(j == l and k == m))
                    assert s_eps.coeffs.get((j, k, l, m), Poly.const(0)) == want


def test_no_modification_for_antisymmetric_defect():
    bad = TensorElement("EE", None, {(0, 1, 0, 0): Poly.const(1)}, 2)
    with pytest.raises(NoModification):
        symmetric_modification(bad)


def test_stabilizer_so():
    g = build_algebra("so", 4)
    st = stabilizer(g, basis_point(g))
    assert st.dim == 3 and len(st.perp) == 3


@pytest.mark.parametrize("kind,n", [("so", 4), ("sl", 3), ("sp", 2)])
def test_criterion_holds(kind, n):
    g = build_algebra(kind, n)
    assert perp_criterion(g, basis_point(g)).holds


def test_criterion_su3_witness():
    g = build_algebra("su", 3)
    res = perp_criterion(g, basis_point(g))
    assert not res.holds
    assert res.witness.left == "F1^3" and res.witness.right == "G1^3"
    assert res.witness.commutator[0][0] == "2*i" and res.witness.commutator[2][2] == "-2*i"
    assert res.root_block_span_dim == 1


@pytest.mark.parametrize("n", [2, 3])
def test_sl_embeds_in_sp(n):
    assert sl_to_sp_defect(n) == []
    sp = build_algebra("sp", n)
    img = sl_to_sp(n)["e1^2"]
    assert img[sp.index("d1^2")] == GaussQ(1)
    assert sum(1 for c in img if c) == 1
