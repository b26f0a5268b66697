"""Each check maps a TaskSpec to labelled residuals; an empty list means zero defect."""

from __future__ import annotations

from dataclasses import dataclass

from .. import brackets as br
from .. import liealg as la
from .. import mvfield as mv
from .. import reality as re_
from .. import sunspace as su
from ..sunspace.families import H as H_PARAM, T as T_VAR
from ..exactalg import Poly, RationalFn, param, parse_poly, render
from .taskfile import TaskSpec, coeffs_to_poly

EPS = param("eps")


@dataclass(frozen=True)
class Outcome:
    residuals: list[tuple[str, str]]
    provenance: str
    info: dict
    unmet: tuple[str, ...] = ()


def _text(v) -> str:
    if isinstance(v, Poly):
        return render(v)
    if isinstance(v, RationalFn):
        return f"({render(v.num)}) / ({render(v.den)})"
    return str(v)


def _field_residuals(f: mv.MultivectorField) -> list[tuple[str, str]]:
    return [("^".join(f.space[i] for i in k), _text(c)) for k, c in sorted(f.coeffs.items())]


def _poly(text: str | None, default: Poly) -> Poly:
    return default if text is None else parse_poly(text)


# -- tables ----------------------------------------------------------------------------


def _family(spec: TaskSpec) -> su.SunFamily:
    kw = {}
    if spec.sigma is not None:
        kw["sigma"] = parse_poly(spec.sigma)
    if spec.h is not None:
        kw["h"] = parse_poly(spec.h)
    if spec.a is not None:
        kw["a"] = coeffs_to_poly(spec.a)
    if spec.b is not None:
        kw["b"] = coeffs_to_poly(spec.b)
    return su.family_table(spec.case or "sphere", spec.n, **kw)


def build_table(spec: TaskSpec) -> br.BracketTable:
    n, name = spec.n, spec.table
    lam = None if spec.lam is None else parse_poly(spec.lam)
    if name == "slxx":
        return br.slxx_table(n)
    if name == "xxpp-mixed1":
        return br.xxpp_mixed_table(n)
    if name == "xxpp-mixed":
        return br.xxpp_mixed_table(n, canonical=False)
    if name == "sp-wr":
        return br.sp_wr_table(n)
    if name == "borel":
        return br.triangular_cotangent_table(la.borel_r(), "Borel eps H^X+ in gl(2)")
    if name == "gl-general":
        return br.gl_general_table(n, lam=lam, strict=False)
    if name == "so-general":
        return br.so_general_table(n, lam=lam, strict=False)
    if name == "gl-quadr":
        g = la.build_algebra("gl", n)
        return br.quadratic_cotangent_table(la.standard_r(g), la.gl_w(n), "gl quadratic part")
    if name == "so-quadr":
        g = la.build_algebra("so", n)
        return br.quadratic_cotangent_table(la.standard_r(g), la.so_w(n, lam=EPS), "so quadratic part")
    if name == "su-family":
        return _family(spec).table
    if name == "so-reality":
        return re_.star_structure(n, branch=spec.branch or -1).table
    raise ValueError(f"unknown table {name!r}")


def _projection_base(spec: TaskSpec) -> br.BracketTable | None:
    """Table of r_V on the configuration space, when the construction has one."""
    kinds = {"xxpp-mixed1": "sl", "xxpp-mixed": "sl", "gl-general": "gl", "so-general": "so", "gl-quadr": "gl",
             "so-quadr": "so", "so-reality": "so"}
    if spec.table == "borel":
        g, r = la.build_algebra("gl", 2), la.borel_r()
    elif spec.table in kinds:
        g = la.build_algebra(kinds[spec.table], spec.n)
        r = la.standard_r(g)
    else:
        return None
    return br.table_from_bivector(mv.fundamental_field(r, mv.default_action(g)), "r_V")


# -- checks ----------------------------------------------------------------------------


def _criterion(spec: TaskSpec) -> Outcome:
    g = la.build_algebra(spec.algebra, spec.n)
    x = [parse_poly(c).constant_value() for c in spec.point] if spec.point else la.basis_point(g)
    res = la.perp_criterion(g, x)
    out = [(f"[{v.left},{v.right}]", str(v.outside)) for v in res.violations]
    info = {"stabilizer_dim": res.stabilizer_dim, "perp_dim": res.perp_dim,
            "violation_span_dim": res.violation_span_dim, "root_block_span_dim": res.root_block_span_dim}
    if res.witness is not None:
        info["witness"] = f"[{res.witness.left},{res.witness.right}] = {res.witness.commutator}"
    unmet = ()
    if spec.span is not None and res.violation_span_dim != spec.span:
        unmet = (f"violation span {res.violation_span_dim}, required {spec.span}",)
    return Outcome(out, g.label, info, unmet)


def _schouten_cross(spec: TaskSpec) -> Outcome:
    g = la.build_algebra(spec.algebra, spec.n)
    act = mv.default_action(g)
    r = la.standard_r(g)
    rm = mv.fundamental_field(r, act)
    d = mv.schouten_field(rm, rm) - mv.fundamental_field(la.algebraic_schouten(r, r), act)
    return Outcome(_field_residuals(d), f"{g.label} standard r", {})


def _triple_residuals(t: la.TripleTensor) -> list[tuple[str, str]]:
    return [(",".join(str(i + 1) for i in k), _text(v)) for k, v in sorted(t.coeffs.items())]


def _cybe(spec: TaskSpec) -> Outcome:
    n = spec.n
    if spec.algebra == "gl":
        w = la.standard_r(la.build_algebra("gl", n)).to_endv() if spec.variant == "r" else la.gl_w(n)
        tag = f"gl({n}) " + ("r" if spec.variant == "r" else "w = r + s")
    else:
        if spec.variant == "r":
            w = la.standard_r(la.build_algebra("so", n)).to_endv()
            tag = f"so({n}) r"
        else:
            sign = spec.branch or -1
            w = la.so_w(n, sign=sign)
            tag = f"so({n}) r {'-' if sign < 0 else '+'} i s"
    return Outcome(_triple_residuals(la.cybe_defect(w)), tag, {})


def _jacobi(spec: TaskSpec) -> Outcome:
    t = build_table(spec)
    return Outcome([(",".join(r.triple), _text(r.value)) for r in br.nonzero_residuals(t)], t.provenance, {})


def _reality(spec: TaskSpec) -> Outcome:
    S = re_.star_structure(spec.n, branch=spec.branch or -1)
    out = []
    if S.branch < 0:
        out += [(k, _text(v)) for k, v in re_.x2p2_defects(spec.n, S.table).items() if v]
        out += [(f"universal {k}", _text(v)) for k, v in re_.x2p2_defects(spec.n, re_.universal_table(spec.n)).items() if v]
    out += [(k, _text(v)) for k, v in re_.T_identities(S).items() if v]
    out += [(f"skew {k}", "nonzero") for k in re_.skew_defect(spec.n)]
    out += [(f"{{{d.pair[0]},{d.pair[1]}}}*", f"({_text(d.numerator)}) / Lambda^{d.lam_power}")
            for d in re_.all_reality_defects(S) if d]
    return Outcome(out, S.table.provenance, {})


def _involution(spec: TaskSpec) -> Outcome:
    S = re_.star_structure(spec.n, branch=spec.branch or -1)
    out = [(f"{d.pair[0]}**", f"({_text(d.numerator)}) / Lambda^{d.lam_power}") for d in re_.involution_defect(S) if d]
    return Outcome(out, S.table.provenance, {})


def _casimir(spec: TaskSpec) -> Outcome:
    fam = _family(spec)
    vals = su.sphere_casimir(fam)
    out = [(f"{{|z|^2,{g}}}", _text(v)) for g, v in zip(fam.table.generators, vals) if v]
    return Outcome(out, fam.table.provenance, {})


def _ansatz(spec: TaskSpec) -> su.DeltaAnsatz:
    if spec.case in (None, "custom"):
        if spec.a is None:
            raise ValueError("warunek needs 'a' or a named case")
        a = coeffs_to_poly(spec.a)
        return su.DeltaAnsatz(a, coeffs_to_poly(spec.b)) if spec.b is not None else su.DeltaAnsatz.solved(a)
    n = spec.n or 2
    fam = su.family_table(spec.case, n, **({"sigma": parse_poly(spec.sigma)} if spec.sigma else {}),
                          **({"h": parse_poly(spec.h)} if spec.h else {}))
    d = fam.ansatz
    if spec.case == "twisted":
        # the table carries (h/2) pi0 outside Delta; the ansatz itself is a = h/eps + sigma t
        hh = _poly(spec.h, H_PARAM)
        return su.DeltaAnsatz((d.a + hh * EPS ** -1).with_gens(("t",)), d.b)
    return d


def _warunek(spec: TaskSpec) -> Outcome:
    d = _ansatz(spec)
    res = su.warunek_residual(d)
    info = {"a": _text(d.a), "b": _text(d.b)}
    return Outcome([("a a' + b (a - a' t) - t", _text(res))] if res else [], "warunek", info)


def _minkowski(spec: TaskSpec) -> Outcome:
    p, q = spec.signature
    g = la.build_algebra("poincare", signature=(p, q))
    om = la.omega_poincare(p, q)
    f = mv.fundamental_field(om.omega, mv.default_action(g))
    return Outcome(_field_residuals(f), g.label, {"raw_summands": om.raw_summands, "ordered_summands": om.ordered_summands})


def _lorentz(spec: TaskSpec) -> Outcome:
    g = la.build_algebra("lorentz")
    w = la.TensorElement.from_terms("L3", g, [(1, ("X+", spec.element, "X-"))])
    f = mv.fundamental_field(w, mv.default_action(g))
    return Outcome(_field_residuals(f), f"(X+^{spec.element}^X-)_M", {})


def _nondegeneracy(spec: TaskSpec) -> Outcome:
    t = build_table(spec)
    pt = [parse_poly(c) for c in spec.point] if spec.point else [0] * len(t.generators)
    m = br.bracket_matrix_at(t, pt)
    info = {"det": _text(m.determinant)}
    if spec.det is not None:
        d = m.determinant - parse_poly(spec.det)
        out = [("det - expected", _text(d))] if d else []
    else:
        # zero defect means nondegenerate
        out = [] if m.determinant else [("det", "0")]
    return Outcome(out, t.provenance, info)


def _lagrangian(spec: TaskSpec) -> Outcome:
    t = build_table(spec)
    chk = br.lagrangian_section_check(t)
    out = [(f"{{{a},{b}}}|p=0", _text(v)) for (a, b), v in sorted(chk.pp_residuals.items())]
    out += [(f"{{{a},{b}}} depends on p", "") for a, b in chk.xx_p_dependence]
    proj = br.x_projection(t)
    out += [(f"projection {','.join(r.triple)}", _text(r.value)) for r in br.nonzero_residuals(proj)]
    base = _projection_base(spec)
    if base is not None and not br.projection_consistent(t, base):
        out.append(("projection", "x-block differs from r_V"))
    return Outcome(out, t.provenance, {})


def _modification(spec: TaskSpec) -> Outcome:
    g = la.build_algebra(spec.algebra, spec.n)
    m = la.symmetric_modification(la.invariant_s(g))
    d = m.lam - EPS
    return Outcome([("lambda - eps", _text(d))] if d else [], g.label, {"lambda": _text(m.lam)})


def _su_corollary(spec: TaskSpec) -> Outcome:
    out = _field_residuals(su.corollary_defect(spec.n))
    return Outcome(out, f"su({spec.n}) [r_V,r_V] + eps^2 |z|^2 Jz^pi0", {})


def _tangency(spec: TaskSpec) -> Outcome:
    """Residual when sphere tangency disagrees with a = b t."""
    d = _ansatz(spec) if spec.a is not None or spec.case not in (None, "custom") else None
    if d is None or not d.is_polynomial:
        raise ValueError("tangency needs a polynomial ansatz")
    abt = d.a == (d.b * T_VAR).with_gens(("t",))
    tangent = su.is_sphere_tangent(d, spec.n)
    info = {"a_eq_bt": abt, "tangent": tangent}
    return Outcome([] if abt == tangent else [("a = b t vs tangency", f"{abt} vs {tangent}")], "tangency", info)


CHECK_FUNCS = {
    "criterion": _criterion,
    "schouten-cross": _schouten_cross,
    "cybe": _cybe,
    "jacobi": _jacobi,
    "reality": _reality,
    "involution": _involution,
    "casimir": _casimir,
    "warunek": _warunek,
    "minkowski": _minkowski,
    "lorentz": _lorentz,
    "nondegeneracy": _nondegeneracy,
    "lagrangian-section": _lagrangian,
    "modification": _modification,
    "su-corollary": _su_corollary,
    "tangency": _tangency,
}

CHECK_HELP = {
    "criterion": "[g_x-perp, g_x-perp] inside g_x at a point (default e_n); optional exact violation span",
    "schouten-cross": "[r_M, r_M] equals the fundamental field of [r, r]",
    "cybe": "classical Yang-Baxter defect of w (gl: r + s, so: r -/+ i s; variant r: r alone)",
    "jacobi": "Jacobiator of a bracket table over the full parameter ring",
    "reality": "invariant-function identities and {f,g}* = {f*,g*} on the so(n) phase space",
    "involution": "star(star(g)) = g on generators",
    "casimir": "|z|^2 Poisson-commutes with every generator of an su(n) family",
    "warunek": "a a' + b (a - a' t) = t for an ansatz (b omitted: solved form)",
    "minkowski": "fundamental field of the Poincare trivector vanishes",
    "lorentz": "(X+ ^ H ^ X-)_M or (X+ ^ JH ^ X-)_M vanishes",
    "nondegeneracy": "bracket matrix determinant at a point (default origin)",
    "lagrangian-section": "p = 0 first class, x-block free of p, projection Poisson and equal to r_V",
    "modification": "symmetric modification returns lambda = eps",
    "su-corollary": "[r_V, r_V] + eps^2 |z|^2 Jz ^ pi0 vanishes",
    "tangency": "sphere tangency agrees with a = b t",
}


def run_check(spec: TaskSpec) -> Outcome:
    return CHECK_FUNCS[spec.check](spec)


__all__ = ["CHECK_FUNCS", "CHECK_HELP", "Outcome", "build_table", "run_check"]
