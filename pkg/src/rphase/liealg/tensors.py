"""Tensor elements over a Lie algebra and the algebraic Schouten bracket."""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass

from ..exactalg import GaussQ, Poly
from .algebras import LieAlgebraSpec

SPACES = ("L2", "L3", "gg", "EE")


class AlgebraMismatch(ValueError):
    pass


def _scalar(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


def _sort_sign(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation (0 when an index repeats)."""
    if len(set(idx)) != len(idx):
        return 0, idx
    sign = 1
    arr = list(idx)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def _accumulate(out: dict, key, value: Poly) -> None:
    prev = out.get(key)
    v = value if prev is None else prev + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@dataclass(frozen=True, eq=False)
class TensorElement:
    """Coefficient table over basis index tuples.

    Spaces: ``L2``/``L3`` (wedge powers, keys strictly increasing), ``gg``
    (g (x) g, ordered keys), ``EE`` (End V (x) End V, key (j, k, l, m) holding
    rho^{jk}_{lm}, the coefficient of e_j^l (x) e_k^m).  ``algebra`` is None
    for ``EE`` elements, which carry ``size`` instead.
    """

    space: str
    algebra: LieAlgebraSpec | None
    coeffs: dict
    size: int = 0

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValueError(f"unknown tensor space {self.space!r}")

    # -- construction -----------------------------------------------------------

    @classmethod
    def from_terms(cls, space: str, algebra: LieAlgebraSpec | None, terms: Iterable, size: int = 0) -> "TensorElement":
        """Build from (coefficient, index tuple) pairs; wedge keys are sorted."""
        out: dict = {}
        for c, idx in terms:
            idx = tuple(algebra.index(i) if isinstance(i, str) else i for i in idx)
            c = _scalar(c)
            if space in ("L2", "L3"):
                sign, idx = _sort_sign(idx)
                if not sign:
                    continue
                if sign < 0:
                    c = -c
            _accumulate(out, idx, c)
        return cls(space, algebra, out, size or (algebra.size if algebra else 0))

    @classmethod
    def zero(cls, space: str, algebra: LieAlgebraSpec | None, size: int = 0) -> "TensorElement":
        return cls(space, algebra, {}, size or (algebra.size if algebra else 0))

    # -- linear structure ---------------------------------------------------------

    def _check(self, other: "TensorElement") -> None:
        if self.space != other.space:
            raise AlgebraMismatch(f"cannot combine {self.space} with {other.space}")
        if self.algebra is not other.algebra and (self.algebra is None or other.algebra is None or self.algebra.label != other.algebra.label):
            raise AlgebraMismatch("tensors live over different algebras")
        if self.space == "EE" and self.size != other.size:
            raise AlgebraMismatch("End V factors have different sizes")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _accumulate(out, k, v)
        return TensorElement(self.space, self.algebra, out, self.size)

    def __neg__(self) -> "TensorElement":
        return self.scale(-1)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = _scalar(c)
        out = {}
        for k, v in self.coeffs.items():
            w = v * c
            if w:
                out[k] = w
        return TensorElement(self.space, self.algebra, out, self.size)

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        try:
            return (self - other).is_zero()
        except AlgebraMismatch:
            return False

    __hash__ = None

    def subs(self, mapping) -> "TensorElement":
        out = {}
        for k, v in self.coeffs.items():
            w = v.subs(mapping)
            if w:
                out[k] = w
        return TensorElement(self.space, self.algebra, out, self.size)

    # -- g (x) g parts --------------------------------------------------------------

    def transpose(self) -> "TensorElement":
        if self.space == "gg":
            return TensorElement("gg", self.algebra, {(b, a): v for (a, b), v in self.coeffs.items()}, self.size)
        if self.space == "EE":
            return TensorElement("EE", None, {(k, j, m, l): v for (j, k, l, m), v in self.coeffs.items()}, self.size)
        raise ValueError("transpose is defined on gg and EE")

    def symmetric_part(self) -> "TensorElement":
        return (self + self.transpose()).scale(GaussQ("1/2"))

    def antisymmetric_part(self) -> "TensorElement":
        return (self - self.transpose()).scale(GaussQ("1/2"))

    def to_gg(self) -> "TensorElement":
        """Expand a wedge of degree two as a - b (x) a (no 1/2 factor)."""
        if self.space == "gg":
            return self
        if self.space != "L2":
            raise ValueError("only L2 elements embed in g (x) g")
        out: dict = {}
        for (a, b), v in self.coeffs.items():
            _accumulate(out, (a, b), v)
            _accumulate(out, (b, a), -v)
        return TensorElement("gg", self.algebra, out, self.size)

    def to_endv(self) -> "TensorElement":
        """Image in End V (x) End V through the defining matrices."""
        if self.space == "EE":
            return self
        gg = self.to_gg()
        mats = gg.algebra.matrices
        out: dict = {}
        for (a, b), v in gg.coeffs.items():
            for (j, l), x in mats[a].items():
                for (k, m), y in mats[b].items():
                    _accumulate(out, (j, k, l, m), v.scale(x * y))
        return TensorElement("EE", None, out, gg.algebra.size)

    # -- adjoint action --------------------------------------------------------------

    def ad(self, x: int) -> "TensorElement":
        """Action of the basis element x extended as a derivation."""
        if self.space == "EE":
            raise ValueError("use the algebra-level tensor for the adjoint action")
        g = self.algebra
        terms = []
        for idx, v in self.coeffs.items():
            for slot, a in enumerate(idx):
                for c, f in g.bracket(x, a).items():
                    new = idx[:slot] + (c,) + idx[slot + 1:]
                    terms.append((v.scale(f), new))
        return TensorElement.from_terms(self.space, g, terms, self.size)

    def ad_invariance_defect(self) -> dict[str, "TensorElement"]:
        out = {}
        for x, name in enumerate(self.algebra.names):
            d = self.ad(x)
            if not d.is_zero():
                out[name] = d
        return out

    # -- output -----------------------------------------------------------------------

    def _key_label(self, k: tuple[int, ...]) -> str:
        if self.space == "EE":
            j, kk, l, m = k
            return f"e{j + 1}^{l + 1}(x)e{kk + 1}^{m + 1}"
        names = self.algebra.names
        sep = "^" if self.space in ("L2", "L3") else "(x)"
        return sep.join(f"[{names[i]}]" for i in k) if sep != "^" else "∧".join(names[i] for i in k)

    def render(self) -> list[tuple[str, str]]:
        return [(self._key_label(k), str(self.coeffs[k])) for k in sorted(self.coeffs)]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{k}" for k, c in self.render())

    def to_json(self) -> str:
        data = {
            "space": self.space,
            "algebra": self.algebra.label if self.algebra else None,
            "size": self.size,
            "coeffs": [{"key": list(k), "label": lbl, "value": val} for k, (lbl, val) in zip(sorted(self.coeffs), self.render())],
        }
        return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def vector_wedge3(g: LieAlgebraSpec, a: dict[int, Poly], b: dict[int, Poly], c: dict[int, Poly]) -> TensorElement:
    """a ∧ b ∧ c for algebra vectors given as {basis index: coefficient}."""
    terms = []
    for i, x in a.items():
        for j, y in b.items():
            for k, z in c.items():
                terms.append((x * y * z, (i, j, k)))
    return TensorElement.from_terms("L3", g, terms)


def algebraic_schouten(u: TensorElement, v: TensorElement) -> TensorElement:
    """[u, v] on wedge-squares.

    [a∧b, c∧d] = [c,a]∧b∧d + [d,a]∧b∧c + [c,b]∧a∧d + [b,d]∧c∧a, i.e. the
    negative of the common four-term expansion; this matches the field
    bracket so that [r_M, r_M] = [r, r]_M.
    """
    if u.space != "L2" or v.space != "L2":
        raise ValueError("algebraic_schouten takes two L2 elements")
    if u.algebra is not v.algebra and u.algebra.label != v.algebra.label:
        raise AlgebraMismatch("elements over different algebras")
    g = u.algebra
    terms = []
    for (a, b), cu in u.coeffs.items():
        for (c, d), cv in v.coeffs.items():
            k = cu * cv
            for (x, y), (p, q), sign in (((a, c), (b, d), 1), ((a, d), (b, c), -1), ((b, c), (a, d), -1), ((b, d), (a, c), 1)):
                for e, f in g.bracket(x, y).items():
                    terms.append((k.scale(-f * sign), (e, p, q)))
    return TensorElement.from_terms("L3", g, terms)
