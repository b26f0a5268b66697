"""Named constant and Euler-type fields on T*V and on C^n."""

from __future__ import annotations

from ..exactalg import GaussQ, Poly, coords
from .fields import MultivectorField


def cotangent_space(n: int) -> tuple[str, ...]:
    return tuple(f"x{j}" for j in range(1, n + 1)) + tuple(f"p{j}" for j in range(1, n + 1))


def complex_space(n: int) -> tuple[str, ...]:
    return tuple(f"z{j}" for j in range(1, n + 1)) + tuple(f"zb{j}" for j in range(1, n + 1))


def pi0_cotangent(n: int) -> MultivectorField:
    """Canonical bivector on T*V, oriented so that {x^j, p_k} = -delta."""
    space = cotangent_space(n)
    return MultivectorField.from_terms(space, 2, [(-1, (f"x{j}", f"p{j}")) for j in range(1, n + 1)])


def pi0_complex(n: int) -> MultivectorField:
    """Constant bivector 2i sum d_k ∧ d_kbar on C^n."""
    space = complex_space(n)
    return MultivectorField.from_terms(space, 2, [(GaussQ(0, 2), (f"z{j}", f"zb{j}")) for j in range(1, n + 1)])


def complex_euler(n: int) -> MultivectorField:
    """z = sum (z^k d_k + zb^k d_kbar)."""
    space = complex_space(n)
    x = coords(*space)
    return MultivectorField.vector(space, {name: x[i] for i, name in enumerate(space)})


def complex_rotation(n: int) -> MultivectorField:
    """Jz = sum (i z^k d_k - i zb^k d_kbar)."""
    space = complex_space(n)
    x = coords(*space)
    i = GaussQ(0, 1)
    comps = {}
    for k in range(n):
        comps[space[k]] = x[k].scale(i)
        comps[space[n + k]] = x[n + k].scale(-i)
    return MultivectorField.vector(space, comps)


def norm_squared(n: int) -> Poly:
    """||z||^2 = sum z^k zb^k on the complex space."""
    space = complex_space(n)
    x = coords(*space)
    acc = Poly.zero(space)
    for k in range(n):
        acc = acc + x[k] * x[n + k]
    return acc


def realify_bivector_n1(p: MultivectorField) -> GaussQ:
    """Coefficient of d_x ∧ d_y for a constant bivector on C with z = x + iy.

    d_z ∧ d_zbar = (i/2) d_x ∧ d_y, so pi0_complex(1) realifies to -1.
    """
    if p.space != complex_space(1) or p.degree != 2:
        raise ValueError("expects a constant bivector on (z1, zb1)")
    c = p.component((0, 1))
    if not c.is_constant:
        raise ValueError("bivector is not constant")
    return c.constant_value() * GaussQ(0, "1/2")
