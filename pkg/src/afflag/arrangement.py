"""Fixed point arrangement of the affine flag variety in ``H_2`` and its quadric cone.

Points of ``H_2 = C d + t + t + C K`` are :class:`H2TPoint` ``(u, xi, eta, v)``.
The section of the fixed point ``a . x0`` sends ``(u, xi)`` to
``(u, xi, w^-1(xi - u lam), (xi|lam) - u/2 |lam|^2)`` and every such point
satisfies ``|xi|^2 - |eta|^2 - 2uv = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import core
from .affweyl import AffineWeylElement, CartanPoint, act_h, aw_inverse, basis_h
from .rootsys import RootSystem


class H2TPoint(NamedTuple):
    u: Fraction
    xi: tuple
    eta: tuple
    v: Fraction

    def flatten(self):
        return ((Fraction(self.u),) + tuple(Fraction(x) for x in self.xi)
                + tuple(Fraction(x) for x in self.eta) + (Fraction(self.v),))

    @classmethod
    def unflatten(cls, vec, r: int):
        vec = tuple(vec)
        return cls(vec[0], vec[1:1 + r], vec[1 + r:1 + 2 * r], vec[1 + 2 * r])


def h2_add(p: H2TPoint, q: H2TPoint) -> H2TPoint:
    return H2TPoint(p.u + q.u, core.vadd(p.xi, q.xi), core.vadd(p.eta, q.eta), p.v + q.v)


def h2_scale(c, p: H2TPoint) -> H2TPoint:
    return H2TPoint(c * p.u, core.vscale(c, p.xi), core.vscale(c, p.eta), c * p.v)


@dataclass(frozen=True, eq=False)
class ArrangementSubspace:
    """A linear subspace of ``H_2`` given by a spanning list; equality is equality of spans."""

    basis: tuple
    rank: int

    @classmethod
    def span(cls, points, rank: int):
        rows = core.rref(p.flatten() for p in points)
        return cls(tuple(H2TPoint.unflatten(row, rank) for row in rows), rank)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def canonical(self):
        return core.rref(p.flatten() for p in self.basis)

    def __eq__(self, other):
        if not isinstance(other, ArrangementSubspace):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def contains(self, p: H2TPoint) -> bool:
        return core.rank([q.flatten() for q in self.basis] + [p.flatten()]) == self.dim


def mu_section(a: AffineWeylElement, u, xi) -> H2TPoint:
    rs = a.rs
    u = Fraction(u)
    shifted = core.vsub(xi, core.vscale(u, a.lam))
    eta = core.matvec(a.w_inverse, shifted)
    v = rs.killing(xi, a.lam) - u / 2 * rs.norm2(a.lam)
    return H2TPoint(u, tuple(xi), eta, v)


def quadric_eval(rs: RootSystem, p: H2TPoint) -> Fraction:
    return rs.norm2(p.xi) - rs.norm2(p.eta) - 2 * p.u * p.v


def quadric_polar(rs: RootSystem, p: H2TPoint, q: H2TPoint) -> Fraction:
    """Symmetric bilinear form with ``quadric_polar(p, p) == quadric_eval(p)``."""
    return rs.killing(p.xi, q.xi) - rs.killing(p.eta, q.eta) - p.u * q.v - q.u * p.v


def cone_chart_v(rs: RootSystem, u, xi, eta) -> Fraction:
    """The unique ``v`` putting ``(u, xi, eta, v)`` on the cone, for ``u != 0``."""
    u = Fraction(u)
    if u == 0:
        raise ZeroDivisionError("the projection to (u, xi, eta) is birational only over u != 0")
    return (rs.norm2(xi) - rs.norm2(eta)) / (2 * u)


def four_term_action(a: AffineWeylElement, p: H2TPoint) -> H2TPoint:
    rs = a.rs
    u = Fraction(p.u)
    wxi = core.matvec(a.w, p.xi)
    xi = core.vadd(wxi, core.vscale(u, a.lam))
    v = p.v + rs.killing(wxi, a.lam) + u / 2 * rs.norm2(a.lam)
    return H2TPoint(u, xi, tuple(p.eta), v)


def cocycle_B(a: AffineWeylElement, u, xi) -> Fraction:
    """K-coefficient of the correction term of the action: ``(w xi|lam) + u/2 |lam|^2``."""
    rs = a.rs
    return rs.killing(core.matvec(a.w, xi), a.lam) + Fraction(u) / 2 * rs.norm2(a.lam)


def cocycle_A(a: AffineWeylElement, u, xi) -> CartanPoint:
    """``mu_{a.x0}(u, xi) - mu_{x0}(u, xi)`` as an element ``(0, eta - xi, v)`` of ``t + C K``."""
    p = mu_section(a, u, xi)
    return CartanPoint(Fraction(0), core.vsub(p.eta, xi), p.v)


def component_sign(a: AffineWeylElement) -> int:
    """+1 if ``V_{a.x0}`` lies in the component of ``V_{x0}``, else -1."""
    return int(core.det(a.w))


def identity_subspace(rs: RootSystem) -> ArrangementSubspace:
    return arrangement_subspace(AffineWeylElement.identity(rs))


def arrangement_subspace(a: AffineWeylElement) -> ArrangementSubspace:
    """``V_{a.x0}``: the span of ``mu_section(a, -)`` over a basis of ``C d + t``."""
    rs = a.rs
    n = rs.rank
    pts = [mu_section(a, 1, core.zeros(n))]
    pts += [mu_section(a, 0, core.unit(n, j)) for j in range(n)]
    return ArrangementSubspace.span(pts, n)


def graph_subspace(a: AffineWeylElement) -> ArrangementSubspace:
    """Image in ``(K,K)^perp / C(K,K)`` of the graph of ``a^-1`` acting on ``h``.

    A pair ``(x, y)`` with equal d-coordinates ``u`` is sent to
    ``u(d,d) + (xi_x, 0) + (0, xi_y) + (v_y - v_x)(0, K)``.
    """
    rs = a.rs
    ainv = aw_inverse(a)
    pts = []
    for x in basis_h(rs):
        y = act_h(ainv, x)
        if y.u != x.u:
            raise AssertionError("graph leaves (K,K)^perp")
        pts.append(H2TPoint(x.u, x.xi, y.xi, y.v - x.v))
    return ArrangementSubspace.span(pts, rs.rank)


def rig_action(rs: RootSystem, lam, s, p: H2TPoint, as_printed: bool = False) -> H2TPoint:
    """Action of the rigid motion ``x -> s x + lam`` of ``t`` on ``H_2``.

    The K-coordinate picks up ``(s xi|lam) + u/2 |lam|^2``, which restricts to
    :func:`four_term_action` on the affine Weyl group, preserves the quadric and
    composes as a group action. ``as_printed=True`` uses ``(s eta|lam)`` instead;
    that variant agrees on ``V_{x0}`` but does neither of the other two.
    """
    if not rs.is_orthogonal(s):
        raise ValueError("linear part is not orthogonal for the Killing form")
    u = Fraction(p.u)
    sxi = core.matvec(s, p.xi)
    xi = core.vadd(sxi, core.vscale(u, lam))
    k = rs.killing(core.matvec(s, p.eta) if as_printed else sxi, lam)
    return H2TPoint(u, xi, tuple(p.eta), p.v + k + u / 2 * rs.norm2(lam))


def rig_subspace(rs: RootSystem, lam, s, sub: ArrangementSubspace,
                 as_printed: bool = False) -> ArrangementSubspace:
    return ArrangementSubspace.span(
        [rig_action(rs, lam, s, p, as_printed) for p in sub.basis], rs.rank)


def recognize_rigid(rs: RootSystem, sub: ArrangementSubspace):
    """Find ``(lam, s)`` with ``(lam, s) . V_{x0} = sub``, or None if ``sub`` is outside that orbit.

    ``sub`` must be transversal to ``t_xi + C K``, i.e. the graph of a linear
    map ``(u, eta) -> (xi, v)``; it then lies in the orbit exactly when that map
    has the form ``(s eta + u lam, (s eta|lam) + u/2 |lam|^2)`` with ``s``
    orthogonal.
    """
    r = rs.rank
    if sub.dim != r + 1:
        return None
    src = [(p.u,) + tuple(p.eta) for p in sub.basis]
    dst = [tuple(p.xi) + (p.v,) for p in sub.basis]
    if core.rank(src) != r + 1:
        return None
    # rows: basis vector (u, eta) -> image (xi, v)
    m = core.matmul(core.inverse(src), dst)
    lam = m[0][:r]
    s = core.transpose([row[:r] for row in m[1:]])
    if not rs.is_orthogonal(s):
        return None
    if m[0][r] != rs.norm2(lam) / 2:
        return None
    for j in range(r):
        if m[1 + j][r] != rs.killing(core.matvec(s, core.unit(r, j)), lam):
            return None
    return tuple(lam), s
