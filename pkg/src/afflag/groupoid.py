"""Equivariant cohomology of the affine flag variety as a groupoid over ``A^1 x t``.

A point ``(u, xi, eta, v_1..v_r)`` lies on the variety when
``f_i(xi) - f_i(eta) = u v_i`` for every fundamental invariant ``f_i``. Source
and target are ``(u, xi)`` and ``(u, eta)``; composition adds the ``v``'s.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import core
from .affweyl import AffineWeylElement
from .arrangement import H2TPoint
from .rootsys import RootSystem


class InvalidPoint(ValueError):
    """A tuple that violates the defining relations, or a non-composable pair."""


class GroupoidPoint(NamedTuple):
    u: Fraction
    xi: tuple
    eta: tuple
    vlist: tuple


class LineBundleClass(NamedTuple):
    """``L_chi (x) L_det^kappa``; ``chi`` in fundamental-weight coordinates."""
    chi: tuple
    kappa: int


class CurveClass(NamedTuple):
    """``sum c_i [C_i]``, ``i = 0..r``, with ``[C_i]`` the class of the coroot ``alpha_i^vee``."""
    coeffs: tuple


def _point(u, xi, eta, vlist) -> GroupoidPoint:
    return GroupoidPoint(core.rat(u), tuple(core.rat(x) for x in xi),
                         tuple(core.rat(x) for x in eta), tuple(core.rat(x) for x in vlist))


def relations(rs: RootSystem, p: GroupoidPoint) -> tuple:
    """``f_i(xi) - f_i(eta) - u v_i`` for each ``i``; all zero on the variety."""
    rs.require_full_invariants()
    if len(p.vlist) != rs.rank:
        raise ValueError(f"expected {rs.rank} v-coordinates, got {len(p.vlist)}")
    fx, fe = rs.chevalley_map(p.xi), rs.chevalley_map(p.eta)
    return tuple(a - b - p.u * v for a, b, v in zip(fx, fe, p.vlist))


def gp_check(rs: RootSystem, p: GroupoidPoint) -> bool:
    return not any(relations(rs, p))


def _require(rs, p):
    if not gp_check(rs, p):
        raise InvalidPoint(f"not a point of the variety: {p}")


def identity_section(rs: RootSystem, u, xi) -> GroupoidPoint:
    return _point(u, xi, xi, core.zeros(rs.rank))


def gp_compose(rs: RootSystem, p: GroupoidPoint, q: GroupoidPoint) -> GroupoidPoint:
    """``p`` followed by ``q``: needs the target of ``p`` to be the source of ``q``."""
    _require(rs, p)
    _require(rs, q)
    if p.u != q.u or tuple(p.eta) != tuple(q.xi):
        raise InvalidPoint("points are not composable")
    return _point(p.u, p.xi, q.eta, core.vadd(p.vlist, q.vlist))


def gp_invert(rs: RootSystem, p: GroupoidPoint) -> GroupoidPoint:
    _require(rs, p)
    return _point(p.u, p.eta, p.xi, core.vneg(p.vlist))


def gp_tau(rs: RootSystem, p: GroupoidPoint) -> GroupoidPoint:
    """``(u, -eta, -xi, (-1)^{d_i} v_i)``."""
    _require(rs, p)
    v = tuple(x if d % 2 == 0 else -x for x, d in zip(p.vlist, rs.exponents))
    return _point(p.u, core.vneg(p.eta), core.vneg(p.xi), v)


def _shift(rs: RootSystem, a: AffineWeylElement, u, x):
    """``(w x + u lam, [(f_i(w x + u lam) - f_i(x)) / u])`` with the ``u = 0`` limit."""
    wx = core.matvec(a.w, x)
    moved = core.vadd(wx, core.vscale(u, a.lam))
    deltas = tuple(core.difference_quotient_u(f, wx, a.lam, u) for f in rs.invariants)
    return moved, deltas


def gp_rho1(rs: RootSystem, a: AffineWeylElement, p: GroupoidPoint) -> GroupoidPoint:
    """Left action: moves the source ``(u, xi)``."""
    _require(rs, p)
    xi, d = _shift(rs, a, p.u, p.xi)
    return _point(p.u, xi, p.eta, core.vadd(p.vlist, d))


def gp_rho2(rs: RootSystem, a: AffineWeylElement, p: GroupoidPoint) -> GroupoidPoint:
    """Right action ``iota rho1 iota``: moves the target ``(u, eta)``."""
    _require(rs, p)
    eta, d = _shift(rs, a, p.u, p.eta)
    return _point(p.u, p.xi, eta, core.vsub(p.vlist, d))


DEFAULT_PI_CONSTANT = Fraction(1, 2)


def gp_project_quadric(rs: RootSystem, p: GroupoidPoint, c=DEFAULT_PI_CONSTANT) -> H2TPoint:
    """``(u, xi, eta, c v_1)``; lands on the quadric cone exactly when ``c = 1/2``."""
    _require(rs, p)
    return H2TPoint(p.u, p.xi, p.eta, core.rat(c) * p.vlist[0])


def degree_pairing(rs: RootSystem, L: LineBundleClass, C: CurveClass) -> int:
    """Degree of ``L`` on ``C``: pair ``chi + kappa Lambda_0`` with ``sum c_i alpha_i^vee``.

    ``alpha_0^vee = K - theta^vee``, so ``[C_0]`` picks up ``kappa - <chi, theta^vee>``.
    """
    if len(L.chi) != rs.rank or len(C.coeffs) != rs.rank + 1:
        raise ValueError("dimension mismatch")
    c0, rest = C.coeffs[0], C.coeffs[1:]
    total = core.dot(rest, L.chi) + c0 * (L.kappa - core.dot(L.chi, rs.highest_root_coroot))
    return int(total)


def curve_class_from_lattice(rs: RootSystem, lam, k: int) -> CurveClass:
    """Class of the coweight ``lam + k K`` in the basis ``[C_0], ..., [C_r]``."""
    c0 = int(k)
    return CurveClass((c0,) + tuple(int(x) + c0 * t for x, t in zip(lam, rs.highest_root_coroot)))


SPECIALIZATIONS = ("t-equivariant", "ordinary")


def specialize(rs: RootSystem, p: GroupoidPoint, mode: str) -> GroupoidPoint:
    """Check that ``p`` lies over ``u = 0`` (and also ``xi = 0`` in ordinary mode)."""
    if mode not in SPECIALIZATIONS:
        raise ValueError(f"unknown mode {mode!r}; expected one of {SPECIALIZATIONS}")
    _require(rs, p)
    if p.u != 0:
        raise InvalidPoint("specialization needs u = 0")
    if mode == "ordinary" and any(p.xi):
        raise InvalidPoint("ordinary specialization needs xi = 0")
    return p


# -- random points --------------------------------------------------------------

def random_rat(rng, bound: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_vector(rng, n: int, bound: int = 9, den: int = 4):
    return tuple(random_rat(rng, bound, den) for _ in range(n))


def random_weyl(rs: RootSystem, rng, maxword: int = 8):
    w = core.identity(rs.rank)
    for _ in range(rng.randint(0, maxword)):
        w = core.matmul(w, rs.simple_reflection(rng.randint(1, rs.rank)))
    return w


def random_arrow(rs: RootSystem, rng, u, xi) -> GroupoidPoint:
    """A random point with source ``(u, xi)``.

    For ``u != 0`` the target is arbitrary and ``v`` is forced; over ``u = 0`` the
    target is a Weyl conjugate of ``xi`` and ``v`` is arbitrary.
    """
    u = core.rat(u)
    if u != 0:
        eta = random_vector(rng, rs.rank)
        fx, fe = rs.chevalley_map(xi), rs.chevalley_map(eta)
        return _point(u, xi, eta, tuple((a - b) / u for a, b in zip(fx, fe)))
    eta = core.matvec(random_weyl(rs, rng), xi)
    return _point(u, xi, eta, random_vector(rng, rs.rank))


def random_source(rs: RootSystem, rng, zero_u_rate: float = 0.25):
    u = Fraction(0) if rng.random() < zero_u_rate else random_rat(rng)
    return u, random_vector(rng, rs.rank)


def random_point(rs: RootSystem, rng, zero_u_rate: float = 0.25) -> GroupoidPoint:
    u, xi = random_source(rs, rng, zero_u_rate)
    return random_arrow(rs, rng, u, xi)


def random_composable(rs: RootSystem, rng, count: int, zero_u_rate: float = 0.25):
    """``count`` points ``p_1, p_2, ...`` with the target of each the source of the next."""
    u, xi = random_source(rs, rng, zero_u_rate)
    out = []
    for _ in range(count):
        p = random_arrow(rs, rng, u, xi)
        out.append(p)
        xi = p.eta
    return out
