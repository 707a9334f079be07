"""Moment map images of the torus fixed points for ``L_chi (x) L_det^kappa``."""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import core
from .affweyl import AffineWeylElement, aw_enumerate
from .groupoid import LineBundleClass
from .rootsys import RootSystem


class MomentPoint(NamedTuple):
    m0: Fraction  # coefficient of delta
    m1: tuple     # weight, fundamental-weight coordinates


def moment_image(a: AffineWeylElement, L: LineBundleClass) -> MomentPoint:
    """``(-<w chi, lam> - kappa/2 |lam|^2, w chi + kappa sigma(lam))``; the base point maps to ``(0, chi)``."""
    rs = a.rs
    if len(L.chi) != rs.rank:
        raise ValueError(f"chi must have {rs.rank} entries")
    wchi = rs.weyl_act_weight(a.w, L.chi)
    m0 = -Fraction(core.dot(wchi, a.lam)) - Fraction(L.kappa, 2) * rs.norm2(a.lam)
    m1 = core.vadd(wchi, core.vscale(L.kappa, rs.sigma(a.lam)))
    return MomentPoint(m0, tuple(Fraction(x) for x in m1))


def paraboloid_residual(rs: RootSystem, m: MomentPoint, L: LineBundleClass) -> Fraction:
    """``m0 + (|m1|^2 - |chi|^2) / (2 kappa)``; zero exactly on the paraboloid."""
    if L.kappa == 0:
        raise ZeroDivisionError("the paraboloid degenerates at level kappa = 0")
    return m.m0 + (rs.weight_norm2(m.m1) - rs.weight_norm2(L.chi)) / (2 * L.kappa)


def moment_cloud(rs: RootSystem, L: LineBundleClass, maxlen: int):
    """``[(a, moment_image(a, L))]`` over all ``a`` of length at most ``maxlen``, in enumeration order."""
    return [(a, moment_image(a, L)) for a, _ in aw_enumerate(rs, maxlen)]
