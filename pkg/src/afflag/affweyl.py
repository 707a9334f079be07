"""The affine Weyl group ``X_*(T) x| W`` and its actions on the affine Cartan algebra.

An element is a pair ``(lam, w)``: a coroot-lattice translation and a finite
Weyl group matrix acting on ``t`` in the coroot basis. Points of
``h = C d + t + C K`` are :class:`CartanPoint` ``(u, xi, v)`` and points of
``h* = C delta + t* + C Lambda_0`` are :class:`CocartanPoint` ``(n, chi, m)``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from . import core
from .rootsys import RootSystem, weyl_inverse


class CartanPoint(NamedTuple):
    u: Fraction
    xi: tuple
    v: Fraction


class CocartanPoint(NamedTuple):
    n: Fraction
    chi: tuple
    m: Fraction


def pair(q: CocartanPoint, p: CartanPoint) -> Fraction:
    """The natural pairing: ``<delta, d> = <Lambda_0, K> = 1``, others as on ``t``."""
    return Fraction(q.n * p.u + core.dot(q.chi, p.xi) + q.m * p.v)


def extended_killing(rs: RootSystem, p: CartanPoint, p2: CartanPoint | None = None) -> Fraction:
    """Killing form on ``h`` with ``(K|d) = 1`` and ``d, K`` orthogonal to ``t``."""
    p2 = p if p2 is None else p2
    return rs.killing(p.xi, p2.xi) + p.u * p2.v + p.v * p2.u


@dataclass(frozen=True)
class AffineWeylElement:
    rs: RootSystem = field(compare=False, repr=False)
    lam: tuple
    w: tuple

    def __mul__(self, other):
        return aw_mul(self, other)

    def inverse(self):
        return aw_inverse(self)

    @property
    def w_inverse(self):
        return weyl_inverse(self.w)

    @classmethod
    def identity(cls, rs: RootSystem):
        return cls(rs, core.zeros(rs.rank), core.identity(rs.rank))

    @classmethod
    def translation(cls, rs: RootSystem, lam):
        return cls(rs, tuple(int(x) for x in lam), core.identity(rs.rank))

    @classmethod
    def from_word(cls, rs: RootSystem, word):
        """Product ``s_{i_1} s_{i_2} ...`` of affine simple reflections."""
        a = cls.identity(rs)
        for i in word:
            a = a * simple_reflection_affine(rs, i)
        return a

    def sort_key(self):
        return (self.lam, self.w)


def _check_same(a: AffineWeylElement, b: AffineWeylElement):
    if a.rs is not b.rs:
        raise ValueError(f"root system mismatch: {a.rs.name} vs {b.rs.name}")


def aw_mul(a: AffineWeylElement, b: AffineWeylElement) -> AffineWeylElement:
    _check_same(a, b)
    lam = core.vadd(a.lam, core.matvec(a.w, b.lam))
    return AffineWeylElement(a.rs, lam, core.matmul(a.w, b.w))


def aw_inverse(a: AffineWeylElement) -> AffineWeylElement:
    winv = a.w_inverse
    return AffineWeylElement(a.rs, core.vneg(core.matvec(winv, a.lam)), winv)


def simple_reflection_affine(rs: RootSystem, i: int) -> AffineWeylElement:
    """``s_i`` for ``i >= 1`` is ``(0, s_i)``; ``s_0`` is ``(theta_check, s_theta)``."""
    if i == 0:
        return AffineWeylElement(rs, rs.highest_root_coroot, rs.highest_reflection)
    if not 1 <= i <= rs.rank:
        raise IndexError(f"affine simple reflection index {i} out of range 0..{rs.rank}")
    return AffineWeylElement(rs, core.zeros(rs.rank), rs.simple_reflection(i))


def act_h(a: AffineWeylElement, p: CartanPoint) -> CartanPoint:
    """``(u, w xi + u lam, v - (w xi|lam) - u/2 |lam|^2)``."""
    rs = a.rs
    u = Fraction(p.u)
    wxi = core.matvec(a.w, p.xi)
    xi = core.vadd(wxi, core.vscale(u, a.lam))
    v = p.v - rs.killing(wxi, a.lam) - u / 2 * rs.norm2(a.lam)
    return CartanPoint(u, xi, v)


def act_t_tilde(a: AffineWeylElement, u, xi):
    """The induced action on ``h / C K``: ``(u, xi) -> (u, w xi + u lam)``."""
    return u, core.vadd(core.matvec(a.w, xi), core.vscale(u, a.lam))


def act_h_dual(a: AffineWeylElement, q: CocartanPoint) -> CocartanPoint:
    """Contragredient action, so that ``pair(act_h_dual(a, q), act_h(a, p)) == pair(q, p)``.

    Explicitly ``(n - <w chi, lam> - m/2 |lam|^2, w chi + m sigma(lam), m)``.
    """
    rs = a.rs
    wchi = rs.weyl_act_weight(a.w, q.chi)
    n = q.n - core.dot(wchi, a.lam) - Fraction(q.m) / 2 * rs.norm2(a.lam)
    chi = core.vadd(wchi, core.vscale(q.m, rs.sigma(a.lam)))
    return CocartanPoint(Fraction(n), chi, q.m)


def affine_simple_root(rs: RootSystem, i: int) -> CocartanPoint:
    """``alpha_0 = delta - theta`` and ``alpha_i`` for ``i >= 1``."""
    if i == 0:
        return CocartanPoint(Fraction(1), core.vneg(rs.highest_root), Fraction(0))
    return CocartanPoint(Fraction(0), rs.simple_root(i), Fraction(0))


def affine_simple_coroot(rs: RootSystem, i: int) -> CartanPoint:
    """``K - theta_check`` and ``coroot_i`` for ``i >= 1``."""
    if i == 0:
        return CartanPoint(Fraction(0), core.vneg(rs.highest_root_coroot), Fraction(1))
    return CartanPoint(Fraction(0), core.unit(rs.rank, i - 1), Fraction(0))


def is_positive_real_root(rs: RootSystem, q: CocartanPoint) -> bool:
    """Sign of a real affine root ``n delta + beta``; ``m`` must vanish."""
    if q.m != 0:
        raise ValueError("not a real root: Lambda_0 coefficient is nonzero")
    if q.n != 0:
        return q.n > 0
    h = rs.height(q.chi)
    if h == 0:
        raise ValueError("not a real root")
    return h > 0


def _left_descent(a: AffineWeylElement):
    """Some ``i`` with ``l(s_i a) < l(a)``, i.e. ``a^-1(alpha_i) < 0``; None for the identity."""
    rs = a.rs
    ainv = aw_inverse(a)
    for i in range(rs.rank + 1):
        if not is_positive_real_root(rs, act_h_dual(ainv, affine_simple_root(rs, i))):
            return i
    return None


def reduced_word(a: AffineWeylElement) -> list[int]:
    """A reduced word for ``a`` found by peeling off left descents."""
    rs = a.rs
    word = []
    while (i := _left_descent(a)) is not None:
        word.append(i)
        a = simple_reflection_affine(rs, i) * a
    if a != AffineWeylElement.identity(rs):
        raise AssertionError("descent did not terminate at the identity")
    return word


def aw_length(a: AffineWeylElement) -> int:
    return len(reduced_word(a))


def _right_ascent(a: AffineWeylElement, i: int) -> bool:
    """``l(a s_i) = l(a) + 1`` iff ``a(alpha_i) > 0``."""
    return is_positive_real_root(a.rs, act_h_dual(a, affine_simple_root(a.rs, i)))


def aw_enumerate(rs: RootSystem, maxlen: int) -> list[tuple[AffineWeylElement, int]]:
    """Every element of length at most ``maxlen`` once, ordered by (length, lam, w)."""
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative")
    layer = [AffineWeylElement.identity(rs)]
    out = [(layer[0], 0)]
    gens = [simple_reflection_affine(rs, i) for i in range(rs.rank + 1)]
    for length in range(1, maxlen + 1):
        nxt = {a * gens[i] for a in layer for i in range(rs.rank + 1) if _right_ascent(a, i)}
        layer = sorted(nxt, key=AffineWeylElement.sort_key)
        out.extend((a, length) for a in layer)
    return out


def bfs_lengths(rs: RootSystem, maxlen: int) -> dict:
    """Word length over the Cayley graph by breadth-first search; a test oracle."""
    start = AffineWeylElement.identity(rs)
    gens = [simple_reflection_affine(rs, i) for i in range(rs.rank + 1)]
    dist = {start: 0}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        if dist[a] == maxlen:
            continue
        for g in gens:
            b = a * g
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    return dist


def random_element(rs: RootSystem, rng, maxword: int = 8) -> AffineWeylElement:
    """Product of a random word of affine simple reflections of length at most ``maxword``."""
    k = rng.randint(0, maxword)
    return AffineWeylElement.from_word(rs, [rng.randint(0, rs.rank) for _ in range(k)])


def reflection_matrix_h(rs: RootSystem, i: int):
    """Matrix on ``h`` (coordinates ``(u, xi, v)``) of ``x -> x - <alpha_i, x> coroot_i``."""
    alpha, coroot = affine_simple_root(rs, i), affine_simple_coroot(rs, i)
    cols = []
    for p in basis_h(rs):
        c = pair(alpha, p)
        cols.append(flatten_h(CartanPoint(p.u - c * coroot.u,
                                          core.vsub(p.xi, core.vscale(c, coroot.xi)),
                                          p.v - c * coroot.v)))
    return core.transpose(cols)


def action_matrix_h(a: AffineWeylElement):
    """Matrix on ``h`` of ``act_h(a, -)`` in coordinates ``(u, xi, v)``."""
    return core.transpose([flatten_h(act_h(a, p)) for p in basis_h(a.rs)])


def basis_h(rs: RootSystem):
    n = rs.rank
    pts = [CartanPoint(Fraction(1), core.zeros(n), Fraction(0))]
    pts += [CartanPoint(Fraction(0), core.unit(n, j), Fraction(0)) for j in range(n)]
    pts.append(CartanPoint(Fraction(0), core.zeros(n), Fraction(1)))
    return pts


def flatten_h(p: CartanPoint):
    return (Fraction(p.u),) + tuple(Fraction(x) for x in p.xi) + (Fraction(p.v),)
