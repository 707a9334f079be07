"""Finite root data for a simple simply-connected group.

Conventions used throughout the package:

* the Cartan algebra ``t`` has coordinates in the simple-coroot basis,
  so the coroot lattice is ``Z^r``;
* the dual ``t*`` has coordinates in the fundamental-weight basis, so the
  i-th coordinate of a weight is its value on the i-th simple coroot and
  the pairing ``<chi, xi>`` is the plain dot product;
* the Cartan matrix is ``a[i][j] = <alpha_j, coroot_i>`` with Bourbaki
  numbering;
* the Killing form is scaled so that the highest root has squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, lru_cache

from . import core
from .core import Poly


class UnsupportedInvariants(NotImplementedError):
    """Raised when a full set of fundamental invariants is needed but unavailable."""


EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("G", 2): (1, 5),
}


def _exponents(family, r):
    if family == "A":
        return tuple(range(1, r + 1))
    if family in "BC":
        return tuple(range(1, 2 * r, 2))
    if family == "D":
        return tuple(sorted(list(range(1, 2 * r - 2, 2)) + [r - 1]))
    return EXPONENTS[family, r]


def _check_type(family, r):
    ok = {
        "A": r >= 1, "B": r >= 2, "C": r >= 3, "D": r >= 4,
        "E": r in (6, 7, 8), "F": r == 4, "G": r == 2,
    }
    if family not in ok or not ok[family]:
        raise ValueError(f"not a simple type: {family}{r}")


def cartan_matrix(family: str, r: int):
    """Cartan matrix with Bourbaki numbering.

    An edge between a short root i and a long root j of bond multiplicity m
    gives ``a[i][j] = -m`` and ``a[j][i] = -1``.
    """
    _check_type(family, r)
    edges = []  # (i, j, m) with i short when m > 1, 0-based
    if family in "ABC":
        edges = [(i, i + 1, 1) for i in range(r - 1)]
        if family == "B":
            edges[-1] = (r - 1, r - 2, 2)
        elif family == "C":
            edges[-1] = (r - 2, r - 1, 2)
    elif family == "D":
        edges = [(i, i + 1, 1) for i in range(r - 2)] + [(r - 3, r - 1, 1)]
    elif family == "E":
        edges = [(0, 2, 1), (1, 3, 1)] + [(i, i + 1, 1) for i in range(2, r - 1)]
    elif family == "F":
        edges = [(0, 1, 1), (2, 1, 2), (2, 3, 1)]
    elif family == "G":
        edges = [(0, 1, 3)]
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i, j, m in edges:
        a[i][j] = -m
        a[j][i] = -1
    return tuple(tuple(row) for row in a)


def parse_group(text: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
    if not m:
        raise ValueError(f"cannot parse group {text!r}")
    family, r = m.group(1).upper(), int(m.group(2))
    _check_type(family, r)
    return family, r


@dataclass(frozen=True, eq=False)
class RootSystem:
    family: str
    rank: int
    cartan: tuple
    coroot_gram: tuple
    highest_root_coroot: tuple
    exponents: tuple
    invariants: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)  # simple-root coordinates

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def variables(self):
        return tuple(f"x{i + 1}" for i in range(self.rank))

    @property
    def has_full_invariants(self) -> bool:
        return len(self.invariants) == self.rank

    # -- forms and pairings -------------------------------------------------

    def killing(self, x, y) -> Fraction:
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError(f"expected vectors of length {self.rank}")
        return Fraction(core.bilinear(x, self.coroot_gram, y))

    def norm2(self, x) -> Fraction:
        return self.killing(x, x)

    def sigma(self, x):
        """The weight ``sigma(x)`` with ``<sigma(x), y> = (x|y)``."""
        if len(x) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}")
        return core.matvec(self.coroot_gram, x)

    def sigma_inverse(self, chi):
        return core.matvec(self.gram_inverse, chi)

    def weight_killing(self, chi, psi) -> Fraction:
        return Fraction(core.bilinear(chi, self.gram_inverse, psi))

    def weight_norm2(self, chi) -> Fraction:
        return self.weight_killing(chi, chi)

    @cached_property
    def gram_inverse(self):
        return core.inverse(self.coroot_gram)

    # -- roots ----------------------------------------------------------------

    def simple_root(self, i: int):
        """Simple root ``alpha_i`` (1-based) as a weight: column i of the Cartan matrix."""
        return tuple(self.cartan[k][i - 1] for k in range(self.rank))

    def root_to_weight(self, c):
        """Convert simple-root coordinates to weight coordinates."""
        return core.matvec(self.cartan, c)

    @cached_property
    def highest_root(self):
        """The highest root as a weight."""
        return self.root_to_weight(self.positive_roots[-1])

    @cached_property
    def rho_check(self):
        """Coweight pairing to 1 with every simple root; ``<beta, rho_check>`` is the height."""
        return core.solve(core.transpose(self.cartan), (1,) * self.rank)

    def height(self, chi) -> Fraction:
        return Fraction(core.dot(chi, self.rho_check))

    # -- Weyl group -------------------------------------------------------------

    def simple_reflection(self, i: int):
        """Matrix of ``s_i(x) = x - <alpha_i, x> coroot_i`` on ``t`` (1-based i)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"simple reflection index {i} out of range 1..{self.rank}")
        alpha = self.simple_root(i)
        return tuple(
            tuple(int(j == k) - (alpha[k] if j == i - 1 else 0) for k in range(self.rank))
            for j in range(self.rank)
        )

    @cached_property
    def highest_reflection(self):
        """Matrix of the reflection in the highest root."""
        th, thc = self.highest_root, self.highest_root_coroot
        return tuple(
            tuple(int(j == k) - thc[j] * th[k] for k in range(self.rank))
            for j in range(self.rank)
        )

    def weyl_act_weight(self, w, chi):
        """``w . chi`` for a weight; the contragredient action ``(w^-1)^T chi``."""
        return core.vecmat(chi, weyl_inverse(w))

    def is_orthogonal(self, s) -> bool:
        """Whether ``s`` preserves the Killing form: ``s^T G s = G``."""
        g = self.coroot_gram
        return _same(core.matmul(core.matmul(core.transpose(s), g), s), g)

    # -- invariants -----------------------------------------------------------

    def chevalley_map(self, x):
        if not self.has_full_invariants:
            raise UnsupportedInvariants(
                f"fundamental invariants of {self.name} beyond the quadratic one are not available"
            )
        return tuple(core.poly_eval(f, x) for f in self.invariants)

    def require_full_invariants(self):
        if not self.has_full_invariants:
            raise UnsupportedInvariants(f"{self.name} has only the quadratic invariant")


def _same(a, b) -> bool:
    return all(Fraction(x) == Fraction(y) for ra, rb in zip(a, b) for x, y in zip(ra, rb))


@lru_cache(maxsize=None)
def weyl_inverse(w):
    return core.inverse(w)


def _positive_roots(cartan):
    """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
    r = len(cartan)
    simple = [core.unit(r, i) for i in range(r)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                # s_i(beta) = beta - <beta, coroot_i> alpha_i
                pairing = sum(beta[j] * cartan[i][j] for j in range(r))
                gamma = tuple(b - (pairing if k == i else 0) for k, b in enumerate(beta))
                if all(g >= 0 for g in gamma) and gamma not in roots:
                    roots.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    return tuple(sorted(roots, key=lambda c: (sum(c), c)))


def _symmetrizer(cartan):
    """Positive ``eps`` with ``eps_i a[j][i] = eps_j a[i][j]``."""
    r = len(cartan)
    eps = [None] * r
    eps[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and cartan[i][j] and eps[j] is None:
                eps[j] = eps[i] * Fraction(cartan[j][i], cartan[i][j])
                stack.append(j)
    return eps


def _classical_coroots(family, r):
    """Simple coroots in the standard orthonormal coordinates of the defining representation."""
    n = r + 1 if family == "A" else r
    rows = []
    for i in range(r - 1):
        rows.append(tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n)))
    if family == "A":
        rows.append(tuple(1 if k == r - 1 else -1 if k == r else 0 for k in range(n)))
    elif family == "B":
        rows.append(core.vscale(2, core.unit(n, r - 1)))
    elif family == "C":
        rows.append(core.unit(n, r - 1))
    elif family == "D":
        rows.append(tuple(1 if k in (r - 2, r - 1) else 0 for k in range(n)))
    return tuple(rows)


def _classical_invariants(family, r, variables):
    """Fundamental invariants of degrees ``d_i + 1``, before f_1 is replaced."""
    coroots = _classical_coroots(family, r)
    n = len(coroots[0])
    gens = Poly.gens(variables)
    y = [sum((gens[i] * coroots[i][k] for i in range(r)), Poly(variables)) for k in range(n)]
    if family == "A":
        es = core.elementary_symmetric(y, variables)
        return es[2:]
    es = core.elementary_symmetric([yk * yk for yk in y], variables)
    fs = es[1:]
    if family == "D":
        pf = Poly.constant(variables, 1)
        for yk in y:
            pf = pf * yk
        fs = es[1:r] + [pf]
    return sorted(fs, key=lambda f: f.degree())


def _check_invariants(rs: RootSystem):
    reflections = [rs.simple_reflection(i) for i in range(1, rs.rank + 1)]
    killing_form = _killing_poly(rs)
    if rs.invariants[0] != killing_form:
        raise AssertionError("f_1 must be the Killing quadratic form")
    for f, d in zip(rs.invariants, rs.exponents):
        if f.degree() != d + 1 or not f.is_homogeneous():
            raise AssertionError(f"invariant {f} does not have degree {d + 1}")
        if any(f.linear_substitute(s) != f for s in reflections):
            raise AssertionError(f"invariant {f} is not Weyl invariant")
        # the involution tau needs f(-x) = (-1)^(d+1) f(x)
        if negate_arguments(f) != f * (-1) ** (d + 1):
            raise AssertionError(f"invariant {f} has the wrong parity")


def negate_arguments(f: Poly) -> Poly:
    """The polynomial ``x -> f(-x)``."""
    return Poly(f.variables, {e: c * (-1) ** sum(e) for e, c in f.terms.items()})


def _killing_poly(rs: RootSystem) -> Poly:
    gens = Poly.gens(rs.variables)
    r = rs.rank
    return sum(
        (gens[i] * gens[j] * rs.coroot_gram[i][j] for i in range(r) for j in range(r)),
        Poly(rs.variables),
    )


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    _check_type(family, rank)
    cartan = cartan_matrix(family, rank)
    roots = _positive_roots(cartan)
    eps = _symmetrizer(cartan)
    gram0 = tuple(tuple(eps[i] * cartan[j][i] for j in range(rank)) for i in range(rank))
    theta = core.matvec(cartan, roots[-1])
    g0inv = core.inverse(gram0)
    theta_len = core.bilinear(theta, g0inv, theta)
    coroot = core.vscale(Fraction(2) / theta_len, core.matvec(g0inv, theta))
    if any(Fraction(c).denominator != 1 for c in coroot):
        raise AssertionError("highest coroot is not integral")
    coroot = tuple(int(c) for c in coroot)
    scale = Fraction(2) / core.bilinear(coroot, gram0, coroot)
    gram = tuple(tuple(core._normalize(scale * x) for x in row) for row in gram0)
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan=cartan,
        coroot_gram=gram,
        highest_root_coroot=coroot,
        exponents=_exponents(family, rank),
        invariants=(),
        positive_roots=roots,
    )
    variables = rs.variables
    if family in "ABCD":
        fs = _classical_invariants(family, rank, variables)
    else:
        fs = [None]
    fs[0] = _killing_poly(rs)
    rs = replace(rs, invariants=tuple(fs))
    _check_invariants(rs)
    return rs


def root_system(group: str) -> RootSystem:
    """Build from a selector string such as ``"A2"`` or ``"g2"``."""
    return build_root_system(*parse_group(group))


def with_invariants(rs: RootSystem, invariants) -> RootSystem:
    """A copy of ``rs`` carrying user-supplied fundamental invariants (validated)."""
    invariants = tuple(invariants)
    if len(invariants) != rs.rank:
        raise ValueError(f"need {rs.rank} invariants")
    new = replace(rs, invariants=invariants)
    _check_invariants(new)
    return new
