"""Randomized and exhaustive identity checks, run as named suites in a fixed order."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import core
from .affweyl import (AffineWeylElement, act_t_tilde, aw_enumerate, aw_inverse, aw_length,
                      bfs_lengths, random_element)
from .arrangement import (H2TPoint, arrangement_subspace, cocycle_A, cocycle_B, component_sign,
                          four_term_action, graph_subspace, mu_section, quadric_eval,
                          quadric_polar, recognize_rigid, rig_subspace, identity_subspace)
from .groupoid import (CurveClass, LineBundleClass, curve_class_from_lattice, degree_pairing,
                       gp_check, gp_compose, gp_invert, gp_project_quadric, gp_rho1, gp_rho2, gp_tau, identity_section,
                       random_composable, random_point, random_rat, random_vector)
from .moment import moment_image, paraboloid_residual
from .rootsys import RootSystem

RNG_ALGORITHM = "MT19937 (Python random.Random), per-suite stream seeded with '<seed>/<suite>'"


@dataclass
class SuiteResult:
    name: str
    status: str  # PASS, FAIL or SKIPPED
    checks: int = 0
    failures: int = 0
    note: str = ""

    def line(self) -> str:
        text = f"{self.name:<16} {self.status:<7} checks={self.checks} failures={self.failures}"
        return f"{text}  {self.note}" if self.note else text


class _Tally:
    def __init__(self):
        self.checks = 0
        self.failures = 0
        self.first = None

    def __call__(self, ok: bool, what=None):
        self.checks += 1
        if not ok:
            self.failures += 1
            if self.first is None:
                self.first = what

    def result(self, name, note=""):
        status = "PASS" if self.failures == 0 else "FAIL"
        if self.first is not None:
            note = (note + f" first failure: {self.first}").strip()
        return SuiteResult(name, status, self.checks, self.failures, note)


def _random_u_xi(rs, rng):
    u = Fraction(0) if rng.random() < 0.2 else random_rat(rng)
    return u, random_vector(rng, rs.rank)


def suite_quadric(rs, maxlen, trials, rng, per_element=20):
    t = _Tally()
    for a, _ in aw_enumerate(rs, maxlen):
        for _ in range(per_element):
            u, xi = _random_u_xi(rs, rng)
            t(quadric_eval(rs, mu_section(a, u, xi)) == 0, (a, u, xi))
    return t


def suite_equivariance(rs, maxlen, trials, rng):
    t = _Tally()
    for _ in range(trials):
        a = random_element(rs, rng, maxlen)
        u, xi = _random_u_xi(rs, rng)
        u0, xi0 = act_t_tilde(aw_inverse(a), u, xi)
        lhs = four_term_action(a, mu_section(AffineWeylElement.identity(rs), u0, xi0))
        rhs = mu_section(a, u, xi)
        t(lhs == rhs, (a, u, xi))
        t(rhs.u == u and tuple(rhs.xi) == tuple(xi), (a, u, xi))
    return t


def suite_cocycles(rs, maxlen, trials, rng):
    t = _Tally()
    for _ in range(trials):
        a, b = random_element(rs, rng, maxlen), random_element(rs, rng, maxlen)
        u, xi = _random_u_xi(rs, rng)
        # B_{ab} = B_a o b + B_b
        bu, bxi = act_t_tilde(b, u, xi)
        t(cocycle_B(a * b, u, xi) == cocycle_B(a, bu, bxi) + cocycle_B(b, u, xi), ("B", a, b))
        # A_{ab} = A_b o a^-1 + A_a
        au, axi = act_t_tilde(aw_inverse(a), u, xi)
        lhs = cocycle_A(a * b, u, xi)
        r1, r2 = cocycle_A(b, au, axi), cocycle_A(a, u, xi)
        t(lhs.xi == core.vadd(r1.xi, r2.xi) and lhs.v == r1.v + r2.v, ("A", a, b))
        # K-part of A_a is B_a o a^-1, t-part is w^-1(xi - u lam) - xi
        ca = cocycle_A(a, u, xi)
        eta = core.matvec(a.w_inverse, core.vsub(xi, core.vscale(u, a.lam)))
        t(ca.v == cocycle_B(a, au, axi) and ca.xi == core.vsub(eta, xi), ("AB", a))
    return t


def suite_groupoid(rs, maxlen, trials, rng):
    t = _Tally()
    for _ in range(trials):
        p, q, r = random_composable(rs, rng, 3)
        t(gp_compose(rs, gp_compose(rs, p, q), r) == gp_compose(rs, p, gp_compose(rs, q, r)), "assoc")
        t(gp_compose(rs, identity_section(rs, p.u, p.xi), p) == p, "left unit")
        t(gp_compose(rs, p, identity_section(rs, p.u, p.eta)) == p, "right unit")
        t(gp_compose(rs, p, gp_invert(rs, p)) == identity_section(rs, p.u, p.xi), "inverse")
        a = random_element(rs, rng, maxlen)
        images = [gp_compose(rs, p, q), gp_invert(rs, p), gp_tau(rs, p),
                  gp_rho1(rs, a, p), gp_rho2(rs, a, p)]
        t(all(gp_check(rs, x) for x in images), ("closure", p, a))
        t(gp_tau(rs, gp_tau(rs, p)) == p, "tau involution")
    return t


def suite_actions(rs, maxlen, trials, rng):
    t = _Tally()
    half = max(1, maxlen // 2)
    for _ in range(trials):
        p = random_point(rs, rng)
        a, b = random_element(rs, rng, half), random_element(rs, rng, half)
        t(gp_rho1(rs, a, gp_rho2(rs, b, p)) == gp_rho2(rs, b, gp_rho1(rs, a, p)), ("commute", a, b))
        t(gp_rho2(rs, a, p) == gp_invert(rs, gp_rho1(rs, a, gp_invert(rs, p))), ("iota", a))
        t(gp_rho1(rs, a * b, p) == gp_rho1(rs, a, gp_rho1(rs, b, p)), ("rho1 law", a, b))
        t(gp_rho2(rs, a * b, p) == gp_rho2(rs, a, gp_rho2(rs, b, p)), ("rho2 law", a, b))
        # ordinary locus u = 0, xi = 0
        o = random_point(rs, rng, zero_u_rate=1)
        o = o._replace(xi=core.zeros(rs.rank), eta=core.zeros(rs.rank))
        t(gp_rho1(rs, a, o) == o, ("ordinary", a))
        # compatibility of Pi o rho1 with the four-term action on the identity section
        u, xi = _random_u_xi(rs, rng)
        lhs = gp_project_quadric(rs, gp_rho1(rs, a, identity_section(rs, u, xi)))
        t(lhs == four_term_action(a, H2TPoint(u, xi, xi, Fraction(0))), ("Pi rho1", a))
    return t


def suite_paraboloid(rs, maxlen, trials, rng):
    t = _Tally()
    chis = [tuple(c) for c in product((-1, 0, 1), repeat=rs.rank)] if rs.rank <= 3 else \
        [core.zeros(rs.rank)] + [core.unit(rs.rank, i) for i in range(rs.rank)]
    elems = aw_enumerate(rs, maxlen)
    for kappa in (1, 2, -1):
        for chi in chis:
            L = LineBundleClass(tuple(int(x) for x in chi), kappa)
            t(moment_image(AffineWeylElement.identity(rs), L) == (0, L.chi), ("base", L))
            for a, _ in elems:
                t(paraboloid_residual(rs, moment_image(a, L), L) == 0, (a, L))
    return t


def suite_component_signs(rs, maxlen, trials, rng):
    t = _Tally()
    v0 = identity_subspace(rs)
    for a, n in aw_enumerate(rs, maxlen):
        t(component_sign(a) == (-1) ** n, ("parity", a))
        g = graph_subspace(a)
        t(all(quadric_polar(rs, p, q) == 0 for p in g.basis for q in g.basis), ("isotropic", a))
        found = recognize_rigid(rs, g)
        t(found is not None and rig_subspace(rs, *found, v0) == g, ("rigid", a))
    return t


def suite_length_oracle(rs, maxlen, trials, rng):
    t = _Tally()
    dist = bfs_lengths(rs, maxlen)
    enum = dict(aw_enumerate(rs, maxlen))
    t(set(dist) == set(enum), "element sets differ")
    for a, n in dist.items():
        t(aw_length(a) == n and enum.get(a) == n, a)
    return t


def suite_pi_calibration(rs, maxlen, trials, rng):
    t = _Tally()
    counter = None
    for _ in range(trials):
        p = random_point(rs, rng)
        t(quadric_eval(rs, gp_project_quadric(rs, p)) == 0, p)
        if counter is None:
            q = quadric_eval(rs, gp_project_quadric(rs, p, 2))
            if q != 0:
                counter = (p, q)
    found = counter is not None
    t(found, "no counterexample for c = 2")
    note = f"c=2 counterexample: {_fmt_point(counter[0])} q={core.rat_str(counter[1])}" if found else ""
    return t, note


def suite_h2_model(rs, maxlen, trials, rng):
    t = _Tally()
    for a, _ in aw_enumerate(rs, min(maxlen, 6)):
        g = graph_subspace(a)
        t(g.dim == rs.rank + 1 and g == arrangement_subspace(a), a)
    return t


def suite_degree_pairing(rs, maxlen, trials, rng):
    t = _Tally()
    r = rs.rank

    def unit(i):
        return CurveClass(tuple(int(j == i) for j in range(r + 1)))

    det = LineBundleClass(core.zeros(r), 1)
    t(degree_pairing(rs, det, unit(0)) == 1, "L_det . C_0")
    for i in range(1, r + 1):
        t(degree_pairing(rs, det, unit(i)) == 0, ("L_det", i))
    for _ in range(trials):
        chi = tuple(rng.randint(-5, 5) for _ in range(r))
        L = LineBundleClass(chi, rng.randint(-3, 3))
        for i in range(1, r + 1):
            t(degree_pairing(rs, LineBundleClass(chi, 0), unit(i)) == chi[i - 1], ("L_chi", chi, i))
        lam, k = tuple(rng.randint(-4, 4) for _ in range(r)), rng.randint(-3, 3)
        t(degree_pairing(rs, L, curve_class_from_lattice(rs, lam, k)) == core.dot(chi, lam) + L.kappa * k,
          ("pairing", L, lam, k))
    return t


def _fmt_point(p):
    def f(v):
        return "[" + ",".join(core.rat_str(x) for x in v) + "]"
    return f"(u={core.rat_str(p.u)}, xi={f(p.xi)}, eta={f(p.eta)}, v={f(p.vlist)})"


# name, function, needs the full ring of invariants
SUITES = [
    ("quadric", suite_quadric, False),
    ("equivariance", suite_equivariance, False),
    ("cocycles", suite_cocycles, False),
    ("groupoid", suite_groupoid, True),
    ("actions", suite_actions, True),
    ("paraboloid", suite_paraboloid, False),
    ("component-signs", suite_component_signs, False),
    ("length-oracle", suite_length_oracle, False),
    ("pi-calibration", suite_pi_calibration, True),
    ("h2-model", suite_h2_model, False),
    ("degree-pairing", suite_degree_pairing, False),
]


def suite_rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}/{name}")


def run_suite(rs: RootSystem, name: str, maxlen: int, trials: int, seed: int) -> SuiteResult:
    for sname, fn, ring in SUITES:
        if sname == name:
            break
    else:
        raise KeyError(name)
    if ring and not rs.has_full_invariants:
        return SuiteResult(name, "SKIPPED", note="higher invariants unavailable")
    out = fn(rs, maxlen, trials, suite_rng(seed, name))
    tally, note = out if isinstance(out, tuple) else (out, "")
    return tally.result(name, note)


def run_all(rs: RootSystem, maxlen: int, trials: int, seed: int) -> list[SuiteResult]:
    return [run_suite(rs, name, maxlen, trials, seed) for name, _, _ in SUITES]
