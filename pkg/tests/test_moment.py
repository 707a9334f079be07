from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afflag import core
from afflag.affweyl import AffineWeylElement, aw_enumerate
from afflag.arrangement import mu_section
from afflag.groupoid import LineBundleClass
from afflag.moment import MomentPoint, moment_cloud, moment_image, paraboloid_residual
from afflag.rootsys import root_system

from conftest import SMALL, elements, group_and

A1 = root_system("A1")
OMEGA = (1,)  # fundamental weight of A1
ALPHA = A1.simple_root(1)


def test_identity_image():
    for rs in map(root_system, SMALL):
        chi = tuple(range(1, rs.rank + 1))
        assert moment_image(AffineWeylElement.identity(rs), LineBundleClass(chi, 3)) == (0, chi)


@pytest.mark.parametrize("n", range(-20, 21))
def test_a1_translation_family(n):
    L = LineBundleClass((0,), 1)
    m = moment_image(AffineWeylElement.translation(A1, [n]), L)
    assert m == MomentPoint(-n * n, core.vscale(n, ALPHA))
    assert paraboloid_residual(A1, m, L) == 0


def test_a1_fundamental_weight_example():
    L = LineBundleClass(OMEGA, 1)
    m = moment_image(AffineWeylElement.translation(A1, [1]), L)
    assert m == MomentPoint(-2, core.vadd(OMEGA, ALPHA))
    assert paraboloid_residual(A1, m, L) == 0


def test_residual_examples_and_errors():
    L = LineBundleClass(OMEGA, 1)
    assert paraboloid_residual(A1, MomentPoint(Fraction(0), OMEGA), L) == 0
    assert paraboloid_residual(A1, MomentPoint(Fraction(1), OMEGA), L) == 1
    with pytest.raises(ZeroDivisionError):
        paraboloid_residual(A1, MomentPoint(Fraction(0), OMEGA), LineBundleClass(OMEGA, 0))


def test_cloud_examples():
    L = LineBundleClass((0,), 1)
    assert moment_cloud(A1, L, 0) == [(AffineWeylElement.identity(A1), (0, (0,)))]
    pts = moment_cloud(A1, L, 2)
    assert sorted(m.m0 for _, m in pts) == [-1, -1, -1, 0, 0]
    a2 = root_system("A2")
    pts = moment_cloud(a2, LineBundleClass((0, 0), 1), 1)
    assert len(pts) == 4 and {m.m0 for _, m in pts} == {0, -1}
    # kappa = 0 is allowed for images
    assert len(moment_cloud(A1, LineBundleClass((1,), 0), 3)) == 7


@pytest.mark.parametrize("group", SMALL)
def test_paraboloid_grid(group):
    rs = root_system(group)
    elems = aw_enumerate(rs, 8 if rs.rank < 3 else 6)
    for kappa in (1, 2, -1):
        for chi in product((-1, 0, 2), repeat=rs.rank):
            L = LineBundleClass(chi, kappa)
            assert all(paraboloid_residual(rs, moment_image(a, L), L) == 0 for a, _ in elems)


@given(group_and(SMALL, lambda rs: st.tuples(elements(rs), st.integers(-4, 4))))
def test_height_depends_only_on_translation_at_chi_zero(data):
    rs, (a, kappa) = data
    m = moment_image(a, LineBundleClass(core.zeros(rs.rank), kappa))
    assert m.m0 == -Fraction(kappa, 2) * rs.norm2(a.lam)


@given(group_and(SMALL, lambda rs: st.tuples(
    elements(rs), st.tuples(*[st.integers(-4, 4)] * rs.rank), st.integers(-4, 4))))
def test_agrees_with_arrangement_pairing(data):
    # pair the dual vector (0, 0, chi, kappa) with mu_section(a, -) read as a linear map of (u, xi)
    rs, (a, chi, kappa) = data

    def pairing(u, xi):
        p = mu_section(a, u, xi)
        return core.dot(chi, p.eta) + kappa * p.v

    m = moment_image(a, LineBundleClass(chi, kappa))
    assert m.m0 == pairing(1, core.zeros(rs.rank))
    assert m.m1 == tuple(pairing(0, core.unit(rs.rank, j)) for j in range(rs.rank))
