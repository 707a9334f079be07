from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afflag import core
from afflag.core import Poly, difference_quotient_u, poly_eval, poly_gradient

from conftest import rats, vectors

XY = ("x", "y")
x, y = Poly.gens(XY)
X = Poly.gens(("x",))[0]


def test_rat_rejects_floats():
    with pytest.raises(TypeError):
        core.rat(0.5)
    assert core.rat("3/6") == Fraction(1, 2)


def test_rat_str():
    assert core.rat_str(Fraction(4, 2)) == "2"
    assert core.rat_str(Fraction(-3, 4)) == "-3/4"


@pytest.mark.parametrize("p, point, want", [
    (x * x + y, (0, 0), 0),
    (2 * X ** 2, (1,), 2),
    (2 * X ** 2, (Fraction(3, 2),), Fraction(9, 2)),
])
def test_poly_eval_examples(p, point, want):
    assert poly_eval(p, point) == want


def test_poly_eval_dimension_mismatch():
    with pytest.raises(ValueError):
        poly_eval(x + y, (1,))


def test_gradient_examples():
    assert poly_gradient(2 * X ** 2) == (4 * X,)
    assert poly_gradient(x * y) == (y, x)
    g = poly_gradient(x ** 2 + y ** 3)
    assert tuple(poly_eval(h, (1, 1)) for h in g) == (2, 3)


@pytest.mark.parametrize("a, b, u, want", [((0,), (1,), 1, 2), ((1,), (1,), 0, 4), ((0,), (0,), 5, 0)])
def test_difference_quotient_examples(a, b, u, want):
    assert difference_quotient_u(2 * X ** 2, a, b, u) == want


def test_difference_quotient_mismatch():
    with pytest.raises(ValueError):
        difference_quotient_u(x * y, (1,), (1, 1), 1)


cubic_coeffs = st.lists(rats(), min_size=10, max_size=10)


def cubic(cs):
    mons = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2), (0, 3)]
    return Poly(XY, dict(zip(mons, cs)))


@given(cubic_coeffs, vectors(2), vectors(2), rats())
def test_difference_quotient_times_u(cs, a, b, u):
    f = cubic(cs)
    shifted = core.vadd(a, core.vscale(u, b))
    assert u * difference_quotient_u(f, a, b, u) == poly_eval(f, shifted) - poly_eval(f, a)


@given(cubic_coeffs, vectors(2), vectors(2))
def test_difference_quotient_limit(cs, a, b):
    # the quotient is a polynomial in u; build it symbolically and evaluate at 0
    f = cubic(cs)
    U = ("u",)
    t = Poly.gens(U)[0]
    moved = f.compose([Poly.constant(U, ai) + t * bi for ai, bi in zip(a, b)]) - poly_eval(f, a)
    quotient = Poly(U, {(e[0] - 1,): c for e, c in moved.terms.items()})
    assert poly_eval(quotient, (0,)) == difference_quotient_u(f, a, b, 0)


@given(st.lists(rats(), min_size=6, max_size=6), vectors(2), vectors(2), rats().filter(bool))
def test_gradient_matches_symmetric_difference(cs, a, b, h):
    f = cubic(cs + [0] * 4)
    fd = (poly_eval(f, core.vadd(a, core.vscale(h, b))) - poly_eval(f, core.vsub(a, core.vscale(h, b)))) / (2 * h)
    assert fd == core.directional_derivative(f, a, b)


@given(st.lists(vectors(3), min_size=3, max_size=3), st.lists(vectors(3), min_size=3, max_size=3))
def test_det_multiplicative(a, b):
    assert core.det(core.matmul(a, b)) == core.det(a) * core.det(b)


@given(st.lists(vectors(3), min_size=3, max_size=3))
def test_inverse(a):
    if core.det(a) == 0:
        with pytest.raises(ZeroDivisionError):
            core.inverse(a)
        return
    assert core.matmul(a, core.inverse(a)) == core.identity(3)


@given(st.lists(vectors(4), min_size=1, max_size=5))
def test_rref_is_canonical(rows):
    r = core.rref(rows)
    assert core.rref(reversed(rows)) == r
    assert core.rref(r) == r
    assert len(r) == core.rank(rows)


def test_poly_arithmetic():
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x - x).is_zero()
    assert ((x + 1) * (x - 1)).degree() == 2
    assert not (x * x + y).is_homogeneous()
    assert (x * y).partial(0) == y
    with pytest.raises(ValueError):
        x + Poly.gens(("z",))[0]


@given(cubic_coeffs, st.lists(vectors(2), min_size=2, max_size=2), vectors(2))
def test_linear_substitute(cs, m, pt):
    f = cubic(cs)
    assert poly_eval(f.linear_substitute(m), pt) == poly_eval(f, core.matvec(m, pt))


def test_elementary_symmetric():
    es = core.elementary_symmetric([x, y], XY)
    assert es == [Poly.constant(XY, 1), x + y, x * y]
