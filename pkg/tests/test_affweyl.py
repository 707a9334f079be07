from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from afflag import core
from afflag.affweyl import (AffineWeylElement, CartanPoint, CocartanPoint, act_h, act_h_dual,
                            action_matrix_h, aw_enumerate, aw_inverse, aw_length, bfs_lengths,
                            extended_killing, pair, reduced_word, reflection_matrix_h,
                            simple_reflection_affine)
from afflag.rootsys import root_system

from conftest import SMALL, elements, group_and, rats, vectors

A1 = root_system("A1")
A2 = root_system("A2")
S = ((-1,),)
E = ((1,),)


def el(rs, lam, w):
    return AffineWeylElement(rs, tuple(lam), tuple(tuple(r) for r in w))


def cartan_points(rs):
    return st.builds(CartanPoint, rats(), vectors(rs.rank), rats())


def cocartan_points(rs):
    return st.builds(CocartanPoint, rats(), vectors(rs.rank), rats())


def test_simple_reflections_a1():
    assert simple_reflection_affine(A1, 1) == el(A1, [0], S)
    assert simple_reflection_affine(A1, 0) == el(A1, [1], S)
    with pytest.raises(IndexError):
        simple_reflection_affine(A1, 2)


def test_s0_a2():
    s0 = simple_reflection_affine(A2, 0)
    assert s0.lam == (1, 1)
    assert s0.w == A2.highest_reflection


def test_inverse_examples():
    e = AffineWeylElement.identity(A1)
    assert aw_inverse(e) == e
    assert aw_inverse(el(A1, [1], E)) == el(A1, [-1], E)
    assert aw_inverse(el(A1, [1], S)) == el(A1, [1], S)


def test_act_h_examples():
    x, v = Fraction(3, 7), Fraction(5)
    assert act_h(el(A1, [1], E), CartanPoint(1, (x,), v)) == CartanPoint(1, (x + 1,), v - 2 * x - 1)
    assert act_h(el(A1, [0], S), CartanPoint(2, (x,), v)) == CartanPoint(2, (-x,), v)


def test_act_h_dual_examples():
    alpha = A1.simple_root(1)
    assert act_h_dual(el(A1, [1], E), CocartanPoint(0, alpha, 0)) == CocartanPoint(-2, alpha, 0)
    delta = CocartanPoint(1, (0, 0), 0)
    assert act_h_dual(simple_reflection_affine(A2, 0), delta) == delta


def test_length_examples():
    assert aw_length(AffineWeylElement.identity(A1)) == 0
    for n in range(-6, 7):
        assert aw_length(AffineWeylElement.translation(A1, [n])) == 2 * abs(n)
    assert aw_length(AffineWeylElement.from_word(A1, [0, 1])) == 2


def test_enumerate_examples():
    assert [n for _, n in aw_enumerate(A1, 0)] == [0]
    assert [n for _, n in aw_enumerate(A1, 3)] == [0, 1, 1, 2, 2, 3, 3]
    got = {a for a, _ in aw_enumerate(A2, 1)}
    assert got == {AffineWeylElement.identity(A2)} | {simple_reflection_affine(A2, i) for i in range(3)}
    with pytest.raises(ValueError):
        aw_enumerate(A1, -1)


def test_mismatched_root_systems():
    with pytest.raises(ValueError):
        AffineWeylElement.identity(A1) * AffineWeylElement.identity(root_system("G2"))


def poincare_series(rs, n):
    """Coefficients up to t^n of prod_i (1 - t^(d_i+1)) / ((1 - t)(1 - t^d_i))."""
    series = [1] + [0] * n
    for d in rs.exponents:
        num = [0] * (n + 1)
        for k in range(n + 1):
            # (1 - t^(d+1)) / (1 - t) = 1 + t + ... + t^d
            num[k] = sum(series[k - j] for j in range(0, min(d, k) + 1))
        series = [sum(num[k - d * j] for j in range(k // d + 1)) for k in range(n + 1)]
    return series


@pytest.mark.parametrize("group, n", [("A1", 10), ("A2", 8), ("A3", 8), ("B2", 10), ("C3", 7),
                                      ("G2", 10), ("D4", 6)])
def test_enumeration_counts_match_poincare_series(group, n):
    rs = root_system(group)
    counts = Counter(k for _, k in aw_enumerate(rs, n))
    assert [counts[k] for k in range(n + 1)] == poincare_series(rs, n)


@pytest.mark.parametrize("group", ["A1", "A2", "B2", "G2"])
def test_length_matches_bfs(group):
    rs = root_system(group)
    dist = bfs_lengths(rs, 8)
    assert dist == dict(aw_enumerate(rs, 8))
    assert all(aw_length(a) == n for a, n in dist.items())


@pytest.mark.parametrize("group", SMALL + ["C3", "D4"])
def test_affine_reflections_match_root_data(group):
    # s_i acts on h as x -> x - <alpha_i, x> alpha_i^vee with alpha_0 = delta - theta, alpha_0^vee = K - theta^vee
    rs = root_system(group)
    for i in range(rs.rank + 1):
        assert action_matrix_h(simple_reflection_affine(rs, i)) == reflection_matrix_h(rs, i)


@given(group_and(SMALL, lambda rs: st.tuples(elements(rs), elements(rs), elements(rs))))
def test_group_axioms(data):
    rs, (a, b, c) = data
    e = AffineWeylElement.identity(rs)
    assert (a * b) * c == a * (b * c)
    assert a * aw_inverse(a) == e == aw_inverse(a) * a
    assert a * e == a


@given(group_and(SMALL, lambda rs: st.tuples(elements(rs), elements(rs), cartan_points(rs))))
def test_act_h_is_an_action(data):
    rs, (a, b, p) = data
    assert act_h(a * b, p) == act_h(a, act_h(b, p))
    assert extended_killing(rs, act_h(a, p)) == extended_killing(rs, p)


@given(group_and(SMALL, lambda rs: st.tuples(elements(rs), cocartan_points(rs), cartan_points(rs))))
def test_dual_action_preserves_pairing(data):
    rs, (a, q, p) = data
    assert pair(act_h_dual(a, q), act_h(a, p)) == pair(q, p)


@given(group_and(SMALL, lambda rs: elements(rs, maxword=10)))
def test_reduced_word_reproduces_element(data):
    rs, a = data
    word = reduced_word(a)
    # the word was found by peeling left descents: a = s_{i1} s_{i2} ...
    assert AffineWeylElement.from_word(rs, word) == a
    assert aw_length(aw_inverse(a)) == len(word)
