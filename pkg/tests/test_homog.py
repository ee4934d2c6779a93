import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_polys
from qhdisc.homog import (
    MultiHomogPoly,
    condition_C,
    euler_x,
    euler_y,
    homog_derivative,
    multi_homogenize,
)
from qhdisc.newton import condition_A
from qhdisc.polyring import GF, BivarPoly, is_reduced, parse_poly
from qhdisc.resultants import condition_B

P = parse_poly


def test_multi_homogenize_examples():
    F = multi_homogenize(P("y^2 - x^3"))
    assert F.bidegree == (3, 2) and F.terms == {(0, 2): 1, (3, 0): -1}
    assert str(F) == "-x^3*yt^2 + xt^3*y^2"
    F = multi_homogenize(P("1 + x*y + x^2*y^2"))
    assert F.bidegree == (2, 2) and F.terms == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    F = multi_homogenize(P("5"))
    assert F.bidegree == (0, 0) and F.terms == {(0, 0): 5}
    with pytest.raises(ValueError):
        multi_homogenize(BivarPoly.zero())


def test_homog_derivative_examples():
    F = multi_homogenize(P("y^2 - x^3"))
    assert homog_derivative(F, "x").mul_var("x") == MultiHomogPoly(3, 2, {(3, 0): -3})
    assert homog_derivative(F, "y").mul_var("y") == MultiHomogPoly(3, 2, {(0, 2): 2})
    assert euler_x(F) == F * 3
    assert euler_y(F) == F * 2
    with pytest.raises(ValueError):
        homog_derivative(multi_homogenize(P("x + 1")), "y")
    with pytest.raises(ValueError):
        homog_derivative(F, "z")


def test_multihomog_validation():
    with pytest.raises(ValueError):
        MultiHomogPoly(1, 1, {(2, 0): 1})
    with pytest.raises(ValueError):
        MultiHomogPoly(1, 1, {}) + MultiHomogPoly(2, 1, {})


def test_condition_C_examples():
    assert condition_C(P("y^2 - x^3")) == (True, None)
    ok, w = condition_C(P("y^2 - x^3 - x^2"))
    assert not ok and str(w.factor) == "x + 1"
    f = P("y^2 - x^3 - x^2")
    assert f.eval_at(-1, 0) == 0 and f.derivative("y").mul_monomial(0, 1).eval_at(-1, 0) == 0
    ok, w = condition_C(P("1 + x"))
    assert not ok and str(w.factor) == "x + 1"
    assert condition_C(P("x^3"))[0]
    with pytest.raises(ValueError):
        condition_C(P("x*y^2 + y"))


def test_condition_C_charts():
    ok, w = condition_C(P("y^2*(x - 2) + x^3"))
    assert not ok and w.kind == "y_inf_chart" and str(w.factor) == "x - 2"
    ok, w = condition_C(P("y^2 + x*y + x"))  # Res_y = x^2 - 4x strips to x - 4
    assert not ok and w.kind == "affine" and str(w.factor) == "x - 4"


def test_condition_C_char_p():
    assert condition_C(P("y^2 + x^3", field=GF(5)))[0]
    ok, w = condition_C(P("y^2 + x^3", field=GF(2)))
    assert not ok and w.factor.is_zero()


def test_condition_C_nonreduced_is_total():
    ok, w = condition_C(P("(y - 1)^2*x"))
    assert not ok and w.kind == "affine"


@given(nonzero_polys(max_deg=3), nonzero_polys(max_deg=3))
def test_multiplicativity(g, h):
    assert multi_homogenize(g * h) == multi_homogenize(g) * multi_homogenize(h)


@given(nonzero_polys(max_deg=4, max_terms=8))
def test_euler_identities(f):
    F = multi_homogenize(f)
    m, n = F.bidegree
    if m:
        assert euler_x(F) == F * m
    if n:
        assert euler_y(F) == F * n


@given(nonzero_polys(max_deg=4, max_terms=8))
def test_dehomogenize_roundtrip(f):
    g = multi_homogenize(f).dehomogenize()
    assert g == f and (g.deg_x, g.deg_y) == (f.deg_x, f.deg_y)


@given(nonzero_polys(max_deg=3), st.integers(-4, 4), st.integers(1, 4), st.integers(-4, 4))
def test_homogeneous_scaling(f, s, t, u):
    # F(s x, s xt, y, yt) = s^m F(x, xt, y, yt)
    F = multi_homogenize(f)
    lhs = F.evaluate(s * t, s * u, 2, 3)
    assert lhs == s ** F.m * F.evaluate(t, u, 2, 3)


def test_swap_identity_on_curve():
    # on f-hat = 0: x*F_x = -xt*F_xt; rational points of xy - x^2 + 1 = 0 are (a, (a^2 - 1)/a)
    f = P("x*y - x^2 + 1")
    F = multi_homogenize(f)
    Fx, Fxt = homog_derivative(F, "x"), homog_derivative(F, "xt")
    rng = random.Random(0)
    for _ in range(10):
        a = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        b = (a * a - 1) / a
        assert F.evaluate(a, 1, b, 1) == 0
        assert a * Fx.evaluate(a, 1, b, 1) == -Fxt.evaluate(a, 1, b, 1)


@given(nonzero_polys(max_deg=3, max_terms=6))
def test_theorem_equivalence_small(f):
    cols = f.coefficients_in_y()
    if cols[0].is_zero() or cols[-1].is_zero() or not is_reduced(f):
        return
    a = condition_A(f)[0]
    assert condition_B(f)[0] == a
    assert condition_C(f)[0] == a
