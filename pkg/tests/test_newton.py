import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_polys
from qhdisc.newton import (
    AdvisoryWarning,
    QHType,
    condition_A,
    convex_hull,
    euler_qh_test,
    find_qh_type,
    minkowski_sum,
    mixed_volume,
    newton_polytope,
    support,
    twice_area,
)
from qhdisc.polyring import GF, BivarPoly, parse_poly
from qhdisc.theoremlab import QHParams, generate_qh

P = parse_poly


def test_support_examples():
    assert support(P("y^2 - x^3")) == {(0, 2), (3, 0)}
    assert support(P("1 + x*y + x^2*y^2")) == {(0, 0), (1, 1), (2, 2)}
    assert support(P("7")) == {(0, 0)}
    with pytest.raises(ValueError):
        support(BivarPoly.zero())


def test_find_qh_type_examples():
    assert find_qh_type(P("1 + x*y + x^2*y^2")) == QHType(0, 1, -1)
    assert find_qh_type(P("y^2 - x^3")) == QHType(6, 2, 3)
    assert find_qh_type(P("y^2 - x^3 - x^2")) is None
    t = find_qh_type(P("x^2*y^3"))
    assert t.as_tuple() == (2, 1, 0) and not t.unique


def test_euler_examples():
    assert euler_qh_test(P("y^2 - x^3")) == (6, 2, 3)
    assert euler_qh_test(P("1 + x*y + x^2*y^2")) == (0, 1, -1)
    assert euler_qh_test(P("y^2 - x^3 - x^2")) is None


def test_euler_mod_p_is_advisory():
    with pytest.warns(AdvisoryWarning):
        v = euler_qh_test(P("y^2 + x^3", field=GF(5)))
    w, a, b = v
    assert (w - 2 * b) % 5 == 0 and (w - 3 * a) % 5 == 0


def test_condition_A_examples():
    assert condition_A(P("y^2 - x^3")) == (True, QHType(6, 2, 3))
    assert condition_A(P("1 + x")) == (False, None)
    ok, t = condition_A(P("x^2*y^3"))
    assert ok and t.as_tuple() == (2, 1, 0)


def test_qhtype_canonical_and_validation():
    assert QHType.canonical(-12, -4, -6) == QHType(6, 2, 3)
    assert QHType.canonical(0, 0, -2) == QHType(0, 0, 1)
    assert str(QHType(0, 1, -1)) == "(0; 1, -1)"
    with pytest.raises(ValueError):
        QHType(1, 0, 0)


def test_mixed_volume_examples():
    mv = lambda a, b: mixed_volume(newton_polytope(P(a)), newton_polytope(P(b)))  # noqa: E731
    assert mv("y^2 - x^3", "2*y^2") == 0
    assert mv("y^2 + x*y + x^3", "2*y^2 + x*y") == 1
    assert mv("y^2 + x*y", "2*y^2 + x*y") == 0
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert mixed_volume(square, square) == 2
    assert mixed_volume([(0, 0), (1, 0)], [(0, 0), (0, 1)]) == 1


def test_polygon_helpers():
    assert convex_hull([(0, 0), (2, 0), (1, 1), (0, 2), (1, 0)]) == [(0, 0), (2, 0), (0, 2)]
    assert twice_area([(0, 0), (2, 0), (0, 2)]) == 4
    assert sorted(minkowski_sum([(0, 0), (1, 0)], [(0, 0), (0, 1)])) == [(0, 0), (0, 1), (1, 0), (1, 1)]


@given(nonzero_polys(max_deg=4, max_terms=5))
def test_find_and_euler_agree(f):
    t = find_qh_type(f)
    e = euler_qh_test(f)
    if len(f.support()) >= 2:
        assert (t is None) == (e is None)
        if t is not None:
            assert e == t.as_tuple()
    else:
        assert t is not None and e is not None


def _euler_holds(f, t):
    lhs = f * t.w
    rhs = f.derivative("x").mul_monomial(1, 0) * t.alpha + f.derivative("y").mul_monomial(0, 1) * t.beta
    return lhs == rhs


qh_params = st.builds(
    QHParams,
    g_degree=st.integers(1, 3),
    squarefree=st.booleans(),
    k=st.integers(0, 2),
    ell=st.integers(0, 2),
    seed=st.integers(0, 10**6),
)


@given(qh_params)
def test_euler_identity_on_qh(params):
    f = generate_qh(params)
    ok, t = condition_A(f)
    assert ok and _euler_holds(f, t)


@given(nonzero_polys(max_deg=4), st.integers(-5, 5).filter(bool))
def test_scaling_invariance(f, c):
    assert find_qh_type(f * c) == find_qh_type(f)


@given(qh_params, st.integers(0, 3), st.integers(0, 3))
def test_monomial_covariance(params, a, b):
    f = generate_qh(params)
    t = find_qh_type(f)
    s = find_qh_type(f.mul_monomial(a, b))
    if t.unique:
        assert (s.alpha, s.beta) == (t.alpha, t.beta)
        assert s.w == t.w + t.alpha * a + t.beta * b


@given(qh_params)
def test_mixed_volume_vanishes_on_qh(params):
    f = generate_qh(params)
    fy = f.derivative("y").mul_monomial(0, 1)
    if not fy.is_zero():
        assert mixed_volume(newton_polytope(f), newton_polytope(fy)) == 0


def test_euler_warning_not_raised_over_q():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        euler_qh_test(P("y^2 - x^3"))
