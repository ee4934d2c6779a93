from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from branch_fixtures import BRANCH_FIXTURES
from conftest import nonzero_polys
from qhdisc.branches import (
    NonSimpleSeedError,
    TruncatedSeries,
    UnresolvedLimitError,
    branch_exponents_at_origin,
    chain_rule_residual,
    default_order,
    edge_polynomial,
    h_limit_along,
    lift_branch,
    newton_polygon_edges,
    puiseux_branches,
    ramify,
    rational_roots,
)
from qhdisc.polyring import QQ, UniPoly, parse_poly

P = parse_poly
T = lambda s: P(s, var_names=("t", "y"))  # noqa: E731


def series(*coeffs, N=1):
    return TruncatedSeries(tuple(QQ(c) for c in coeffs), QQ, N)


def test_ramify_examples():
    assert ramify(P("y^2 - x^3"), 2) == T("y^2 - t^6")
    assert ramify(P("y^2 - x^3"), 1) == T("y^2 - t^3")
    assert ramify(P("y - x"), 3) == T("y - t^3")
    with pytest.raises(ValueError):
        ramify(P("y"), 0)


def test_exponent_examples():
    assert branch_exponents_at_origin(P("y^2 - x^3")) == [Fraction(3, 2)] * 2
    assert branch_exponents_at_origin(P("y - x - x^2")) == [1]
    assert branch_exponents_at_origin(P("y^2 - x^2 - x^3")) == [1, 1]
    with pytest.raises(ValueError):
        branch_exponents_at_origin(P("y^2 - x^3 + 1"))


def test_polygon_edges():
    (e,) = newton_polygon_edges(P("y^2 - x^3 + x^2*y^2"))
    assert (e.start, e.end, e.slope, e.exponent, e.height) == ((0, 2), (3, 0), Fraction(-2, 3), Fraction(3, 2), 2)
    edges = newton_polygon_edges(P("(y - x)*(y - x^2)"))
    assert [e.exponent for e in edges] == [1, 2]


def test_lift_examples():
    s = lift_branch(P("y - x - x^2"), (1, 1), 5)
    assert s.coeffs == (1, 1, 0, 0, 0)
    s = lift_branch(P("y^2 - x^2 - x^3"), (1, 1), 4)
    assert s.coeffs == (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16))
    s = lift_branch(ramify(P("y^2 - x^3"), 2), (3, 1), 5)
    assert s.coeffs == (0, 0, 1, 0, 0)


def test_lift_matches_binomial_series():
    # x*sqrt(1 + x) = sum binom(1/2, k) x^(k+1)
    K = 12
    s = lift_branch(P("y^2 - x^2 - x^3"), (1, 1), K)
    b, expected = Fraction(1), []
    for k in range(K):
        expected.append(b)
        b = b * (Fraction(1, 2) - k) / (k + 1)
    assert list(s.coeffs) == expected


def test_lift_errors():
    f = P("y^2 - x^2 - x^3")
    with pytest.raises(ValueError):
        lift_branch(f, (1, 2), 4)  # not a root
    with pytest.raises(NonSimpleSeedError):
        lift_branch(P("(y - x)^2 - x^3"), (1, 1), 4)
    with pytest.raises(ValueError):
        lift_branch(f, (1, 0.5), 4)
    with pytest.raises(ValueError):
        lift_branch(f, (Fraction(3, 2), 1), 4)


def test_limit_examples():
    assert h_limit_along(P("y - x - x^2"), series(1, 1)) == -1
    assert h_limit_along(T("y^2 - t^6"), series(0, 0, 1, 0, 0)) == Fraction(-1, 3)
    s = lift_branch(P("y^2 - x^2 - x^3"), (1, 1), 4)
    assert h_limit_along(P("y^2 - x^2 - x^3"), s) == -1


def test_ramification_covariance():
    f = P("y^2 - x^3")
    s = lift_branch(ramify(f, 2), (3, 1), 5)
    ramified = h_limit_along(ramify(f, 2), s)
    original = h_limit_along(f, TruncatedSeries(s.coeffs, QQ, 2))
    assert (ramified, original) == (Fraction(-1, 3), Fraction(-2, 3))
    assert ramified == original / 2


def test_limit_errors():
    with pytest.raises(UnresolvedLimitError):
        h_limit_along(T("y^2 - t^6"), series(0, 0, 1))
    with pytest.raises(ValueError):
        h_limit_along(P("y - x - x^2"), series(1, 2))


def test_rational_roots():
    assert rational_roots(UniPoly([-1, 0, 1])) == [-1, 1]
    assert rational_roots(UniPoly([1, 0, 1])) == []
    assert rational_roots(UniPoly([1, -3, 2])) == [Fraction(1, 2), 1]
    assert rational_roots(UniPoly([6, -5, 1])) == [2, 3]


def test_edge_polynomial():
    mu, phi = edge_polynomial(P("y^2 - x^2 - x^3"), 1)
    assert mu == 2 and phi == UniPoly([-1, 0, 1], var="z")


@pytest.mark.parametrize("text, N, field", BRANCH_FIXTURES, ids=[f"{t} /{n} {F!r}" for t, n, F in BRANCH_FIXTURES])
def test_branch_fixture(text, N, field):
    f = P(text, field=field)
    reports = [r for r in puiseux_branches(f, N) if r.series is not None]
    assert reports
    for r in reports:
        assert r.limit == r.expected != 0
        assert r.residual_ok


@given(nonzero_polys(max_deg=4, max_terms=6), st.integers(1, 4), st.integers(1, 4))
def test_multiplicity_is_polygon_height(g, k, l):
    # through the origin, divisible by neither x nor y
    f = g - g.coeff(0, 0) + P(f"y^{k} + x^{l}")
    assume(f.coeff(0, k) != 0 and f.coeff(l, 0) != 0)
    assert len(branch_exponents_at_origin(f)) == f.coefficients_in_x()[0].trailing_degree()


def test_chain_rule_residual_vanishes():
    f = P("y^3 - x^6 - x^7")
    s = lift_branch(f, (2, 1), default_order(f))
    assert not any(chain_rule_residual(f, s)[: s.order - 1])
