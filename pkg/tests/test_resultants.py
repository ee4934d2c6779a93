import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import bivar_polys, y_polys
from qhdisc.polyring import GF, QQ, BivarPoly, FieldMismatchError, UniPoly, parse_poly
from qhdisc.resultants import (
    bareiss_det,
    condition_B,
    discriminant_y,
    is_monomial,
    resultant_y,
    sylvester_matrix,
)

P = parse_poly
U = lambda s: P(s).coefficients_in_y()[0]  # noqa: E731  univariate in x from text

ALGOS = ["bareiss", "interpolate"]


@pytest.mark.parametrize("algo", ALGOS)
def test_resultant_examples(algo):
    assert resultant_y(P("y^2 - x^3"), P("2*y"), algo) == U("-4*x^3")
    assert resultant_y(P("y - x"), P("y - x^2"), algo) == U("x - x^2")
    q, r = P("y^2 + x"), P("3*y - x^2 + 1")
    assert resultant_y(P("y - x") * q, P("y - x") * r, algo).is_zero()


def test_sylvester_layout():
    S = sylvester_matrix(P("y^2 - x^3"), P("2*y"))
    assert S.size == 3
    assert [[str(e) for e in row] for row in S.rows] == [["1", "0", "-x^3"], ["2", "0", "0"], ["0", "2", "0"]]


def test_bareiss_det_scalar():
    one = lambda c: UniPoly([c])  # noqa: E731
    rows = [[one(2), one(1), one(0)], [one(1), one(3), one(1)], [one(0), one(1), one(4)]]
    assert bareiss_det(rows) == one(18)


# values computed independently with a general-purpose CAS and frozen here
FROZEN = [
    ("y^3 + x*y + x^3", "27*x^6 + 4*x^3", "-27*x^6 - 4*x^3"),
    (
        "(y - x)*(y - 2*x^2)*(y + x + 1)",
        "-64*x^10 - 64*x^9 - 48*x^8 + 20*x^6 + 12*x^5 + 3*x^4 - 2*x^3 - x^2",
        "64*x^10 + 64*x^9 + 48*x^8 - 20*x^6 - 12*x^5 - 3*x^4 + 2*x^3 + x^2",
    ),
    (
        "3*y^4 - x*y^2 + x^5 + 2",
        "20736*x^15 - 3456*x^12 + 124416*x^10 + 144*x^9 - 13824*x^7 + 248832*x^5 + 288*x^4 - 13824*x^2 + 165888",
        "6912*x^15 - 1152*x^12 + 41472*x^10 + 48*x^9 - 4608*x^7 + 82944*x^5 + 96*x^4 - 4608*x^2 + 55296",
    ),
    ("x^2*y^3 - y + x/2", "27/4*x^8 - 4*x^4", "-27/4*x^6 + 4*x^2"),
]


@pytest.mark.parametrize("algo", ALGOS)
@pytest.mark.parametrize("f, res, disc", FROZEN)
def test_frozen_values(f, res, disc, algo):
    f = P(f)
    assert resultant_y(f, f.derivative("y"), algo) == U(res)
    assert discriminant_y(f, algo) == U(disc)


@pytest.mark.parametrize("algo", ALGOS)
def test_frozen_resultant_of_distinct_pair(algo):
    f, g = P("x^2*y^3 + 3*y - x"), P("(x + 1)*y^2 - 2*x^3*y + 5")
    expected = U("-8*x^12 + 60*x^8 + 30*x^7 + 24*x^6 - 11*x^5 + 122*x^4 - 147*x^3 - 104*x^2 + 90*x + 45")
    assert resultant_y(f, g, algo) == expected


def test_discriminant_examples():
    assert discriminant_y(P("y^2 - x^3")) == U("4*x^3")
    assert discriminant_y(P("y^2 - x^3 - x^2")) == U("4*x^3 + 4*x^2")
    assert discriminant_y(P("(y - x)*(y - x^2)")) == U("x^2*(x - 1)^2")
    assert discriminant_y(P("x*y + 1")) == U("1")
    with pytest.raises(ValueError):
        discriminant_y(P("x^2 + 1"))


def test_is_monomial_examples():
    assert is_monomial(U("4*x^3"))
    assert not is_monomial(U("4*x^2*(x + 1)"))
    assert is_monomial(U("1"))
    assert not is_monomial(UniPoly.zero())


def test_condition_B_examples():
    ok, w = condition_B(P("y^2 - x^3"))
    assert ok and (w.f0, w.fn, w.disc) == (U("-x^3"), U("1"), U("4*x^3"))
    ok, w = condition_B(P("y^2 - x^3 - x^2"))
    assert not ok and w.disc == U("4*x^2*(x + 1)")
    ok, w = condition_B(P("1 + x*y + x^2*y^2"))
    assert ok and w.fn == U("x^2") and w.disc == U("-3*x^2")
    assert condition_B(P("x^3"))[0] and not condition_B(P("x + 1"))[0]
    with pytest.raises(ValueError):
        condition_B(P("x*y^2 + y"))


def test_condition_B_mod_p():
    ok, w = condition_B(P("y^2 + x^3", field=GF(5)))
    assert ok and w.disc == P("x^3", field=GF(5)).coefficients_in_y()[0]
    ok, w = condition_B(P("y^2 + x^3", field=GF(2)))
    assert not ok and w.disc.is_zero() and "f_y vanishes identically" in w.flags


def test_discriminant_when_p_divides_degree():
    # deg_y = 3 over GF(3): the formal sizes keep Disc = 27*x^6 + ... consistent
    f = P("y^3 + x*y + x^3", field=GF(3))
    assert discriminant_y(f) == P("-x^3", field=GF(3)).coefficients_in_y()[0]


def test_resultant_errors():
    with pytest.raises(ValueError):
        resultant_y(P("x + 1"), P("x^2"))
    with pytest.raises(FieldMismatchError):
        resultant_y(P("y"), P("y", field=GF(3)))
    with pytest.raises(ValueError):
        resultant_y(P("y"), P("y"), "magic")


def test_small_field_falls_back_to_bareiss():
    F = GF(3)
    f = P("x^4*y^2 + x*y + 1", field=F)
    g = P("x^3*y^2 + 2*y + x^5", field=F)
    assert resultant_y(f, g) == resultant_y(f, g, "bareiss")
    with pytest.raises(ValueError):
        resultant_y(f, g, "interpolate")


# -- properties ------------------------------------------------------------------


@given(y_polys(max_deg=4, height=9), y_polys(max_deg=4, height=9))
def test_dual_algorithms_agree(f, g):
    assert resultant_y(f, g, "bareiss") == resultant_y(f, g, "interpolate")


@given(y_polys(max_deg=3, field=GF(101)), y_polys(max_deg=3, field=GF(101)))
def test_dual_algorithms_agree_mod_p(f, g):
    assert resultant_y(f, g, "bareiss") == resultant_y(f, g, "interpolate")


@given(y_polys(max_deg=3), y_polys(max_deg=3))
def test_resultant_reduces_mod_p(f, g):
    p = 10007
    assume(all(c.denominator % p for _, c in list(f.items()) + list(g.items()) if hasattr(c, "denominator")))
    r = resultant_y(f, g)
    m, n = f.deg_y, g.deg_y
    rp = resultant_y(f.reduce_mod(p), g.reduce_mod(p), degrees=(m, n))
    assert r.to_field(GF(p)) == rp


@given(y_polys(max_deg=2, max_terms=4), y_polys(max_deg=2, max_terms=4), y_polys(max_deg=2, max_terms=4))
def test_resultant_multiplicative(f, g, h):
    lhs = resultant_y(f * g, h)
    assert lhs == resultant_y(f, h) * resultant_y(g, h)


@given(y_polys(max_deg=3), y_polys(max_deg=3))
def test_resultant_antisymmetry(f, g):
    m, n = f.deg_y, g.deg_y
    sign = -1 if (m * n) % 2 else 1
    assert resultant_y(f, g) == resultant_y(g, f) * sign


uni = st.lists(st.integers(-4, 4), min_size=1, max_size=3)


@given(st.lists(uni, min_size=2, max_size=4, unique_by=tuple), uni.filter(any))
def test_product_formula(roots, c):
    bs = [UniPoly(r) for r in roots]
    assume(len(set(bs)) == len(bs))
    cc = UniPoly(c)
    x = BivarPoly.from_x_univariate
    y = BivarPoly.monomial(0, 1)
    f = x(cc)
    for b in bs:
        f = f * (y - x(b))
    n = len(bs)
    expected = cc ** (2 * n - 2)
    for i in range(n):
        for j in range(i + 1, n):
            expected = expected * (bs[i] - bs[j]) ** 2
    assert discriminant_y(f) == expected


@given(st.integers(-3, 3), st.integers(-3, 3), y_polys(max_deg=2, max_terms=3), bivar_polys(max_deg=2, max_terms=3))
def test_planted_common_zero(a, b, u, v):
    # f = (y - b)^2 u + (x - a)^2 v has f = f_y = 0 at (a, b)
    f = P(f"(y - {b})^2") * u + P(f"(x - {a})^2") * v
    assume(f.deg_y >= 1 and not f.coefficients_in_y()[-1].is_zero())
    fn = f.coefficients_in_y()[-1]
    assume(fn(a) != 0)
    assert discriminant_y(f)(a) == 0


def test_nodal_cubic_common_zero():
    f = P("y^2 - x^3 - x^2")
    assert f.eval_at(-1, 0) == 0 and f.derivative("y").eval_at(-1, 0) == 0
    assert discriminant_y(f)(-1) == 0
