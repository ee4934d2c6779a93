import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qhdisc.polyring import GF, QQ, BivarPoly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def bivar_polys(draw, max_deg=3, height=6, field=QQ, min_terms=0, max_terms=6):
    """Random sparse polynomials with deg_x, deg_y <= max_deg."""
    keys = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg))
    coeffs = st.integers(-height, height).filter(bool)
    terms = draw(st.dictionaries(keys, coeffs, min_size=min_terms, max_size=max_terms))
    return BivarPoly(terms, field)


def nonzero_polys(**kw):
    return bivar_polys(min_terms=1, **kw).filter(lambda f: not f.is_zero())


def y_polys(**kw):
    """Nonzero polynomials with positive y-degree."""
    return nonzero_polys(**kw).filter(lambda f: f.deg_y >= 1)


F7 = GF(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
