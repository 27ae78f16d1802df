from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from symfeec.forms import Form, monomial_form
from symfeec.scalar import Cyclo

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
cyclos = st.builds(Cyclo, small_fracs, small_fracs, small_fracs, small_fracs)
nonzero_cyclos = cyclos.filter(bool)


@st.composite
def alternators(draw, n, k):
    return tuple(sorted(draw(st.lists(st.integers(0, n), min_size=k, max_size=k, unique=True))))


@st.composite
def multiindices(draw, n, deg):
    alpha = [0] * (n + 1)
    for _ in range(deg):
        alpha[draw(st.integers(0, n))] += 1
    return tuple(alpha)


@st.composite
def forms(draw, n, k, max_deg=2, max_terms=3):
    """Random (possibly inhomogeneous) k-forms on the n-simplex."""
    out = Form._wrap(n, k, {})
    for _ in range(draw(st.integers(1, max_terms))):
        deg = draw(st.integers(0, max_deg))
        c = draw(st.fractions(min_value=-3, max_value=3, max_denominator=3))
        out = out + monomial_form(n, draw(multiindices(n, deg)), draw(alternators(n, k)), c)
    return out


@pytest.fixture
def half():
    return Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[number])
