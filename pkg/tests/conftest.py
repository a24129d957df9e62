from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from adhm.core import AdhmDatum
from adhm.ratmat import Matrix, make_rng

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(-3, 3)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=4, elements=small_ints):
    m = draw(st.integers(0, max_dim)) if rows is None else rows
    n = draw(st.integers(0, max_dim)) if cols is None else cols
    vals = draw(st.lists(elements, min_size=m * n, max_size=m * n))
    return Matrix.from_flat([Fraction(v) for v in vals], m, n)


@st.composite
def data(draw, max_r=3, max_c=3, elements=small_ints):
    r = draw(st.integers(0, max_r))
    c = draw(st.integers(0, max_c))
    return AdhmDatum(draw(matrices(c, c, elements=elements)), draw(matrices(c, c, elements=elements)),
                     draw(matrices(c, r, elements=elements)), draw(matrices(r, c, elements=elements)))


@pytest.fixture
def rng():
    return make_rng(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
