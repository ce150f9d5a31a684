from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from koornwinder.exactring import LaurentPoly

settings.register_profile("default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fraction = st.fractions(min_value=-5, max_value=5, max_denominator=7)
nonzero_fraction = small_fraction.filter(lambda x: x != 0)


def exponents(n: int, bound: int = 3):
    return st.tuples(*[st.integers(-bound, bound)] * n)


def laurent_polys(n: int = 2, bound: int = 3, max_terms: int = 5):
    return st.dictionaries(exponents(n, bound), small_fraction, max_size=max_terms).map(
        lambda d: LaurentPoly(n, d)
    )


def nonzero_points(n: int = 2):
    return st.tuples(*[nonzero_fraction] * n)


@pytest.fixture
def x1x2():
    return LaurentPoly.variable(2, 0), LaurentPoly.variable(2, 1)


__all__ = ["Fraction", "laurent_polys", "nonzero_points", "exponents", "small_fraction", "nonzero_fraction"]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[key])
