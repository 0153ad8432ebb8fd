import os
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidalg.freealg import Polynomial
from braidalg.scalars import QQ, Field

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F5 = Field(5)
F7 = Field(7)

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_fractions = small_fractions.filter(bool)


def words(max_len=4, nvars=2):
    return st.lists(st.integers(1, nvars), max_size=max_len).map(tuple)


def polys(field=QQ, nvars=2, max_len=3, max_terms=4):
    coeffs = small_fractions if field is QQ else st.integers(0, field.p - 1)
    return st.dictionaries(words(max_len, nvars), coeffs, max_size=max_terms).map(
        lambda d: Polynomial(d, nvars, field)
    )


def nonzero_scalars(field):
    if field.p is None:
        return nonzero_fractions
    return st.integers(1, field.p - 1).map(field)


HALF = Fraction(1, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
