from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

_acceptance = {}


def small_fractions(min_value=-20, max_value=20, max_denominator=20):
    return st.fractions(min_value=min_value, max_value=max_value, max_denominator=max_denominator)


def nonneg_fractions(max_value=20, max_denominator=20):
    return st.fractions(min_value=0, max_value=max_value, max_denominator=max_denominator)


def positive_fractions(max_value=20, max_denominator=20):
    return nonneg_fractions(max_value, max_denominator).filter(lambda x: x > 0)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status = "PASS" if _acceptance[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
