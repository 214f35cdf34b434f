"""Pytest configuration and shared fixtures."""

import pytest
from fractions import Fraction

from josephideal.models import ReportDocument, CaseReport, CheckResult, SuiteConfig, SuiteReport, SuperMatrix
from josephideal.services import sl_algebra
from josephideal.services.sampling import make_rng


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the long exact checks marked slow",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def algebra41():
    """sl(4|1), the smallest case with m - n > 2.

    Returns:
        SlAlgebra instance
    """
    return sl_algebra(4, 1)


@pytest.fixture
def algebra21():
    """sl(2|1), small enough for exhaustive loops.

    Returns:
        SlAlgebra instance
    """
    return sl_algebra(2, 1)


@pytest.fixture
def rng():
    """Seeded generator so sampled elements are reproducible."""
    return make_rng(1234)


@pytest.fixture
def e12() -> SuperMatrix:
    """Even root vector E_12 of gl(4|1)."""
    return SuperMatrix.unit(4, 1, 1, 2)


@pytest.fixture
def e21() -> SuperMatrix:
    return SuperMatrix.unit(4, 1, 2, 1)


@pytest.fixture
def e15() -> SuperMatrix:
    """Odd root vector E_15 of gl(4|1)."""
    return SuperMatrix.unit(4, 1, 1, 5)


@pytest.fixture
def small_config() -> SuiteConfig:
    """Cheap prelim run on sl(2|1) with few samples.

    Returns:
        SuiteConfig instance
    """
    return SuiteConfig(cases=[(2, 1)], suites=["prelim"], samples=3)


@pytest.fixture
def sample_document() -> ReportDocument:
    """A report with one passing and one failing check.

    Returns:
        ReportDocument with a single case
    """
    suite = SuiteReport(
        "prelim",
        checks=[
            CheckResult("rho_from_roots", True, Fraction(1, 2), Fraction(1, 2)),
            CheckResult("casimir_on_V", False, Fraction(8, 3), Fraction(3), detail="off by 1/3"),
        ],
    )
    return ReportDocument(cases=[CaseReport(4, 1, [suite])])
