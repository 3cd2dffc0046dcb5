import pytest

from coringlab.exact import QQ, Mat
from coringlab.extension import RingExtension
from coringlab.hunt import algebra_pool
from coringlab.zoo import fixture


@pytest.fixture(scope="session")
def pool():
    return algebra_pool(QQ)


def self_extension(a):
    """``A = A`` with E = id."""
    ident = Mat.identity(a.field, a.dim)
    return RingExtension(a, a, ident, ident, name="id")


@pytest.fixture
def diag2():
    return fixture("DIAG2")


@pytest.fixture
def gauss():
    return fixture("GAUSS")


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    lines = test_acceptance.report_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
