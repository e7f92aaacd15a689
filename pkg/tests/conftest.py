import pytest

from sumset_growth import build_lexideal, certify, deform
from sumset_growth.monomial import Monomial

EXAMPLE_SEQ = (1, 5, 13, 25, 42, 63)
EXAMPLE_G = ["x1^2", "x1*x2", "x1*x3^2", "x1*x3*x4^3", "x1*x3*x4^2*x5"]
EXAMPLE_G_HAT = [
    "x1^2 - x1*x5",
    "x1*x2 - x2*x5",
    "x1*x3^2 - x3^2*x5",
    "x1*x3*x4^3 - x3*x4^3*x5",
    "x1*x3*x4^2*x5 - x3*x4^2*x5^2",
]


def mono(text, n=5):
    return Monomial.parse(text, n)


@pytest.fixture(scope="session")
def example_L():
    return build_lexideal(EXAMPLE_SEQ)


@pytest.fixture(scope="session")
def example_basis(example_L):
    return certify(deform(example_L))


_criteria = {}


@pytest.fixture
def criterion(request):
    """Tag an acceptance test with its criterion number and summary."""

    def tag(number, summary):
        request.node.user_properties.append(("criterion", (number, summary)))

    return tag


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    for key, value in report.user_properties:
        if key == "criterion":
            number, summary = value
            _criteria[number] = (summary, report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        summary, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {summary}")
