import pytest
from hypothesis import settings
from hypothesis import strategies as st

from biquat import Biquaternion

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

unit_floats = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)
small_ints = st.integers(-5, 5).map(float)


@st.composite
def biquaternions(draw, elements=unit_floats):
    r = [draw(elements) for _ in range(8)]
    return Biquaternion.from_reals(*r)


@pytest.fixture
def criterion(request):
    """Tag an acceptance test with its criterion number and title."""

    def tag(number, title):
        request.node.user_properties.append(("criterion", f"{number:>2}. {title}"))

    return tag


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _acceptance.append((value, report.passed))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    results = {}
    for title, passed in _acceptance:
        results[title] = results.get(title, True) and passed
    terminalreporter.section("acceptance criteria")
    for title in sorted(results, key=lambda t: int(t.split(".")[0])):
        terminalreporter.write_line(f"{'PASS' if results[title] else 'FAIL'}  criterion {title}")
