import time

import pytest

from squeeze import _pykernels, kernels

_acceptance: list[tuple[str, str, float]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, report.outcome.upper(), report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        mark = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}  ({duration:.2f}s)")


@pytest.fixture(params=["python", "cython"])
def backend(request):
    """Kernel module for each available backend."""
    if request.param == "python":
        return _pykernels
    if kernels._compiled is None:
        pytest.skip("compiled kernels not built")
    return kernels._compiled


@pytest.fixture
def timer():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
