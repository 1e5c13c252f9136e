import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

CRITERIA = {}
OUTCOMES = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            n, title = mark.args
            CRITERIA[n] = title
            OUTCOMES.setdefault(n, {})[item.nodeid] = None


def pytest_runtest_logreport(report):
    for n, tests in OUTCOMES.items():
        if report.nodeid in tests:
            if report.failed:
                tests[report.nodeid] = False
            elif report.when == "call" and tests[report.nodeid] is None:
                tests[report.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = list(OUTCOMES[n].values())
        if any(r is False for r in results):
            verdict = "FAIL"
        elif results and all(r is True for r in results):
            verdict = "PASS"
        else:
            verdict = "INCOMPLETE"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {CRITERIA[n]} ({len(results)} tests)")


@pytest.fixture(params=[True, False], ids=["cython", "python"])
def backend(request):
    from pealab import kernels

    name = "cython" if request.param else "python"
    if name not in kernels.BACKENDS:
        pytest.skip("compiled kernels not built")
    prev = kernels.use(name)
    yield name
    kernels.use(prev)
