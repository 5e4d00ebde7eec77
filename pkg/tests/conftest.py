import time

import pytest

from qpoincare.engine import orient
from qpoincare.presentation import build_defining_relations
from qpoincare.suite import RunConfig, default_checks, run_checks

CRITERIA: dict = {}


@pytest.fixture(scope="session")
def defining():
    return build_defining_relations()


@pytest.fixture(scope="session")
def system(defining):
    return orient(defining.relations)


class Reports(dict):
    elapsed = 0.0


def _run_all(mode):
    t = time.perf_counter()
    out = Reports((r.name, r) for r in run_checks(default_checks(), RunConfig(mode=mode, samples=3)))
    out.elapsed = time.perf_counter() - t
    return out


@pytest.fixture(scope="session")
def exact_reports():
    """Every default check, exact mode, run once per session."""
    return _run_all("exact")


@pytest.fixture(scope="session")
def sampled_reports():
    return _run_all("sampled")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.failed):
        mark = CRITERIA.get(report.nodeid)
        if mark is not None:
            mark["outcome"] = "PASS" if report.passed else "FAIL"


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            CRITERIA[item.nodeid] = {"n": m.args[0], "text": m.args[1], "outcome": "NOT RUN"}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(CRITERIA.values(), key=lambda c: c["n"]):
        terminalreporter.write_line(f"criterion {c['n']:>2}: {c['outcome']:<7} {c['text']}")
