import time
from collections import defaultdict

import pytest

_RESULTS: dict[int, list[tuple[str, str, float]]] = defaultdict(list)

CRITERIA = {
    1: "stabilizer criterion suite",
    2: "Schouten cross-oracle",
    3: "Minkowski and Lorentz fundamental fields",
    4: "classical Yang-Baxter",
    5: "phase-space Jacobi",
    6: "s_lambda uniqueness",
    7: "reality suite",
    8: "SU(n) suite",
    9: "lagrangian section, projection, determinant",
    10: "CLI determinism",
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _RESULTS[mark.args[0]].append((item.name, rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_RESULTS):
        rows = _RESULTS[k]
        bad = [name for name, outcome, _ in rows if outcome != "passed"]
        total = sum(d for _, _, d in rows)
        status = "PASS" if not bad else "FAIL"
        line = f"criterion {k:2d} {status}  {CRITERIA.get(k, '')} ({len(rows)} tests, {total:.2f} s)"
        if bad:
            line += "  failing: " + ", ".join(bad)
        tr.write_line(line)


@pytest.fixture
def stopwatch():
    t0 = time.perf_counter()
    return lambda: time.perf_counter() - t0
