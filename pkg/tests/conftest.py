import time

import pytest

from minhamming import datastore
from minhamming.solver import min_weight

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2} {status}  {e['title']}")


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    # compile the search kernels once so timed checks measure the search only
    min_weight(21)
    min_weight(2023)


@pytest.fixture(scope="session")
def sweep18(tmp_path_factory):
    """The 2^18 cache, built once per session; also records the sweep time."""
    t0 = time.perf_counter()
    cache = datastore.sweep(1, 1 << 18)
    elapsed = time.perf_counter() - t0
    path = tmp_path_factory.mktemp("cache") / "m18.txt"
    datastore.save(cache, path)
    return cache, path, elapsed


@pytest.fixture(scope="session")
def cache18(sweep18):
    return sweep18[0]


@pytest.fixture(scope="session")
def small_cache():
    return datastore.sweep(1, 1 << 14)
