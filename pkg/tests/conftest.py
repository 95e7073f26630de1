from __future__ import annotations

from collections import OrderedDict

import pytest
from hypothesis import settings

# exact arithmetic makes per-example timing uneven
settings.register_profile("pointedhopf", deadline=None)
settings.load_profile("pointedhopf")

# criterion number -> (title, list of (test id, outcome))
_RESULTS: "OrderedDict[int, tuple[str, list[tuple[str, str]]]]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion covered by a test")


def pytest_collection_modifyitems(session, config, items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            n, title = m.args
            _RESULTS.setdefault(n, (title, []))


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    m = report.keywords.get("criterion")
    if m is None:
        return
    for n, (title, rows) in _RESULTS.items():
        if f"criterion{n}_" in report.nodeid:
            rows.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        title, rows = _RESULTS[n]
        if not rows:
            status = "NOT RUN"
        elif all(o == "passed" for _, o in rows):
            status = "PASS"
        else:
            status = "FAIL"
        failed = [t for t, o in rows if o != "passed"]
        extra = f"  (failing: {', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {n}: {status}  {title}{extra}")


@pytest.fixture(scope="session")
def data_dir():
    from pathlib import Path

    return Path(__file__).resolve().parent.parent / "data"
