from __future__ import annotations

import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        item.config._criteria = getattr(item.config, "_criteria", [])
        item.config._criteria.append((marker.args[0], report.passed))


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok in results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {label}")
