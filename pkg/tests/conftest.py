"""Shared pytest wiring: per-criterion verdict lines in the terminal summary."""

import pytest

_verdicts = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(number, name): labels one acceptance criterion; each gets a"
        " PASS/FAIL line in the terminal summary",
    )


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            _verdicts[mark.kwargs["number"]] = (mark.kwargs["name"], report.outcome)
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_verdicts):
        name, outcome = _verdicts[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number} ({name}): {verdict}")
