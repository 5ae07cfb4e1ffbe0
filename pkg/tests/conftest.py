import pytest

_results: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    label, title = marker.args
    _results.append((label, "PASS" if report.passed else "FAIL", title))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, title in sorted(_results):
        terminalreporter.write_line(f"{status} criterion {label}: {title}")
