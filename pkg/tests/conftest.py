import pytest

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or (rep.when != "call" and rep.passed):
        return
    n, text = mark.args
    if rep.when == "call" or n not in _criteria:
        _criteria[n] = ("PASS" if rep.passed else "FAIL", text, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, text, secs = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {status} ({secs:.1f} s) {text}")
