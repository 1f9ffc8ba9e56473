import pytest

from palprim.words import parse_word

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, text = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _RESULTS.setdefault((n, text), []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for (n, text), outcomes in sorted(_RESULTS.items()):
        status = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {text}")


@pytest.fixture
def w():
    """Shorthand parser for rank-2 words."""
    return parse_word
