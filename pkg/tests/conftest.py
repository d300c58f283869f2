import pytest

_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        measured = dict(item.user_properties).get("measured", "")
        _RESULTS.append((marker.args[0], "PASS" if rep.passed else "FAIL", measured))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, measured in _RESULTS:
        tail = f"  [{measured}]" if measured else ""
        terminalreporter.write_line(f"{status}  {label}{tail}")
