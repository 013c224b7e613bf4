import os

import pytest

RUN_SLOW = os.environ.get("ALTTANGLES_SLOW") == "1"

_acceptance: dict[int, list[tuple[str, str]]] = {}


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip = pytest.mark.skip(reason="opt-in: set ALTTANGLES_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(report.outcome, "SKIP")
        _acceptance.setdefault(marker.args[0], []).append((item.name, verdict))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_acceptance):
        runs = _acceptance[k]
        verdicts = {v for _, v in runs if v != "SKIP"}
        overall = "FAIL" if "FAIL" in verdicts else ("PASS" if verdicts else "SKIP")
        names = ", ".join(f"{name}={v}" for name, v in runs)
        terminalreporter.write_line(f"criterion {k}: {overall}  [{names}]")
