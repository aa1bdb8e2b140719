_acceptance_outcomes: dict[str, bool] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_outcomes[name] = report.passed


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        status = "PASS" if _acceptance_outcomes[name] else "FAIL"
        terminalreporter.write_line(f"{name}: {status}")
