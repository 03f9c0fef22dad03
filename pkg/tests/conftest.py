"""Pytest hooks: print a PASS/FAIL line per acceptance criterion after the run."""

_acceptance_reports = []


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.skipped):
        _acceptance_reports.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_reports:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for report in _acceptance_reports:
        name = report.nodeid.split("::")[-1]
        if report.passed:
            status = "PASS"
        elif report.skipped:
            status = "SKIP"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
