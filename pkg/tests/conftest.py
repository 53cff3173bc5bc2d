"""Prints one pass/fail line per acceptance criterion after the run."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion" in nodeid and (
                report.when == "call" or outcome == "error"
            ):
                name = nodeid.split("::")[-1]
                results.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if results:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(results):
            terminalreporter.write_line(f"{status}  {name}")
