import re
from collections import defaultdict

_criteria: dict[str, list[str]] = defaultdict(list)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", report.nodeid)
    if m:
        _criteria[m.group(1)].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        outcomes = _criteria[key]
        ok = all(o == "passed" for o in outcomes)
        terminalreporter.write_line(
            f"criterion {key}: {'PASS' if ok else 'FAIL'} ({outcomes.count('passed')}/{len(outcomes)} checks)"
        )
