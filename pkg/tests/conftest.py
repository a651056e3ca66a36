"""Collects acceptance outcomes and prints one line per criterion."""

import re

_CRITERIA: dict[int, list[tuple[str, bool, str]]] = {}
_NAME = re.compile(r"test_criterion_(\d+)_")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = _NAME.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        reason = ""
        if report.failed:
            msg = str(report.longrepr.reprcrash.message) if hasattr(
                report.longrepr, "reprcrash") else str(report.longrepr)
            reason = msg.splitlines()[0][:120]
        _CRITERIA.setdefault(int(m.group(1)), []).append(
            (report.nodeid.split("::")[-1], report.passed, reason))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        parts = _CRITERIA[num]
        ok = all(p for _, p, _ in parts)
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}")
        if not ok:
            for name, passed, reason in parts:
                tr.write_line(f"    {name}: {'PASS' if passed else 'FAIL'} {reason}")
