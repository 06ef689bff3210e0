import re

import pytest

LABELS = {
    1: "gen --base 10 reproduces the decimal table",
    2: "insertion reproduces transversal, added row and column",
    3: "comparison table columns (4737, irregular, EAN3, Luhn3)",
    4: "sequence table phonetic rows, totals 16/9, shared 999, cyclic 9",
    5: "block-design phonetic witnesses and derived cyclic count",
    6: "base-26 table and family of 24",
    7: "27 disjoint CRT codes, phonetic 0, permutation 0",
    8: "mod-37 code sizes and no phonetic pairs",
    9: "grouped counts and base-36 reports",
    10: "small alphabet rows hold as claimed",
    11: "theorem-level properties",
}

# criterion number -> list of (passed, detail)
OUTCOMES = {}
# failure details supplied by the tests themselves, keyed by node id
DETAILS = {}


def note_failure(nodeid, detail):
    DETAILS[nodeid] = detail


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = re.match(r"test_(\d\d)", item.name)
    if not m or "test_acceptance" not in item.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        number = int(m.group(1))
        detail = ""
        if report.failed:
            detail = DETAILS.get(item.nodeid) or str(report.longrepr).strip().split("\n")[-1]
        OUTCOMES.setdefault(number, []).append((report.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(LABELS):
        entries = OUTCOMES.get(number)
        if not entries:
            continue
        ok = all(p for p, _ in entries)
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {LABELS[number]}"
        failed = [d for p, d in entries if not p]
        if failed:
            line += "  -- " + "; ".join(failed)
        terminalreporter.write_line(line)
