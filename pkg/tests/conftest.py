"""Shared pytest plumbing: visible acceptance-criterion result lines.

The acceptance tests record one (number, label, outcome) entry each; the
terminal-summary hook prints them after the run so the PASS/FAIL line per
criterion survives output capture.
"""

ACCEPTANCE_RESULTS: list[tuple[int, str, str]] = []


def record_criterion(number: int, label: str, outcome: str) -> None:
    ACCEPTANCE_RESULTS.append((number, label, outcome))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, label, outcome in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"[criterion {number}] {label}: {outcome}")
