"""Shared pytest wiring.

The acceptance tests register one line per criterion in ACCEPTANCE_LINES;
the terminal-summary hook below prints them after the run so the criterion
verdicts are visible without -s.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
