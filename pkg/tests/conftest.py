"""Shared pytest plumbing.

Acceptance tests append one status line per criterion; the hook prints
them in a dedicated section at the end of the run so they appear in the
terminal output regardless of capture settings.
"""

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
