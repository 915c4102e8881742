from __future__ import annotations

import pytest

# Lines recorded by the acceptance tests, reprinted after the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(result):
        line = result.line()
        ACCEPTANCE_LINES.append(line)
        print(line)
        return result

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
