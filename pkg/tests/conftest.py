from __future__ import annotations

import pytest

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def record_criterion():
    """Record the outcome of one acceptance criterion for the summary table."""

    def record(number: int, description: str, passed: bool) -> None:
        ACCEPTANCE_RESULTS[number] = (description, passed)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        description, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {description}")
