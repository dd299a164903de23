import pytest

# acceptance lines collected by tests/test_acceptance.py, printed after the run
CRITERIA_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    def record(number: int, verdict: bool | None, detail: str) -> None:
        label = {True: "PASS", False: "FAIL", None: "REPORT"}[verdict]
        line = f"{label} criterion {number}: {detail}"
        CRITERIA_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA_LINES):
        terminalreporter.write_line(CRITERIA_LINES[number])
