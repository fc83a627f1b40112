import pytest

ACCEPTANCE_RESULTS = []


@pytest.fixture
def acceptance_report():
    def record(number, name, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, name, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {name}: {detail}")
