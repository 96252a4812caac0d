import pytest

# filled by tests/test_acceptance.py, one (label, ok, seconds) entry per criterion
ACCEPTANCE_RESULTS: list[tuple[str, bool, float]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, secs in sorted(ACCEPTANCE_RESULTS, key=lambda r: int(r[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({secs:.2f}s)")


@pytest.fixture
def acceptance_results():
    return ACCEPTANCE_RESULTS
