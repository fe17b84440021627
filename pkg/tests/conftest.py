import pytest

# criterion number -> (title, passed), filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def record_criterion():
    def record(num: int, title: str, failures: list) -> None:
        ACCEPTANCE_RESULTS[num] = (title, not failures)
        assert not failures, f"criterion {num} failed: {failures[:5]}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {title}")
