import pytest

CRITERIA = {
    1: "exact q-identity suite",
    2: "q-binomial theorem to order 20",
    3: "structural lemmas Q-QCP and Q-REM",
    4: "classical suite",
    5: "connections",
    6: "proof-level properties",
    7: "limit suite",
    8: "failure detection",
    9: "determinism",
}

_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def acceptance():
    """Record the outcome of one acceptance criterion."""
    def record(number: int, ok: bool, detail: str) -> None:
        _RESULTS[number] = (ok, detail)
        print(f"criterion {number} ({CRITERIA[number]}): {'PASS' if ok else 'FAIL'} - {detail}")
    return record


def pytest_terminal_summary(terminalreporter):
    seen = {item.nodeid.split("::")[0] for item in terminalreporter.stats.get("passed", [])}
    seen |= {r.nodeid.split("::")[0] for r in terminalreporter.stats.get("failed", [])}
    if not any(path.endswith("test_acceptance.py") for path in seen):
        return
    terminalreporter.section("acceptance criteria")
    for number, title in CRITERIA.items():
        ok, detail = _RESULTS.get(number, (False, "not reached"))
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
