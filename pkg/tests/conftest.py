from __future__ import annotations

import pytest

_RESULTS: list[tuple[str, bool, str]] = []


class AcceptanceLog:
    def record(self, name: str, passed: bool, detail: str = "") -> bool:
        _RESULTS.append((name, passed, detail))
        print(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
        return passed


@pytest.fixture
def acceptance() -> AcceptanceLog:
    return AcceptanceLog()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _RESULTS:
        terminalreporter.line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
