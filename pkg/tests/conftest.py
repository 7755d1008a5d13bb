import pytest
from hypothesis import settings

# exact big-denominator chains make per-example timing noisy
settings.register_profile("default", deadline=None)
settings.load_profile("default")

_ACCEPTANCE = []


class AcceptanceReport:
    def record(self, label: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((label, ok, detail))


@pytest.fixture
def acceptance():
    return AcceptanceReport()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
