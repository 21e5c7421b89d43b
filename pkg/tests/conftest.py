import json
import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

_criteria: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def fixture_counts():
    return json.loads((HERE / "fixtures" / "privileged_counts.json").read_text())


@pytest.fixture(scope="session")
def fixture_gp():
    return json.loads((HERE / "fixtures" / "gp_values.json").read_text())


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion, then assert it."""

    def check(label: str, ok: bool, detail: str = ""):
        _criteria[label] = (bool(ok), detail)
        print(f"{label}: {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, f"{label}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[1].rstrip(":"))):
        ok, detail = _criteria[label]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
