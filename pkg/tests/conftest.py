import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(number, name, passed, detail=""):
        status = "SKIP" if passed is None else ("PASS" if passed else "FAIL")
        _ACCEPTANCE_LINES.append((number, f"[{number:>2}] {status}  {name}  {detail}".rstrip()))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE_LINES, key=lambda t: t[0]):
        terminalreporter.write_line(line)
