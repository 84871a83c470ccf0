import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> "PASS" / "FAIL", filled in by test_acceptance
CRITERIA: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        terminalreporter.write_line(f"criterion {k}: {CRITERIA[k]}")
