import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from _acceptance import RESULTS


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        title, passed, detail = RESULTS[num]
        status = "PASS" if passed else "FAIL"
        line = f"criterion {num:2d} [{status}] {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
