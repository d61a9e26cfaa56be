import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from helpers import ACCEPTANCE  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")

from hypothesis import settings  # noqa: E402

# exact algebra has heavy-tailed runtimes; deadlines would only add flakiness
settings.register_profile("mixedsum", deadline=None, derandomize=True)
settings.load_profile("mixedsum")
