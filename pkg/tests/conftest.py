"""Pytest wiring: print one summary line per acceptance criterion."""

from __future__ import annotations

# test_acceptance.py records "CRITERION k ...: PASS/FAIL" lines here; the
# terminal-summary hook prints them even though pytest captures stdout.
ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[key])
