"""Shared fixtures and the acceptance-criterion summary hook."""

from __future__ import annotations

import re
from collections import defaultdict

import pytest

from polyspace import enumerate_genetic_codes


@pytest.fixture(scope="session")
def enum5():
    return enumerate_genetic_codes(5)


@pytest.fixture(scope="session")
def enum6():
    return enumerate_genetic_codes(6)


@pytest.fixture(scope="session")
def enum7():
    return enumerate_genetic_codes(7)


@pytest.fixture(scope="session")
def enum8():
    return enumerate_genetic_codes(8)


_CRITERION = re.compile(r"test_criterion_?(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    outcomes: dict[str, set[str]] = defaultdict(set)
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            match = _CRITERION.search(getattr(report, "nodeid", ""))
            if match:
                outcomes[match.group(1)].add(status)
    if not outcomes:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(outcomes, key=int):
        verdict = "PASS" if outcomes[num] == {"passed"} else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}")
