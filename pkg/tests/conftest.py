import random

import pytest

from rootspigot import oracle
from rootspigot.groups import parse_input


def oracle_digits(literal: str, r: int, n: int) -> list[int]:
    """Digits the machines must produce for ``literal``, via the floor-root oracle."""
    groups = parse_input(literal, r)
    int_digits, frac_digits = groups.digits()
    return [int(c) for c in oracle.root_digit_string(int_digits, frac_digits, r, n)]


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_RESULTS: dict[str, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    label = marker.args[0]
    ACCEPTANCE_RESULTS[label] = ("PASS" if call.excinfo is None else "FAIL", item.name)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0][2:])):
        status, name = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"{status}  {label}  ({name})")
