import itertools
import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def all_bits(n):
    return ["".join(bits) for bits in itertools.product("01", repeat=n)]


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    acceptance = __import__("sys").modules.get("test_acceptance")
    verdicts = getattr(acceptance, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
