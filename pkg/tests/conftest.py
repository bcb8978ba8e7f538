import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flashbch.code import make_code  # noqa: E402
from flashbch.galois import FieldSpec, build_field  # noqa: E402

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record an acceptance criterion's outcome for the end-of-run summary."""

    def record(number, passed, detail):
        _CRITERIA[number] = (bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        passed, detail = _CRITERIA[number]
        terminalreporter.write_line(
            f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def gf16():
    return build_field(FieldSpec(4, 0x13))


@pytest.fixture(scope="session")
def gf512():
    return build_field(FieldSpec(9, 0x211))


@pytest.fixture(scope="session")
def bch15_5(gf16):
    return make_code(gf16, 3)


@pytest.fixture(scope="session")
def bch15_7(gf16):
    return make_code(gf16, 2)


@pytest.fixture(scope="session")
def nor_t2(gf512):
    return make_code(gf512, 2, 256)


@pytest.fixture(scope="session")
def nor_t3(gf512):
    return make_code(gf512, 3, 256)
