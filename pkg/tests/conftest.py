import pytest

from arshort import artrans as at
from arshort import corpus
from arshort import repcat as rc

# Filled in by test_acceptance.py: criterion number -> (passed, detail)
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture(scope="session")
def a2():
    return corpus.linear_algebra(2)


@pytest.fixture(scope="session")
def a3():
    return corpus.linear_algebra(3)


@pytest.fixture(scope="session")
def a4():
    return corpus.linear_algebra(4)


@pytest.fixture(scope="session")
def d4():
    return corpus.star_algebra(3)


@pytest.fixture(scope="session")
def star4():
    return corpus.star_algebra(4)


@pytest.fixture(scope="session")
def d4_fragment(d4):
    return at.knit(d4)


@pytest.fixture(scope="session")
def a3_fragment(a3):
    return at.knit(a3)


@pytest.fixture(scope="session")
def a2_pieces(a2):
    # linear A2 is 1 -> 2 here, so the positive example S(1) + S(0) reads S(1) + S(2)
    return {
        "P1": rc.projective(a2, "1"),
        "S1": rc.simple(a2, "1"),
        "S2": rc.simple(a2, "2"),
    }
