import os

import pytest

from rlcm.hull import InverseHull
from rlcm.instances import (build_self_similar, free_abelian_monoid, free_monoid,
                            modified_odometer, odometer, parse_spec)

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def load_spec(name, validate=True):
    with open(fixture_path(name), encoding="utf-8") as fh:
        return build_self_similar(parse_spec(fh.read(), name=name), validate=validate)


@pytest.fixture(scope="session")
def free01():
    return free_monoid("01")


@pytest.fixture(scope="session")
def odo():
    return odometer()


@pytest.fixture(scope="session")
def mododo():
    return modified_odometer()


@pytest.fixture(scope="session")
def nat2():
    return free_abelian_monoid(2)


@pytest.fixture(scope="session")
def non_faithful():
    return load_spec("non_faithful.spec")


@pytest.fixture(scope="session")
def trivial_action():
    return load_spec("trivial_action.spec")


@pytest.fixture(scope="session")
def corrupted():
    return load_spec("corrupted.spec", validate=False)


@pytest.fixture(scope="session")
def hull_free(free01):
    return InverseHull(free01)


@pytest.fixture(scope="session")
def hull_odo(odo):
    return InverseHull(odo)


@pytest.fixture(scope="session")
def hull_mod(mododo):
    return InverseHull(mododo)


# acceptance criteria report one line each at the end of the run
ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_line(request):
    def record(number, title, passed, detail=""):
        line = f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES[number] = line
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
