import os

import pytest

from liecohom.algebra import AlgebraSpec, load_algebra_file

DATA = os.path.join(os.path.dirname(__file__), "data")

# criterion number -> [(passed, detail)], merged into one line per criterion
CRITERIA = {}


def record(number, passed, detail=""):
    CRITERIA.setdefault(number, []).append((passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        parts = CRITERIA[number]
        ok = all(p for p, _ in parts)
        detail = "; ".join(d for _, d in parts if d)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())


@pytest.fixture(scope="session")
def h20():
    return AlgebraSpec("H", 1, 0)


@pytest.fixture(scope="session")
def po20():
    return AlgebraSpec("Po", 1, 0)


@pytest.fixture(scope="session")
def sl2():
    return load_algebra_file(os.path.join(DATA, "sl2.json"))


@pytest.fixture(scope="session")
def osp12():
    return load_algebra_file(os.path.join(DATA, "osp12.json"))
