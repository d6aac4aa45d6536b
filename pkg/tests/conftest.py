import sys
from functools import lru_cache

import pytest

from muqgen import enumerate_muqs, enumerate_plane_multigraphs


@lru_cache(maxsize=None)
def muqs(n: int) -> tuple:
    return tuple(enumerate_muqs(n))


@lru_cache(maxsize=None)
def multigraphs(k: int, reflect: bool = True) -> tuple:
    return tuple(enumerate_plane_multigraphs(k, reflect=reflect))


def muqs_upto(n_max: int):
    for n in range(3, n_max + 1):
        yield from muqs(n)


@pytest.fixture(scope="session")
def small_muqs():
    return list(muqs_upto(8))


@pytest.fixture(scope="session")
def simple_muqs(small_muqs):
    return [q for q in small_muqs if q.is_simple_quadrangulation()]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
