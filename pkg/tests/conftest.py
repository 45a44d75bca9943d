import random
import sys
from fractions import Fraction

import pytest

from pseudopairs.construct import ConstructionInput, build_pair
from pseudopairs.nilpotent import Jet


def random_rational(rng: random.Random, span: int = 9, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_jet(rng: random.Random, f0=0) -> Jet:
    """Rational jet with nonzero first coefficient."""
    cs = [Fraction(f0)] + [random_rational(rng) for _ in range(7)]
    while cs[1] == 0:
        cs[1] = random_rational(rng)
    return Jet(tuple(cs))


def random_jet_pair(rng: random.Random):
    from pseudopairs.chain import h
    while True:
        f, g = random_jet(rng), random_jet(rng)
        if h(f, g, 1, 2) != 0:
            return f, g


@pytest.fixture(scope="session")
def pair_23():
    return build_pair(ConstructionInput("powers", 1e4, n=2, m=3))


@pytest.fixture(scope="session")
def pair_27():
    return build_pair(ConstructionInput("powers", 1e3, n=2, m=7))


@pytest.fixture(scope="session")
def pair_23_m100():
    return build_pair(ConstructionInput("powers", 100, n=2, m=3))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, detail = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
