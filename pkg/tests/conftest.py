import random
from fractions import Fraction

import pytest

from spherical_cox.lattice import is_primitive
from spherical_cox.multipoly import LaurentPoly, S, T


@pytest.fixture
def rng():
    return random.Random(20260514)


def random_poly(rng, dims, m, n_terms=(1, 4), s_max=2, t_range=2, coeff=3):
    """Random nonzero Laurent polynomial over the S/T variables of a space."""
    while True:
        terms = {}
        for _ in range(rng.randint(*n_terms)):
            mono = []
            for i, s in enumerate(dims, start=1):
                for j in range(1, s + 1):
                    e = rng.randint(0, s_max) if rng.random() < 0.4 else 0
                    if e:
                        mono.append((S(i, j), e))
            for k in range(1, m + 1):
                e = rng.randint(-t_range, t_range)
                if e:
                    mono.append((T(k), e))
            c = Fraction(rng.choice([x for x in range(-coeff, coeff + 1) if x]), rng.choice([1, 1, 2]))
            terms[tuple(mono)] = terms.get(tuple(mono), 0) + c
        f = LaurentPoly(terms)
        if not f.is_zero():
            return f


def random_primitive(rng, rank, bound=2):
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(rank))
        if any(v) and is_primitive(v):
            return v


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.outcome != "passed"):
        name = report.nodeid.split("::")[-1].replace("test_criterion_", "criterion ")
        if report.when == "call" or name not in _ACCEPTANCE:
            _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name, status in _ACCEPTANCE.items():
            terminalreporter.write_line(f"{status}  {name}")
