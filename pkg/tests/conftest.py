import pytest

from htres.families import gen_graphic, gen_stable, gen_uniform
from htres.monomials import Monomial, parse_ideal


def mono(text, n):
    return parse_ideal(text, n).gens[0]


def regression_ideals():
    return {
        "uniform(2,3)": gen_uniform(2, 3),
        "uniform(2,4)": gen_uniform(2, 4),
        "uniform(3,5)": gen_uniform(3, 5),
        "graphic(K3)": gen_graphic([(1, 2), (1, 3), (2, 3)]),
        "stable(x2^2)": gen_stable([Monomial((0, 2))]),
        "(x1,x2,x3)^2": parse_ideal("x1^2,x1*x2,x2^2,x1*x3,x2*x3,x3^2", 3),
        "sqfree(x2x3x4)": gen_stable([Monomial((0, 1, 1, 1))], squarefree=True),
    }


REGRESSION = regression_ideals()


@pytest.fixture
def m3():
    return parse_ideal("x1*x2, x1*x3, x2*x3", 3)


@pytest.fixture
def sq3():
    return parse_ideal("x1^2, x1*x2, x2^2, x1*x3, x2*x3, x3^2", 3)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
