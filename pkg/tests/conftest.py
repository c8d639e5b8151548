import sympy
import pytest

from hurwitz_alexander.laurent import LaurentPoly

T = sympy.Symbol("t")


def to_sympy(p: LaurentPoly):
    if p.is_zero():
        return sympy.Integer(0)
    return sum((p.coeff(e) * T**e for e in range(p.lowest, p.highest + 1)), sympy.Integer(0))


def from_sympy(expr) -> LaurentPoly:
    expr = sympy.expand(expr)
    if expr == 0:
        return LaurentPoly()
    terms = sympy.Poly(expr * T**200, T).as_dict()
    return LaurentPoly.from_dict({e[0] - 200: int(c) for e, c in terms.items()})


def sympy_canonical(expr) -> LaurentPoly:
    """Independent canonical form: drop powers of t, make the top coefficient positive."""
    poly = sympy.Poly(sympy.expand(sympy.cancel(expr) * T**200), T)
    coeffs = poly.all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return LaurentPoly(0, [int(c) for c in coeffs])


def asc(*coeffs) -> LaurentPoly:
    return LaurentPoly(0, coeffs)


@pytest.fixture
def t():
    return T


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
