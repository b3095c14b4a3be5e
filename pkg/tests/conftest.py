import random
from fractions import Fraction

import pytest
import sympy

from infcherednik import HbContext
from infcherednik.polyseries import A, E, X, Y, T, TAU, QQ, Poly


def sym_var(v):
    kind = v[0]
    if kind == A:
        return sympy.Symbol(f"a{v[1]}{v[2]}")
    if kind == E:
        return sympy.Symbol(f"e{v[1]}{v[2]}")
    if kind in (X, Y):
        return sympy.Symbol(f"{'x' if kind == X else 'y'}{v[1]}")
    return sympy.Symbol("t" if kind == T else "tau")


def to_sympy(p):
    """Commutative Poly over Q -> sympy expression."""
    total = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for v, k in mono:
            term *= sym_var(v) ** k
        total += term
    return sympy.expand(total)


def sym_matrix(n):
    return sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"a{i + 1}{j + 1}"))


def random_poly(rng, variables, nterms=4, maxdeg=3, field=QQ):
    terms = {}
    for _ in range(nterms):
        d = {}
        for _ in range(rng.randint(0, maxdeg)):
            v = rng.choice(variables)
            d[v] = d.get(v, 0) + 1
        terms[tuple(sorted(d.items()))] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(terms, field)


def random_element(ctx, rng, max_deg=3, nterms=3):
    """Sum of a few random words of length <= max_deg with small rational coefficients."""
    out = ctx.alg.zero()
    for _ in range(nterms):
        word = [rng.randrange(ctx.alg.ngens) for _ in range(rng.randint(0, max_deg))]
        c = Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if not ctx.char else rng.randint(-4, 4)
        out = out + ctx.alg.normal_form_word(word, ctx.field(c))
    return out


@pytest.fixture(scope="session")
def ctx11():
    return HbContext(1, 1, [Fraction(3), 1])


@pytest.fixture(scope="session")
def ctx21():
    return HbContext(2, 1, [Fraction(2), 1])


@pytest.fixture(scope="session")
def ctx12():
    return HbContext(1, 2, [Fraction(1), Fraction(-2), 1])


@pytest.fixture
def rng():
    return random.Random(20261016)


# acceptance reporting: one line per criterion at the end of the session

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    num, title = mark.args
    entry = _criteria.setdefault(num, {"title": title, "ok": True, "secs": 0.0})
    entry["ok"] &= call.excinfo is None
    entry["secs"] += call.duration


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        c = _criteria[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if c['ok'] else 'FAIL'}  {c['title']}  ({c['secs']:.2f} s)")
