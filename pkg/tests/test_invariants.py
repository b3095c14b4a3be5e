from fractions import Fraction
import random

import pytest
import sympy

from infcherednik.invariants import cprime_top_symbol, dualize, q_invariant, r_series, undualize
from infcherednik.polyseries import Poly, a, e
from conftest import sym_matrix, to_sympy


def P(v):
    return Poly.var(v)


def sym_r(n, k):
    """Oracle: t^k coefficient of (1 - tA)^{-1} / det(1 - tA) through sympy series."""
    ts = sympy.Symbol("t")
    M = sym_matrix(n)
    one = sympy.eye(n) - ts * M
    G = one.adjugate() / one.det() ** 2
    return [[sympy.expand(sympy.series(G[i, j], ts, 0, k + 1).removeO().coeff(ts, k)) for j in range(n)]
            for i in range(n)]


def test_r0_is_identity():
    r = r_series(3, 1)
    for i in range(1, 4):
        for j in range(1, 4):
            assert r[(i, j, 0)] == Poly.const(int(i == j))


def test_r_n1():
    r = r_series(1, 4)
    for k in range(4):
        assert r[(1, 1, k)] == P(a(1, 1)) ** k * (k + 1)
    assert r[(1, 1, 2)] == P(a(1, 1)) ** 2 * 3


def test_r_n2_first_order():
    r = r_series(2, 2)
    assert r[(1, 1, 1)] == P(a(1, 1)) * 2 + P(a(2, 2))
    assert r[(1, 2, 1)] == P(a(1, 2))


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (2, 3), (3, 2)])
def test_r_matches_series_oracle(n, k):
    oracle = sym_r(n, k)
    r = r_series(n, k + 1)
    for i in range(n):
        for j in range(n):
            assert sympy.expand(oracle[i][j] - to_sympy(r[(i + 1, j + 1, k)])) == 0


def test_r_homogeneous():
    r = r_series(3, 4)
    for (i, j, k), f in r.items():
        assert not f or (f.is_homogeneous() and f.degree() == k)


def test_dualize_examples():
    assert dualize(P(a(1, 2))) == P(e(2, 1))
    assert dualize(P(a(1, 1)) + P(a(2, 2))) == P(e(1, 1)) + P(e(2, 2))
    f = P(a(1, 1)) * P(a(2, 2)) - P(a(1, 2)) * P(a(2, 1))
    assert dualize(f) == P(e(1, 1)) * P(e(2, 2)) - P(e(2, 1)) * P(e(1, 2))
    assert undualize(dualize(f)) == f
    with pytest.raises(ValueError):
        dualize(P(e(1, 1)))


def test_q_examples():
    assert q_invariant(2, 0) == Poly.const(1)
    assert q_invariant(2, 1) == P(a(1, 1)) + P(a(2, 2))
    assert q_invariant(2, 2) == P(a(1, 1)) * P(a(2, 2)) - P(a(1, 2)) * P(a(2, 1))
    with pytest.raises(ValueError):
        q_invariant(2, 3)


def test_q_matches_sympy_charpoly():
    for n in (2, 3):
        ts = sympy.Symbol("t")
        cp = sympy.expand((ts * sympy.eye(n) - sym_matrix(n)).det())
        for j in range(n + 1):
            assert sympy.expand((-1) ** j * cp.coeff(ts, n - j) - to_sympy(q_invariant(n, j))) == 0


def _rand_invertible(rng, n):
    while True:
        M = sympy.Matrix(n, n, lambda i, j: rng.randint(-4, 4))
        if M.det() != 0:
            return M


def test_q_conjugation_invariant():
    rng = random.Random(11)
    for n in (2, 3):
        qs = [q_invariant(n, j) for j in range(n + 1)]
        for _ in range(20):
            Pm = _rand_invertible(rng, n)
            Am = sympy.Matrix(n, n, lambda i, j: sympy.Rational(rng.randint(-6, 6), rng.randint(1, 3)))
            B = Pm * Am * Pm.inv()
            for q in qs:
                va = q.evaluate({a(i + 1, j + 1): Fraction(str(Am[i, j])) for i in range(n) for j in range(n)})
                vb = q.evaluate({a(i + 1, j + 1): Fraction(str(B[i, j])) for i in range(n) for j in range(n)})
                assert va == vb


def test_r_pairing_invariant():
    rng = random.Random(12)
    n, order = 2, 3
    r = r_series(n, order)

    def pairing(k, xv, yv, M):
        vals = {a(i + 1, j + 1): Fraction(str(M[i, j])) for i in range(n) for j in range(n)}
        return sum(Fraction(str(xv[i])) * Fraction(str(yv[j])) * r[(i + 1, j + 1, k)].evaluate(vals)
                   for i in range(n) for j in range(n))

    for _ in range(20):
        Pm = _rand_invertible(rng, n)
        Am = sympy.Matrix(n, n, lambda i, j: rng.randint(-5, 5))
        xv = sympy.Matrix(1, n, lambda i, j: rng.randint(-5, 5))
        yv = sympy.Matrix(n, 1, lambda i, j: rng.randint(-5, 5))
        for k in range(order):
            lhs = pairing(k, list(xv * Pm.inv()), list(Pm * yv), Pm * Am * Pm.inv())
            assert lhs == pairing(k, list(xv), list(yv), Am)


def test_cprime_examples():
    assert cprime_top_symbol(1, 1, 1) == P(a(1, 1)) ** 2
    assert cprime_top_symbol(1, 2, 1) == P(a(1, 1)) ** 3
    q2 = P(a(1, 1)) * P(a(2, 2)) - P(a(1, 2)) * P(a(2, 1))
    assert cprime_top_symbol(2, 1, 2) == -q2 * (P(a(1, 1)) + P(a(2, 2)))


def _closed_form(n, m, i):
    """-sum_{j >= i} (-1)^j Q_j h_{m+i-j}, with h_k from 1/det(1 - tau A) by recurrence."""
    ts = sympy.Symbol("t")
    cp = sympy.expand((ts * sympy.eye(n) - sym_matrix(n)).det())
    Q = [(-1) ** j * cp.coeff(ts, n - j) for j in range(n + 1)]
    h = [sympy.Integer(1)]
    for k in range(1, m + n + 1):
        h.append(sympy.expand(sum((-1) ** (j + 1) * Q[j] * h[k - j] for j in range(1, min(k, n) + 1))))
    return sympy.expand(-sum((-1) ** j * Q[j] * h[m + i - j] for j in range(i, n + 1)))


def _bivariate_oracle(n, m, i):
    ts, tau = sympy.symbols("t tau")
    M = sym_matrix(n)
    num = (ts * sympy.eye(n) - M).det()
    inner = sympy.series(1 / ((ts * tau - 1) * (sympy.eye(n) - tau * M).det()), tau, 0, m + 1).removeO()
    return sympy.expand(sympy.expand(num * inner).coeff(tau, m).coeff(ts, n - i))


@pytest.mark.parametrize("n,m,i", [(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 2)])
def test_cprime_matches_oracles(n, m, i):
    got = to_sympy(cprime_top_symbol(n, m, i))
    assert sympy.expand(got - _closed_form(n, m, i)) == 0
    if n <= 2:
        assert sympy.expand(got - _bivariate_oracle(n, m, i)) == 0


def test_cprime_homogeneous():
    for n, m in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]:
        for i in range(1, n + 1):
            c = cprime_top_symbol(n, m, i)
            assert c.is_homogeneous() and c.degree() == m + i


def test_cprime_index_range():
    with pytest.raises(ValueError):
        cprime_top_symbol(2, 1, 3)
