"""Invariant theory of gl_n used to build H_b.

Polynomial functions on gl_n are Polys in the coordinates ``a[u,v]``;
elements of Sym(gl_n) are Polys in ``e[i,j]``.  The trace pairing
identifies the coordinate a[u,v] with e[v,u], since tr(A e_vu) = A_uv.
"""

from functools import lru_cache

from .polyseries import (QQ, A, E, Poly, TruncSeries, a, e, matrix_resolvent,
                         one_minus_tA, charpoly_matrix, poly_det, t, tau)


@lru_cache(maxsize=None)
def r_series(n, order, field=QQ):
    """Table ``{(i, j, k): r_k(x_i, y_j)}`` for ``k < order``.

    r_k(x_i, y_j)(A) is the t^k coefficient of
    ((1 - tA)^{-1})_{ij} / det(1 - tA).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    resolvent = matrix_resolvent(n, order, field)
    det_inv = TruncSeries.from_poly(poly_det(one_minus_tA(n, field)), order).inverse()
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            prod = resolvent[i - 1][j - 1] * det_inv
            for k in range(order):
                table[(i, j, k)] = prod.coefficient(k)
    return table


def dualize(f):
    """Send a function on gl_n to Sym(gl_n) via the trace pairing (a[u,v] -> e[v,u])."""
    if f.kinds() - {A}:
        raise ValueError("dualize expects a polynomial in the a[u,v] only")
    return f.rename(lambda v: e(v[2], v[1]))


def undualize(s):
    if s.kinds() - {E}:
        raise ValueError("expected a polynomial in the e[i,j] only")
    return s.rename(lambda v: a(v[2], v[1]))


@lru_cache(maxsize=None)
def _charpoly(n, field):
    return poly_det(charpoly_matrix(n, field))


def q_invariant(n, j, field=QQ):
    """Q_j with det(tI - A) = sum_j (-1)^j t^{n-j} Q_j(A)."""
    if not 0 <= j <= n:
        raise ValueError(f"j={j} out of range [0, {n}]")
    return _charpoly(n, field).coeff(t, n - j) * (-1) ** j


@lru_cache(maxsize=None)
def _cprime(n, m, field):
    num = TruncSeries.from_poly(_charpoly(n, field), n + 1, m + 1)
    T, U = Poly.var(t, field), Poly.var(tau, field)
    denom_poly = (T * U - 1) * poly_det(one_minus_tA(n, field)).rename(lambda v: tau if v == t else v)
    denom = TruncSeries.from_poly(denom_poly, n + 1, m + 1)
    return num * denom.inverse()


def cprime_top_symbol(n, m, i, field=QQ):
    """Coefficient of t^{n-i} tau^m in det(t - A) / ((t tau - 1) det(1 - tau A)).

    (t tau - 1)^{-1} is expanded as the formal power series -sum (t tau)^k.
    """
    if not 1 <= i <= n:
        raise ValueError(f"i={i} out of range [1, {n}]")
    if m < 1:
        raise ValueError("m must be >= 1")
    return _cprime(n, m, field).coefficient(n - i, m)
