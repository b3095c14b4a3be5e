"""Truncated power series in t (and optionally tau) with polynomial coefficients."""

from .poly import Poly, T, TAU, a, t, tau
from .scalars import QQ


class TruncSeries:
    """Series sum of ``coeffs[(i, j)] * t**i * tau**j`` with ``i < order_t``, ``j < order_tau``.

    A univariate series in t has ``order_tau == 1``.
    """

    __slots__ = ("coeffs", "order_t", "order_tau", "field")

    def __init__(self, coeffs, order_t, order_tau=1, field=QQ):
        self.order_t = order_t
        self.order_tau = order_tau
        self.field = field
        clean = {}
        for (i, j), c in coeffs.items():
            if i >= order_t or j >= order_tau:
                continue
            if not isinstance(c, Poly):
                c = Poly.const(c, field)
            if c:
                clean[(i, j)] = c
        self.coeffs = clean

    @classmethod
    def from_poly(cls, p, order_t, order_tau=1):
        """Split the t and tau variables of ``p`` out into series positions."""
        buckets = {}
        for mono, c in p.terms.items():
            i = j = 0
            rest = []
            for v, k in mono:
                if v == t:
                    i = k
                elif v == tau:
                    j = k
                else:
                    rest.append((v, k))
            buckets.setdefault((i, j), {})[tuple(rest)] = c
        return cls({ij: Poly(terms, p.field) for ij, terms in buckets.items()}, order_t, order_tau, p.field)

    def to_poly(self):
        out = Poly(field=self.field)
        T, U = Poly.var(t, self.field), Poly.var(tau, self.field)
        for (i, j), c in self.coeffs.items():
            out = out + c * T ** i * U ** j
        return out

    def coefficient(self, i, j=0):
        return self.coeffs.get((i, j), Poly(field=self.field))

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries({(0, 0): other}, self.order_t, self.order_tau, self.field)
        return other

    def __add__(self, other):
        other = self._check(other)
        ot, oa = min(self.order_t, other.order_t), min(self.order_tau, other.order_tau)
        out = dict(self.coeffs)
        for ij, c in other.coeffs.items():
            out[ij] = out[ij] + c if ij in out else c
        return TruncSeries(out, ot, oa, self.field)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries({ij: -c for ij, c in self.coeffs.items()}, self.order_t, self.order_tau, self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        ot, oa = min(self.order_t, other.order_t), min(self.order_tau, other.order_tau)
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i >= ot or j >= oa:
                    continue
                prod = c1 * c2
                out[(i, j)] = out[(i, j)] + prod if (i, j) in out else prod
        return TruncSeries(out, ot, oa, self.field)

    __rmul__ = __mul__

    def truncate(self, order_t, order_tau=None):
        order_tau = self.order_tau if order_tau is None else order_tau
        return TruncSeries(self.coeffs, min(order_t, self.order_t), min(order_tau, self.order_tau), self.field)

    def inverse(self):
        """Multiplicative inverse; the constant coefficient must be a nonzero scalar."""
        c0 = self.coefficient(0, 0)
        if not c0.is_constant() or not c0:
            raise ValueError("series constant term is not a unit")
        inv0 = self.field.one / c0.constant_term()
        out = {}
        # coefficientwise recurrence: sum over (k,l) <= (i,j) of a_kl b_{i-k,j-l} = [i=j=0]
        for i in range(self.order_t):
            for j in range(self.order_tau):
                if i == 0 and j == 0:
                    out[(0, 0)] = Poly.const(inv0, self.field)
                    continue
                acc = Poly(field=self.field)
                for (k, l), ckl in self.coeffs.items():
                    if (k, l) == (0, 0) or k > i or l > j:
                        continue
                    b = out.get((i - k, j - l))
                    if b is not None:
                        acc = acc + ckl * b
                out[(i, j)] = acc * (-inv0)
        return TruncSeries(out, self.order_t, self.order_tau, self.field)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order_t, self.order_tau, self.coeffs) == (other.order_t, other.order_tau, other.coeffs)

    def __repr__(self):
        parts = [f"({c})*t^{i}*tau^{j}" for (i, j), c in sorted(self.coeffs.items())]
        return " + ".join(parts) or "0"


def series_inverse(f, order=None):
    """Inverse of a unit series, truncated below ``t**order`` when given."""
    if order is not None:
        f = f.truncate(order)
    return f.inverse()


def matrix_resolvent(n, order, field=QQ):
    """Entries of (1 - tA)^{-1} = sum_{k < order} t^k A^k with A = (a[u,v])."""
    if order < 1:
        raise ValueError("order must be >= 1")
    amat = [[Poly.var(a(u, v), field) for v in range(1, n + 1)] for u in range(1, n + 1)]
    power = [[Poly.const(1 if u == v else 0, field) for v in range(n)] for u in range(n)]
    coeffs = [[{} for _ in range(n)] for _ in range(n)]
    for k in range(order):
        for u in range(n):
            for v in range(n):
                coeffs[u][v][(k, 0)] = power[u][v]
        power = [[sum((power[u][w] * amat[w][v] for w in range(n)), Poly(field=field))
                  for v in range(n)] for u in range(n)]
    return [[TruncSeries(coeffs[u][v], order, 1, field) for v in range(n)] for u in range(n)]


__all__ = ["TruncSeries", "series_inverse", "matrix_resolvent", "T", "TAU"]
