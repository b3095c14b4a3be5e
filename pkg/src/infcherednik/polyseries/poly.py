"""Sparse commutative multivariate polynomials over Q or F_p.

A variable is a tuple ``(kind, *indices)``; kinds sort in the order
matrix coordinate, Lie generator, covector, vector, t, tau.  A monomial
is a tuple of ``(variable, exponent)`` pairs sorted by variable with no
zero exponents, so monomials are canonical and hashable.
"""

from .scalars import QQ, CharacteristicError

A, E, X, Y, T, TAU = range(6)
KIND_NAMES = {A: "a", E: "e", X: "x", Y: "y", T: "t", TAU: "tau"}


def a(u, v):
    return (A, u, v)


def e(i, j):
    return (E, i, j)


def x(i):
    return (X, i)


def y(i):
    return (Y, i)


t = (T,)
tau = (TAU,)


def var_name(v):
    name = KIND_NAMES[v[0]]
    if len(v) == 1:
        return name
    if v[0] == A:
        return f"{name}{v[1]}{v[2]}"
    return f"{name}[{','.join(str(i) for i in v[1:])}]"


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, k in m2:
        d[v] = d.get(v, 0) + k
    return tuple(sorted(d.items()))


def mono_degree(mono, weights=None):
    if weights is None:
        return sum(k for _, k in mono)
    return sum(weights(v) * k for v, k in mono)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps monomials to nonzero scalars."""

    __slots__ = ("field", "terms")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = field(c)
                if c:
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms, field):
        p = cls.__new__(cls)
        p.field = field
        p.terms = terms
        return p

    @classmethod
    def const(cls, c, field=QQ):
        return cls({(): c}, field)

    @classmethod
    def var(cls, v, field=QQ, exp=1):
        return cls({((v, exp),): 1}, field)

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise CharacteristicError(f"{self.field} vs {other.field}")
            return other
        return Poly.const(other, self.field)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.field(other)
            if not c:
                return Poly(field=self.field)
            return Poly._raw({m: v * c for m, v in self.terms.items()}, self.field)
        other = self._lift(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = Poly.const(1, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            try:
                other = self._lift(other)
            except (TypeError, CharacteristicError):
                return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not m for m in self.terms)

    def constant_term(self):
        return self.terms.get((), self.field.zero)

    def variables(self):
        return sorted({v for m in self.terms for v, _ in m})

    def kinds(self):
        return {v[0] for m in self.terms for v, _ in m}

    def degree(self, weights=None):
        """Maximal (weighted) degree; ``-1`` for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m, weights) for m in self.terms)

    def homogeneous_part(self, d, weights=None):
        return Poly._raw({m: c for m, c in self.terms.items() if mono_degree(m, weights) == d}, self.field)

    def top(self, weights=None):
        return self.homogeneous_part(self.degree(weights), weights)

    def is_homogeneous(self, weights=None):
        return len({mono_degree(m, weights) for m in self.terms}) <= 1

    def coeff(self, v, k):
        """Coefficient of ``v**k`` as a polynomial in the remaining variables."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.get(v, 0) != k:
                continue
            d.pop(v, None)
            out[tuple(sorted(d.items()))] = c
        return Poly._raw(out, self.field)

    def diff(self, v):
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            k = d.get(v, 0)
            if not k:
                continue
            if k == 1:
                del d[v]
            else:
                d[v] = k - 1
            cc = c * k
            if cc:
                m = tuple(sorted(d.items()))
                s = out.get(m, 0) + cc
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out, self.field)

    def subs(self, mapping):
        """Substitute polynomials or scalars for variables."""
        result = Poly(field=self.field)
        for mono, c in self.terms.items():
            term = Poly.const(c, self.field)
            rest = []
            for v, k in mono:
                if v in mapping:
                    term = term * (self._lift(mapping[v]) ** k)
                else:
                    rest.append((v, k))
            if rest:
                term = term * Poly({tuple(rest): 1}, self.field)
            result = result + term
        return result

    def evaluate(self, values):
        """Value at a point given as ``{variable: scalar}`` covering every variable."""
        total = self.field.zero
        for mono, c in self.terms.items():
            term = c
            for v, k in mono:
                term = term * self.field(values[v]) ** k
            total = total + term
        return total

    def map_coeffs(self, fn, field=None):
        field = field or self.field
        return Poly({m: fn(c) for m, c in self.terms.items()}, field)

    def rename(self, fn):
        """Apply a variable renaming ``fn`` to every monomial."""
        out = Poly(field=self.field)
        for mono, c in self.terms.items():
            d = {}
            for v, k in mono:
                w = fn(v)
                d[w] = d.get(w, 0) + k
            out = out + Poly({tuple(sorted(d.items())): c}, self.field)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-mono_degree(mc[0]), mc[0]))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [var_name(v) + (f"^{k}" if k > 1 else "") for v, k in mono]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


def var(v, field=QQ):
    return Poly.var(v, field)


def const(c, field=QQ):
    return Poly.const(c, field)
