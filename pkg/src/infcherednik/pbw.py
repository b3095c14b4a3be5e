"""PBW normal forms for algebras given by ordered generators and commutators.

Generators are numbered ``0 .. N-1``; a normal monomial is an exponent
tuple of length N, read as the ordered product g_0^k0 g_1^k1 ... .
The algebra is specified by ``bracket(i, j)`` for ``i > j``, returning
[g_i, g_j] as a dict of normal monomials.  Straightening uses
g_i g_j = g_j g_i + [g_i, g_j].  Every rewrite either removes an
inversion or replaces a pair by a bracket of lower filtration degree,
which bounds the recursion.
"""

from .polyseries import Poly


def _add_into(acc, terms, scale):
    for mono, c in terms.items():
        s = acc.get(mono, 0) + c * scale
        if s:
            acc[mono] = s
        else:
            acc.pop(mono, None)


def _last(mono):
    for i in range(len(mono) - 1, -1, -1):
        if mono[i]:
            return i
    return -1


def _first(mono):
    for i, k in enumerate(mono):
        if k:
            return i
    return -1


class PBWAlgebra:
    """Straightening engine; products are memoized per (monomial, monomial)."""

    def __init__(self, field, names, gen_vars, bracket):
        self.field = field
        self.names = tuple(names)
        self.gen_vars = tuple(gen_vars)
        self.ngens = len(self.names)
        self.unit = (0,) * self.ngens
        self._bracket_fn = bracket
        self._brackets = {}
        self._mg = {}
        self._mm = {}

    def bracket_terms(self, i, j):
        """[g_i, g_j] for i > j as normal-form terms."""
        key = (i, j)
        if key not in self._brackets:
            self._brackets[key] = {m: self.field(c) for m, c in self._bracket_fn(i, j).items() if c}
        return self._brackets[key]

    def gen_mono(self, i, k=1):
        m = [0] * self.ngens
        m[i] = k
        return tuple(m)

    def word(self, mono):
        out = []
        for i, k in enumerate(mono):
            out.extend([i] * k)
        return tuple(out)

    def mul_mono_gen(self, mono, g):
        key = (mono, g)
        hit = self._mg.get(key)
        if hit is not None:
            return hit
        last = _last(mono)
        if last <= g:
            m = list(mono)
            m[g] += 1
            res = {tuple(m): self.field.one}
        else:
            prefix = list(mono)
            prefix[last] -= 1
            prefix = tuple(prefix)
            # (prefix g_last) g = (prefix g) g_last + prefix [g_last, g]
            res = self.mul_terms_gen(self.mul_mono_gen(prefix, g), last)
            br = self.bracket_terms(last, g)
            for bm, bc in br.items():
                _add_into(res, self.mul_mono_mono(prefix, bm), bc)
        self._mg[key] = res
        return res

    def mul_terms_gen(self, terms, g):
        out = {}
        for mono, c in terms.items():
            _add_into(out, self.mul_mono_gen(mono, g), c)
        return out

    def mul_mono_mono(self, m1, m2):
        key = (m1, m2)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        g = _first(m2)
        if g < 0:
            res = {m1: self.field.one}
        elif _last(m1) <= g:
            res = {tuple(a + b for a, b in zip(m1, m2)): self.field.one}
        else:
            rest = list(m2)
            rest[g] -= 1
            rest = tuple(rest)
            res = {}
            for m, c in self.mul_mono_gen(m1, g).items():
                _add_into(res, self.mul_mono_mono(m, rest), c)
        self._mm[key] = res
        return res

    def mul_terms(self, t1, t2):
        out = {}
        for m1, c1 in t1.items():
            for m2, c2 in t2.items():
                _add_into(out, self.mul_mono_mono(m1, m2), c1 * c2)
        return out

    def normal_form_word(self, word, coeff=1):
        """Normal form of a product of generators given by index."""
        terms = {self.unit: self.field(coeff)}
        for g in word:
            terms = self.mul_terms_gen(terms, g)
        return Element(self, terms)

    def element(self, terms):
        return Element(self, {m: self.field(c) for m, c in terms.items() if c})

    def gen(self, i):
        return Element(self, {self.gen_mono(i): self.field.one})

    def scalar(self, c):
        c = self.field(c)
        return Element(self, {self.unit: c} if c else {})

    def zero(self):
        return Element(self, {})

    def mono_str(self, mono):
        parts = []
        for i, k in enumerate(mono):
            if k:
                parts.append(self.names[i] + (f"^{k}" if k > 1 else ""))
        return "*".join(parts)


class Element:
    """Element of a PBWAlgebra as a sparse map normal monomial -> scalar."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _lift(self, other):
        if isinstance(other, Element):
            if other.alg is not self.alg:
                raise ValueError("elements belong to different algebras")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        _add_into(out, other.terms, 1)
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        _add_into(out, other.terms, -1)
        return Element(self.alg, out)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            self._lift(other)
            return Element(self.alg, self.alg.mul_terms(self.terms, other.terms))
        c = self.alg.field(other)
        if not c:
            return self.alg.zero()
        return Element(self.alg, {m: v * c for m, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k):
        result = self.alg.scalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            other = self._lift(other)
        return self.alg is other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def coefficient(self, mono):
        return self.terms.get(mono, self.alg.field.zero)

    def constant_term(self):
        return self.coefficient(self.alg.unit)

    def degree(self, weights):
        """Largest weight of a monomial; ``-1`` for zero."""
        if not self.terms:
            return -1
        return max(sum(w * k for w, k in zip(weights, m)) for m in self.terms)

    def symbol(self, weights):
        """Top-weight part as a commutative polynomial in the generator variables."""
        if not self.terms:
            raise ValueError("the zero element has no symbol")
        d = self.degree(weights)
        gv = self.alg.gen_vars
        out = {}
        for m, c in self.terms.items():
            if sum(w * k for w, k in zip(weights, m)) == d:
                mono = tuple(sorted((gv[i], k) for i, k in enumerate(m) if k))
                out[mono] = out.get(mono, 0) + c
        return Poly(out, self.alg.field)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (-sum(mc[0]), tuple(-k for k in mc[0])))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            s = self.alg.mono_str(m)
            if not s:
                parts.append(str(c))
            elif c == 1:
                parts.append(s)
            else:
                parts.append(f"{c}*{s}")
        return " + ".join(parts)


def commutator(u, v):
    return u * v - v * u
