"""The universal enveloping algebra U(gl_n) in the row-major PBW basis."""

from functools import lru_cache
from itertools import permutations

from .invariants import dualize, q_invariant
from .pbw import PBWAlgebra, commutator
from .polyseries import QQ, E, e as evar


def gl_bracket(i, j, k, l):
    """[e_ij, e_kl] = d_jk e_il - d_li e_kj as ``{(row, col): coeff}``."""
    out = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return {key: c for key, c in out.items() if c}


class Envelope(PBWAlgebra):
    """U(gl_n) with basis e[1,1], e[1,2], ..., e[n,n]."""

    def __init__(self, n, field=QQ):
        self.n = n
        self.basis = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        self.index = {ij: k for k, ij in enumerate(self.basis)}
        super().__init__(field,
                         [f"e[{i},{j}]" for i, j in self.basis],
                         [evar(i, j) for i, j in self.basis],
                         self._bracket)

    def _bracket(self, p, q):
        (i, j), (k, l) = self.basis[p], self.basis[q]
        return {self.gen_mono(self.index[ij]): c for ij, c in gl_bracket(i, j, k, l).items()}

    def e(self, i, j):
        return self.gen(self.index[(i, j)])


@lru_cache(maxsize=None)
def _envelope(n, field):
    return Envelope(n, field)


def envelope(n, field=QQ):
    """The shared U(gl_n) over ``field``."""
    return _envelope(n, field)


def ug_mul(a, b):
    return a * b


def _gen_index(alg, v):
    """Index in ``alg`` of the generator whose commutative variable is ``v``."""
    return alg.gen_vars.index(v)


def symmetrize(s, alg):
    """Symmetrization Sym(gl_n) -> U: v_1...v_k -> (1/k!) sum over orderings.

    ``alg`` is any PBW algebra containing the e[i,j] as generators.  Averaging
    over distinct orderings of a monomial equals averaging over all k!.
    """
    if s.kinds() - {E}:
        raise ValueError("symmetrize expects an element of Sym(gl_n)")
    p = alg.field.char
    out = alg.zero()
    for mono, c in s.terms.items():
        letters = []
        for v, k in mono:
            letters.extend([_gen_index(alg, v)] * k)
        if p and len(letters) >= p:
            raise ValueError(f"degree {len(letters)} symmetrization needs division by {len(letters)}! in F_{p}")
        out = out + _sym_monomial(alg, tuple(sorted(letters))) * c
    return out


def _sym_monomial(alg, letters):
    cache = alg.__dict__.setdefault("_sym_cache", {})
    if letters not in cache:
        words = set(permutations(letters))
        total = alg.zero()
        for w in sorted(words):
            total = total + alg.normal_form_word(w)
        cache[letters] = total * (alg.field.one / len(words))
    return cache[letters]


def alpha(n, i, field=QQ, alg=None):
    """Central element alpha_i = symmetrization of the dualized Q_i."""
    if not 1 <= i <= n:
        raise ValueError(f"i={i} out of range [1, {n}]")
    alg = alg or envelope(n, field)
    return symmetrize(dualize(q_invariant(n, i, field)), alg)


def generators(alg):
    return [alg.gen(k) for k in range(alg.ngens)]


def ug_is_central(u):
    return all(commutator(u, g).is_zero() for g in generators(u.alg))
