"""The infinitesimal Cherednik algebra H_b of gl_n.

H_b is generated by U(gl_n), x_1..x_n (basis of h*) and y_1..y_n (basis
of h) with [x, x'] = 0, [y, y'] = 0, [e_ij, y_k] = d_jk y_i,
[e_ij, x_k] = -d_ik x_j and

    [y_i, x_j] = sum_k b_k * sym(dualize(r_k(x_j, y_i))).

Normal monomials are ordered x | strictly lower e | diagonal e |
strictly upper e | y, which is also the order used to evaluate on the
highest-weight vector of a Verma module.
"""

from dataclasses import dataclass, field as dc_field
from enum import Enum
from itertools import product
from math import factorial
import random

from .envelope import Envelope, alpha, envelope, gl_bracket, symmetrize
from .invariants import cprime_top_symbol, dualize, r_series
from .pbw import Element, PBWAlgebra, commutator
from .polyseries import Field, Poly, e as evar, x as xvar, y as yvar
from .polyseries.matrix import rref


class Filtration(Enum):
    STANDARD = "standard"   # deg x = deg y = 1, deg g = 0
    WEIGHTED = "weighted"   # deg x = m, deg y = 1, deg g = 1
    GONLY = "gonly"         # deg g = 1, deg x = deg y = 0


class CasimirError(RuntimeError):
    """The centrality system for c_i has no solution or no unique one."""


def min_admissible_prime(n, m):
    """Smallest prime the package accepts as characteristic for (n, m)."""
    from .polyseries import is_prime
    p = n + m + 2
    while not is_prime(p):
        p += 1
    return p


def is_admissible_prime(p, n, m):
    # every symmetrized degree (<= max(n, m)) and every ansatz degree (<= n + m) stays below p
    from .polyseries import is_prime
    return is_prime(p) and p > n + m + 1


@dataclass
class CasimirResult:
    i: int
    t: Element
    c: Element
    sign: int
    ansatz_dim: int
    solve_rank: int
    metadata: dict = dc_field(default_factory=dict)


class HbContext:
    """An H_b for fixed (n, m, b, characteristic).

    ``b`` lists b_0, ..., b_m and must be monic.  Products are memoized
    inside the context, which is otherwise immutable.
    """

    def __init__(self, n, m, b, char=0):
        if n < 1:
            raise ValueError("n must be >= 1")
        if m < 1:
            raise ValueError("m must be >= 1; the case m = 0 is not supported")
        if len(b) != m + 1:
            raise ValueError(f"expected {m + 1} coefficients b_0..b_m, got {len(b)}")
        if char and not is_admissible_prime(char, n, m):
            raise ValueError(f"characteristic {char} is not an admissible prime for n={n}, m={m} "
                             f"(need a prime > {n + m + 1})")
        self.field = Field(char)
        self.n, self.m, self.char = n, m, char
        self.b = tuple(self.field(c) for c in b)
        if self.b[-1] != 1:
            raise ValueError("b must be monic (b_m = 1)")

        labels = [("x", i) for i in range(1, n + 1)]
        labels += [("e", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i > j]
        labels += [("e", i, i) for i in range(1, n + 1)]
        labels += [("e", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i < j]
        labels += [("y", i) for i in range(1, n + 1)]
        self.labels = labels
        self.index = {lab: k for k, lab in enumerate(labels)}
        names, gvars = [], []
        for lab in labels:
            if lab[0] == "e":
                names.append(f"e[{lab[1]},{lab[2]}]")
                gvars.append(evar(lab[1], lab[2]))
            else:
                names.append(f"{lab[0]}[{lab[1]}]")
                gvars.append(xvar(lab[1]) if lab[0] == "x" else yvar(lab[1]))
        self.alg = PBWAlgebra(self.field, names, gvars, self._bracket)
        self.ug = envelope(n, self.field)

        r = r_series(n, m + 1, self.field)
        self.ug_table = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                total = self.ug.zero()
                for k, bk in enumerate(self.b):
                    if bk:
                        total = total + symmetrize(dualize(r[(j, i, k)]), self.ug) * bk
                self.ug_table[(i, j)] = total
        self._casimirs = {}

    # generators -----------------------------------------------------------

    def _bracket(self, p, q):
        lp, lq = self.labels[p], self.labels[q]
        kp, kq = lp[0], lq[0]
        alg = self.alg
        if kp == kq and kp in "xy":
            return {}
        if kp == "e" and kq == "e":
            return {alg.gen_mono(self.index[("e",) + ij]): c
                    for ij, c in gl_bracket(lp[1], lp[2], lq[1], lq[2]).items()}
        if kp == "e" and kq == "x":
            i, j = lp[1], lp[2]
            return {alg.gen_mono(self.index[("x", j)]): -1} if i == lq[1] else {}
        if kp == "y" and kq == "e":
            i, j = lq[1], lq[2]
            return {alg.gen_mono(self.index[("y", i)]): -1} if j == lp[1] else {}
        if kp == "y" and kq == "x":
            return self.ug_to_hb(self.ug_table[(lp[1], lq[1])]).terms
        raise AssertionError(f"unexpected generator pair {lp}, {lq}")

    def x(self, i):
        return self.gen(("x", i))

    def y(self, i):
        return self.gen(("y", i))

    def e(self, i, j):
        return self.gen(("e", i, j))

    def gen(self, label):
        if label not in self.index:
            raise IndexError(f"no generator {label} for n={self.n}")
        return self.alg.gen(self.index[label])

    def generators(self):
        return [self.alg.gen(k) for k in range(self.alg.ngens)]

    def scalar(self, c):
        return self.alg.scalar(c)

    def kinds(self, k):
        return self.labels[k][0]

    def ug_to_hb(self, u):
        out = {}
        for mono, c in u.terms.items():
            word = [self.index[("e",) + self.ug.basis[k]] for k in self.ug.word(mono)]
            for m, v in self.alg.normal_form_word(word).terms.items():
                s = out.get(m, 0) + v * c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Element(self.alg, out)

    def hb_to_ug(self, h):
        """Inverse of ug_to_hb on elements supported on the e-generators."""
        out = self.ug.zero()
        for mono, c in h.terms.items():
            word = []
            for k, exp in enumerate(mono):
                if not exp:
                    continue
                lab = self.labels[k]
                if lab[0] != "e":
                    raise ValueError("element does not lie in U(gl_n)")
                word.extend([self.ug.index[(lab[1], lab[2])]] * exp)
            out = out + self.ug.normal_form_word(word) * c
        return out

    def bracket_table(self, i, j):
        """[y_i, x_j] as an element of U(gl_n)."""
        return self.ug_table[(i, j)]

    # normal forms ---------------------------------------------------------

    def normal_form(self, word):
        """Normal form of a word of generator labels, optionally with scalar factors."""
        coeff = self.field.one
        idx = []
        for item in word:
            if isinstance(item, tuple):
                idx.append(self.index[item] if item in self.index else self._bad(item))
            else:
                coeff = coeff * self.field(item)
        return self.alg.normal_form_word(idx, coeff)

    def _bad(self, item):
        raise IndexError(f"no generator {item} for n={self.n}")

    def weights(self, filt):
        out = []
        for lab in self.labels:
            k = lab[0]
            if filt is Filtration.STANDARD:
                out.append(0 if k == "e" else 1)
            elif filt is Filtration.WEIGHTED:
                out.append(self.m if k == "x" else 1)
            else:
                out.append(1 if k == "e" else 0)
        return tuple(out)

    def filtration_degree(self, a, filt):
        return a.degree(self._weights_for(a, filt))

    def symbol(self, a, filt):
        return a.symbol(self._weights_for(a, filt))

    def _weights_for(self, a, filt):
        if isinstance(a.alg, Envelope):
            return (0 if filt is Filtration.STANDARD else 1,) * a.alg.ngens
        return self.weights(filt)

    # structure ------------------------------------------------------------

    def is_central(self, a):
        return all(commutator(a, g).is_zero() for g in self.generators())

    def exp_ad(self, v, a, max_terms=256):
        """exp(ad v)(a) for v a linear combination of x's only or of y's only."""
        kinds = set()
        for mono in v.terms:
            if sum(mono) != 1:
                raise ValueError("v must be linear in the x's or in the y's")
            kinds.add(self.labels[mono.index(1)][0])
        if not kinds <= {"x"} and not kinds <= {"y"}:
            raise ValueError("v must involve only x's or only y's")
        total = a
        term = a
        for k in range(1, max_terms):
            term = commutator(v, term)
            if term.is_zero():
                return total
            if self.char and k >= self.char:
                raise ValueError(f"ad(v) nilpotency order exceeds characteristic {self.char}")
            total = total + term * (self.field.one / factorial(k))
        raise RuntimeError("ad(v) did not terminate")

    def casimir(self, i):
        """Central element t_i = sum_j [alpha_i, y_j] x_j - c_i with c_i solved for."""
        if not 1 <= i <= self.n:
            raise ValueError(f"i={i} out of range [1, {self.n}]")
        if i not in self._casimirs:
            self._casimirs[i] = self._solve_casimir(i)
        return self._casimirs[i]

    def alpha_hb(self, i):
        return self.ug_to_hb(alpha(self.n, i, self.field, self.ug))

    def casimir_parts(self, i):
        """The two expressions sum_j [alpha_i, y_j] x_j and sum_j y_j [x_j, alpha_i]."""
        al = self.alpha_hb(i)
        s = self.alg.zero()
        s_alt = self.alg.zero()
        for j in range(1, self.n + 1):
            s = s + commutator(al, self.y(j)) * self.x(j)
            s_alt = s_alt + self.y(j) * commutator(self.x(j), al)
        return s, s_alt

    def ansatz_exponents(self, i):
        n, bound = self.n, self.m + i
        out = []
        for ks in product(*(range(bound // j + 1) for j in range(1, n + 1))):
            deg = sum(j * k for j, k in zip(range(1, n + 1), ks))
            if 0 < deg <= bound:
                out.append(ks)
        return out

    def _solve_casimir(self, i):
        s, s_alt = self.casimir_parts(i)
        if s != s_alt:
            raise CasimirError(f"the two expressions for t_{i} disagree")
        alphas = [alpha(self.n, j, self.field, self.ug) for j in range(1, self.n + 1)]
        exps = self.ansatz_exponents(i)
        basis_ug = []
        for ks in exps:
            u = self.ug.scalar(1)
            for a_j, k in zip(alphas, ks):
                u = u * a_j ** k
            basis_ug.append(u)
        basis = [self.ug_to_hb(u) for u in basis_ug]

        targets = [self.x(k) for k in range(1, self.n + 1)] + [self.y(k) for k in range(1, self.n + 1)]
        columns = []
        rhs = {}
        for gi, g in enumerate(targets):
            rhs_g = commutator(s, g)
            for mono, c in rhs_g.terms.items():
                rhs[(gi, mono)] = c
            columns.append([(gi, commutator(P, g)) for P in basis])
        # rows indexed by (target, monomial)
        keys = set(rhs)
        for col in columns:
            for gi, elem in col:
                keys.update((gi, mono) for mono in elem.terms)
        keys = sorted(keys, key=lambda km: (km[0], km[1]))
        key_pos = {km: r for r, km in enumerate(keys)}
        nunk = len(basis)
        zero = self.field.zero
        rows = [[zero] * (nunk + 1) for _ in keys]
        for col_block in columns:
            for u, (gi, elem) in enumerate(col_block):
                for mono, c in elem.terms.items():
                    rows[key_pos[(gi, mono)]][u] = c
        for km, c in rhs.items():
            rows[key_pos[km]][nunk] = c
        R, pivots = rref(rows, self.field)
        if nunk in pivots:
            raise CasimirError(f"no c_{i} in the ansatz of weighted degree <= {self.m + i} makes t_{i} central")
        if len(pivots) < nunk:
            raise CasimirError(f"c_{i} is not unique up to constants ({len(pivots)} < {nunk})")
        coeffs = [R[r][nunk] for r in range(nunk)]
        c_ug = self.ug.zero()
        for coef, u in zip(coeffs, basis_ug):
            c_ug = c_ug + u * coef
        t = s - self.ug_to_hb(c_ug)
        if not self.is_central(t):
            raise CasimirError(f"t_{i} failed the centrality check")
        sign = self._cprime_sign(i, c_ug)
        return CasimirResult(i=i, t=t, c=c_ug, sign=sign, ansatz_dim=nunk, solve_rank=len(pivots),
                             metadata={"sign": sign, "ansatz_dim": nunk, "solve_rank": len(pivots)})

    def _cprime_sign(self, i, c_ug):
        """+1 or -1 if the GONLY symbol of c_i is +/- the dualized c' coefficient, else 0."""
        if c_ug.is_zero():
            return 0
        sym = self.symbol(c_ug, Filtration.GONLY)
        ref = dualize(cprime_top_symbol(self.n, self.m, i, self.field))
        if sym == ref:
            return 1
        if sym == -ref:
            return -1
        return 0

    def pbw_dimension_check(self, d, samples=50, seed=0, report=None):
        """PBW check in total degree <= d (see ``pbw_dimension_report``)."""
        rep = pbw_dimension_report(self, d, samples, seed)
        if report is not None:
            report.update(rep)
        return rep["pass"]

    def __repr__(self):
        bs = ",".join(str(c) for c in self.b)
        return f"HbContext(n={self.n}, m={self.m}, b=({bs}), char={self.char})"


def hb_context(n, m, b, char=0):
    return HbContext(n, m, b, char)


def hb_commutator(a, b):
    return commutator(a, b)


def hb_mul(a, b):
    return a * b


def count_monomials(nvars, d):
    """Number of exponent vectors in ``nvars`` variables with total degree <= d."""
    if d < 0:
        return 0
    counts = [1] + [0] * d
    for _ in range(nvars):
        for k in range(1, d + 1):
            counts[k] += counts[k - 1]
    return sum(counts)


def random_word(ctx, rng, max_len):
    length = rng.randint(0, max_len)
    return [rng.randrange(ctx.alg.ngens) for _ in range(length)]


def pbw_dimension_report(ctx, d, samples=50, seed=0):
    """(a) standard monomials of degree <= d are normal and fixed by straightening,
    their number is C(N + d, d), and every word of length <= 3 has a WEIGHTED
    symbol equal to its commutative image (the associated graded is Sym);
    (b) seeded words of length <= d straighten identically under all rewrite
    strategies.
    """
    from math import comb
    from itertools import product as iproduct
    from .rewriting import STRATEGIES, rewrite_normal_form

    N = ctx.alg.ngens
    monos = [m for m in iproduct(range(d + 1), repeat=N) if sum(m) <= d] if N <= 10 and d <= 4 else None
    count = len(monos) if monos is not None else count_monomials(N, d)
    expected = comb(N + d, d)
    fixed = True
    if monos is not None:
        for m in monos:
            nf = ctx.alg.normal_form_word(ctx.alg.word(m))
            if nf.terms != {m: ctx.field.one}:
                fixed = False
                break
    graded = True
    weights = ctx.weights(Filtration.WEIGHTED)
    for length in range(min(d, 3) + 1):
        for w in iproduct(range(N), repeat=length):
            nf = ctx.alg.normal_form_word(w)
            sorted_mono = [0] * N
            for g in w:
                sorted_mono[g] += 1
            expect = ctx.alg.element({tuple(sorted_mono): 1}).symbol(weights)
            if nf.is_zero() or nf.symbol(weights) != expect:
                graded = False
                break
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(samples):
        w = random_word(ctx, rng, d)
        ref = ctx.alg.normal_form_word(w).terms
        for name in STRATEGIES:
            if rewrite_normal_form(ctx.alg, w, name, random.Random(rng.random())) != ref:
                mismatches += 1
                break
    return {"d": d, "count": count, "expected": expected, "standard_fixed": fixed,
            "graded": graded, "samples": samples, "mismatches": mismatches,
            "pass": count == expected and fixed and graded and mismatches == 0}
