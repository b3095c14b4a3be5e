"""The Poisson algebra A_m = Sym(gl_n + h + h*) and the data of B_m.

Under the weighted filtration (deg x = m, deg y = deg e = 1) the
associated graded of H_b is commutative and the bracket on generators is
the top part of the commutator:

    {e, e'} = [e, e'],  {e_ij, y_k} = d_jk y_i,  {e_ij, x_k} = -d_ik x_j,
    {y_i, x_j} = dualize(r_m(x_j, y_i)),  {x, x'} = {y, y'} = 0.
"""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
import random

from .cherednik import Filtration
from .envelope import gl_bracket
from .invariants import dualize, q_invariant, r_series
from .polyseries import (QQ, E, X, Y, Poly, e, poly_det, rank, solve, x, y,
                         SingularSystemError)


class PoissonAlgebra:
    def __init__(self, n, m, field=QQ):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.n, self.m, self.field = n, m, field
        gens = [e(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        gens += [x(i) for i in range(1, n + 1)] + [y(i) for i in range(1, n + 1)]
        self.generators = gens
        zero = Poly(field=field)
        table = {}
        for u in gens:
            for v in gens:
                table[(u, v)] = zero
        for (i, j) in [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]:
            for (k, l) in [(k, l) for k in range(1, n + 1) for l in range(1, n + 1)]:
                val = zero
                for (p, q), c in gl_bracket(i, j, k, l).items():
                    val = val + Poly.var(e(p, q), field) * c
                table[(e(i, j), e(k, l))] = val
            for k in range(1, n + 1):
                ey = Poly.var(y(i), field) if j == k else zero
                ex = -Poly.var(x(j), field) if i == k else zero
                table[(e(i, j), y(k))], table[(y(k), e(i, j))] = ey, -ey
                table[(e(i, j), x(k))], table[(x(k), e(i, j))] = ex, -ex
        r = r_series(n, m + 1, field)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                val = dualize(r[(j, i, m)])
                table[(y(i), x(j))], table[(x(j), y(i))] = val, -val
        self.table = table

    def gen(self, v):
        return Poly.var(v, self.field)

    def bracket(self, f, g):
        """Leibniz extension: sum over variables u, v of df/du dg/dv {u, v}."""
        out = Poly(field=self.field)
        gvars = [(v, g.diff(v)) for v in g.variables()]
        for u in f.variables():
            fu = f.diff(u)
            for v, gv in gvars:
                b = self.table[(u, v)]
                if b:
                    out = out + fu * gv * b
        return out

    def is_central(self, f):
        return all(self.bracket(f, self.gen(v)).is_zero() for v in self.generators)

    def jacobiator(self, f, g, h):
        br = self.bracket
        return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))

    def weight(self, v):
        return self.m if v[0] == X else 1


def poisson_bracket(P, f, g):
    return P.bracket(f, g)


@lru_cache(maxsize=None)
def poisson_algebra(n, m, field=QQ):
    return PoissonAlgebra(n, m, field)


def gr_t(ctx, i):
    """Weighted symbol of the Casimir t_i, checked to be Poisson-central."""
    sym = ctx.symbol(ctx.casimir(i).t, Filtration.WEIGHTED)
    P = poisson_algebra(ctx.n, ctx.m, ctx.field)
    if not P.is_central(sym):
        raise ArithmeticError(f"gr t_{i} is not Poisson-central")
    return sym


@dataclass
class BmData:
    """B_m through its defining data: A_m and the relations gr t_1..gr t_n."""
    algebra: PoissonAlgebra
    relations: list = dc_field(default_factory=list)


def b_m(ctx):
    return BmData(poisson_algebra(ctx.n, ctx.m, ctx.field), [gr_t(ctx, i) for i in range(1, ctx.n + 1)])


@lru_cache(maxsize=None)
def f_dets(n, field=QQ):
    """(f_x, f_y): determinants of the matrices ({Q_i, x_j}) and ({Q_i, y_j})."""
    if n > 4:
        raise ValueError("determinant size bound is 4")
    P = poisson_algebra(n, 1, field)
    qs = [dualize(q_invariant(n, i, field)) for i in range(1, n + 1)]
    mx = [[P.bracket(q, P.gen(x(j))) for j in range(1, n + 1)] for q in qs]
    my = [[P.bracket(q, P.gen(y(j))) for j in range(1, n + 1)] for q in qs]
    return poly_det(mx), poly_det(my)


def point_values(A, xi=None, eta=None):
    """Variable assignment e[i,j] = A[i][j], x[i] = xi[i], y[i] = eta[i]."""
    n = len(A)
    vals = {e(i + 1, j + 1): A[i][j] for i in range(n) for j in range(n)}
    if xi is not None:
        vals.update({x(i + 1): xi[i] for i in range(n)})
    if eta is not None:
        vals.update({y(i + 1): eta[i] for i in range(n)})
    return vals


def krylov_matrix(A, v):
    n = len(A)
    cols = [list(v)]
    for _ in range(n - 1):
        w = cols[-1]
        cols.append([sum(A[i][k] * w[k] for k in range(n)) for i in range(n)])
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def cyclicity_check(A, v, field=QQ):
    """True iff v, Av, ..., A^{n-1} v are linearly independent."""
    return rank(krylov_matrix(A, v), field) == len(A)


def transpose(A):
    return [list(r) for r in zip(*A)]


def random_matrix(rng, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def random_vector(rng, n, lo=-9, hi=9):
    return [rng.randint(lo, hi) for _ in range(n)]


def degenerate_sample(rng, n):
    """Entries in [-9, 9] with a zero block forcing a proper invariant subspace.

    A is block upper triangular and v lies in the leading block, so the
    Krylov space of (A, v) and of (A^T, v') for v' in the trailing block is
    proper.
    """
    A = random_matrix(rng, n)
    k = rng.randint(1, n - 1)
    for i in range(k, n):
        for j in range(k):
            A[i][j] = 0
    v = random_vector(rng, n)
    w = list(v)
    for i in range(k, n):
        v[i] = 0
    for i in range(k):
        w[i] = 0
    return A, v, w


def zero_locus_correspondence(n, samples, seed=0, field=QQ):
    """Compare f_y(A, v) != 0 with cyclicity of (A, v) and f_x(A, xi) != 0
    with cyclicity of (A^T, xi) on seeded samples; even-numbered samples are
    uniform, odd-numbered ones come from ``degenerate_sample``."""
    if n > 3:
        raise ValueError("n <= 3 required")
    fx, fy = f_dets(n, field)
    rng = random.Random(seed)
    passes = 0
    failures = []
    nonzero = 0
    for s in range(samples):
        if s % 2 == 0:
            A, v, xi = random_matrix(rng, n), random_vector(rng, n), random_vector(rng, n)
        else:
            A, v, xi = degenerate_sample(rng, n)
        fy_val = fy.evaluate(point_values(A, eta=v))
        fx_val = fx.evaluate(point_values(A, xi=xi))
        cy = cyclicity_check(A, v, field)
        cx = cyclicity_check(transpose(A), xi, field)
        ok = (bool(fy_val) == cy) and (bool(fx_val) == cx)
        nonzero += bool(fy_val) + bool(fx_val)
        if ok:
            passes += 1
        else:
            failures.append({"point": {"A": A, "v": v, "xi": xi},
                             "lhs": [str(fy_val), str(fx_val)], "rhs": [cy, cx]})
    return {"samples": samples, "passes": passes, "failures": failures, "nonzero": nonzero}


def eliminate_at_point(ctx, A, xi=None, eta=None):
    """Solve gr t_i(A, xi, eta) = 0 (i = 1..n) for the missing vector.

    gr t_i is linear in the y's for fixed (A, xi), with coefficient matrix
    minus the f_x bracket matrix, and linear in the x's for fixed (A, eta)
    with the f_y matrix; the matching determinant must be nonzero.
    """
    if (xi is None) == (eta is None):
        raise ValueError("give exactly one of xi, eta")
    n, field = ctx.n, ctx.field
    fx, fy = f_dets(n, field)
    rels = [gr_t(ctx, i) for i in range(1, n + 1)]
    if xi is not None:
        if not fx.evaluate(point_values(A, xi=xi)):
            raise SingularSystemError("f_x vanishes at the point")
        known, unknown = point_values(A, xi=xi), [y(j) for j in range(1, n + 1)]
    else:
        if not fy.evaluate(point_values(A, eta=eta)):
            raise SingularSystemError("f_y vanishes at the point")
        known, unknown = point_values(A, eta=eta), [x(j) for j in range(1, n + 1)]
    known = {v: field(c) for v, c in known.items()}
    M, rhs = [], []
    for rel in rels:
        partial = rel.subs(known)
        if partial.degree() > 1:
            raise ArithmeticError("relation is not linear in the unknowns")
        M.append([partial.coeff(u, 1).constant_term() for u in unknown])
        rhs.append(-partial.constant_term())
    return solve(M, rhs, field)


def residuals(ctx, A, xi, eta):
    vals = point_values(A, xi=xi, eta=eta)
    return [gr_t(ctx, i).evaluate(vals) for i in range(1, ctx.n + 1)]
