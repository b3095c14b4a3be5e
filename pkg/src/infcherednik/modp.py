"""Characteristic-p probes of H_b: restricted powers, Z_0 and mod-p Casimirs."""

from dataclasses import dataclass, field as dc_field, asdict
import random
import time

from .cherednik import HbContext, is_admissible_prime
from .pbw import Element, commutator
from .polyseries import Field, Poly, Residue, rank


@dataclass
class ModpReport:
    p: int
    n: int
    m: int
    label: str
    centrality: dict = dc_field(default_factory=dict)
    elapsed_ms: float = 0.0
    note: str = "admissible means p > n + m + 1; the required size of p is not pinned down"

    @property
    def passed(self):
        return all(self.centrality.values())

    def to_json(self):
        d = asdict(self)
        d["pass"] = self.passed
        return d


def matrix_p_power(M, p):
    """M^p over F_p (repeated squaring)."""
    F = Field(p)
    n = len(M)
    M = [[F(c) for c in row] for row in M]
    result = [[F(int(i == j)) for j in range(n)] for i in range(n)]
    k = p
    while k:
        if k & 1:
            result = _mat_mul(result, M, F)
        M = _mat_mul(M, M, F)
        k >>= 1
    return result


def _mat_mul(A, B, F):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), F.zero) for j in range(n)] for i in range(n)]


def restricted_power_element(ctx, i, j):
    """e_ij^p - e_ij^[p], with the matrix p-th power re-expressed in the e-basis."""
    p, n = ctx.char, ctx.n
    unit = [[int((r, c) == (i, j)) for c in range(1, n + 1)] for r in range(1, n + 1)]
    mp = matrix_p_power(unit, p)
    restricted = ctx.alg.zero()
    for r in range(n):
        for c in range(n):
            if mp[r][c]:
                restricted = restricted + ctx.e(r + 1, c + 1) * mp[r][c]
    return ctx.e(i, j) ** p - restricted


def _require_modp(ctx):
    if not ctx.char:
        raise ValueError("a context of positive characteristic is required")


def centrality_by_generator(ctx, a):
    return {ctx.alg.names[k]: commutator(a, g).is_zero() for k, g in enumerate(ctx.generators())}


def frobenius_central_elements(ctx):
    """[(label, element, report)] for x_i^p, y_i^p and e_ij^p - e_ij^[p]."""
    _require_modp(ctx)
    p, n = ctx.char, ctx.n
    items = [(f"x[{i}]^{p}", lambda i=i: ctx.x(i) ** p) for i in range(1, n + 1)]
    items += [(f"y[{i}]^{p}", lambda i=i: ctx.y(i) ** p) for i in range(1, n + 1)]
    items += [(f"e[{i},{j}]^{p} - e[{i},{j}]^[{p}]", lambda i=i, j=j: restricted_power_element(ctx, i, j))
              for i in range(1, n + 1) for j in range(1, n + 1)]
    out = []
    for label, build in items:
        start = time.perf_counter()
        elem = build()
        rep = ModpReport(p, n, ctx.m, label, centrality_by_generator(ctx, elem))
        rep.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        out.append((label, elem, rep))
    return out


def modp_casimirs(ctx):
    """[(t_i, report)] for the Casimirs solved over F_p."""
    _require_modp(ctx)
    out = []
    for i in range(1, ctx.n + 1):
        start = time.perf_counter()
        res = ctx.casimir(i)
        rep = ModpReport(ctx.char, ctx.n, ctx.m, f"t_{i}", centrality_by_generator(ctx, res.t))
        rep.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        out.append((res.t, rep))
    return out


def reduce_element(elem, ctx_p):
    """Image mod p of an element of a characteristic-0 context with the same n."""
    F = ctx_p.field
    terms = {}
    for mono, c in elem.terms.items():
        if c.denominator % ctx_p.char == 0:
            raise ZeroDivisionError(f"coefficient {c} is not p-integral")
        v = F(c)
        if v:
            terms[mono] = v
    return Element(ctx_p.alg, terms)


def reduction_compatible(ctx0, ctx_p):
    """Per i: (reduced char-0 t_i is central mod p, it equals the mod-p solver's t_i)."""
    out = []
    for i in range(1, ctx0.n + 1):
        red = reduce_element(ctx0.casimir(i).t, ctx_p)
        out.append((ctx_p.is_central(red), red == ctx_p.casimir(i).t))
    return out


def lift_poly(f):
    """Integer lift of a polynomial over F_p (representatives in [0, p))."""
    return Poly({m: c.value if isinstance(c, Residue) else c for m, c in f.terms.items()})


def jacobian_rank_at_random_point(polys, seed=0):
    """Rank over Q of the Jacobian of integer-lifted polynomials at a seeded point."""
    lifted = [lift_poly(f) for f in polys]
    variables = sorted({v for f in lifted for v in f.variables()})
    rng = random.Random(seed)
    point = {v: rng.randint(1, 97) for v in variables}
    J = [[f.diff(v).evaluate(point) for v in variables] for f in lifted]
    return rank(J)


def z0_symbols(ctx, elements):
    weights = (1,) * ctx.alg.ngens
    return [elem.symbol(weights) for _, elem, _ in elements]
