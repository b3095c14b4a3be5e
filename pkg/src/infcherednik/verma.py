"""Verma modules M(lambda) = H_b (x)_{U(C) (x) H_+} C_lambda.

A vector is a combination of H_- monomials (x-part times strictly lower
e-part) applied to the highest-weight vector v_lambda.  Acting by a in
H_b means normalizing a * monomial in the triangular order and then
letting y's and upper e's kill v_lambda and the diagonal act by lambda.
"""

from itertools import product

from .pbw import commutator
from .polyseries import Residue, nullspace


class VermaVector:
    """Sparse map from H_- monomials (full H_b exponent tuples) to scalars."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms):
        self.module = module
        self.terms = terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return VermaVector(self.module, out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        c = self.module.field(c)
        if not c:
            return VermaVector(self.module, {})
        return VermaVector(self.module, {m: v * c for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def depth(self):
        depths = {self.module.mono_depth(m) for m in self.terms}
        return depths.pop() if len(depths) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        alg = self.module.ctx.alg
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: mc[0]):
            s = alg.mono_str(m)
            parts.append(f"{c}*{s}*v" if s else f"{c}*v")
        return " + ".join(parts)


class VermaModule:
    def __init__(self, ctx, lam):
        if len(lam) != ctx.n:
            raise ValueError(f"weight must have {ctx.n} entries")
        self.ctx = ctx
        self.field = ctx.field
        self.lam = tuple(ctx.field(v) for v in lam)
        self.kind = []
        for lab in ctx.labels:
            if lab[0] == "x" or (lab[0] == "e" and lab[1] > lab[2]):
                self.kind.append("minus")
            elif lab[0] == "e" and lab[1] == lab[2]:
                self.kind.append("diag")
            else:
                self.kind.append("plus")
        self.minus_gens = [k for k, kd in enumerate(self.kind) if kd == "minus"]
        self.delta = delta_element(ctx)
        self.drops = {}
        self.weights = {}
        for k in self.minus_gens:
            g = ctx.alg.gen(k)
            self.drops[k] = -_as_int(_eigenvalue(commutator(self.delta, g), g))
            self.weights[k] = tuple(_eigenvalue(commutator(ctx.e(i, i), g), g) for i in range(1, ctx.n + 1))

    def highest(self):
        return VermaVector(self, {self.ctx.alg.unit: self.field.one})

    def vector(self, mono, c=1):
        return VermaVector(self, {mono: self.field(c)})

    def _truncate(self, terms):
        out = {}
        lam = self.lam
        for mono, c in terms.items():
            coeff = c
            keep = list(mono)
            dead = False
            for k, exp in enumerate(mono):
                if not exp:
                    continue
                kd = self.kind[k]
                if kd == "plus":
                    dead = True
                    break
                if kd == "diag":
                    i = self.ctx.labels[k][1]
                    coeff = coeff * lam[i - 1] ** exp
                    keep[k] = 0
            if dead or not coeff:
                continue
            keep = tuple(keep)
            s = out.get(keep, 0) + coeff
            if s:
                out[keep] = s
            else:
                out.pop(keep, None)
        return out

    def act(self, a, v):
        alg = self.ctx.alg
        total = {}
        for mono, c in v.terms.items():
            prod = alg.mul_terms(a.terms, {mono: c})
            for m, val in self._truncate(prod).items():
                s = total.get(m, 0) + val
                if s:
                    total[m] = s
                else:
                    total.pop(m, None)
        return VermaVector(self, total)

    def mono_depth(self, mono):
        return sum(self.drops[k] * mono[k] for k in self.minus_gens)

    def mono_weight(self, mono):
        w = list(self.lam)
        for k in self.minus_gens:
            for i in range(self.ctx.n):
                w[i] = w[i] + self.weights[k][i] * mono[k]
        return tuple(w)

    def basis(self, depth):
        """H_- monomials whose delta-drop equals ``depth``."""
        gens = self.minus_gens
        ranges = [range(depth // self.drops[k] + 1) for k in gens]
        out = []
        for exps in product(*ranges):
            if sum(self.drops[k] * e for k, e in zip(gens, exps)) != depth:
                continue
            mono = [0] * self.ctx.alg.ngens
            for k, e in zip(gens, exps):
                mono[k] = e
            out.append(tuple(mono))
        return sorted(out)

    def weight_space_dim(self, depth):
        return len(self.basis(depth))

    def raising_operators(self):
        return [self.ctx.alg.gen(k) for k, kd in enumerate(self.kind) if kd == "plus"]


def _eigenvalue(image, g):
    """The scalar c with image == c * g (g a generator)."""
    (mono,) = g.terms
    if image.is_zero():
        return 0
    if set(image.terms) != {mono}:
        raise ValueError("not an eigenvector")
    return image.terms[mono]


def _as_int(c):
    """Small integer represented by a scalar (symmetric residue in F_p)."""
    if isinstance(c, Residue):
        return c.value if c.value <= c.p // 2 else c.value - c.p
    if c.denominator != 1:
        raise ValueError(f"{c} is not an integer")
    return int(c)


def delta_element(ctx):
    """delta = diag(n, n-1, ..., 1) in the Cartan subalgebra."""
    n = ctx.n
    total = ctx.alg.zero()
    for i in range(1, n + 1):
        total = total + ctx.e(i, i) * (n - i + 1)
    return total


def delta_grading(ctx):
    """delta, checked to have positive eigenvalues on L_+ and negative on L_-."""
    delta = delta_element(ctx)
    for k, lab in enumerate(ctx.labels):
        g = ctx.alg.gen(k)
        ev = _as_int(_eigenvalue(commutator(delta, g), g))
        positive = lab[0] == "y" or (lab[0] == "e" and lab[1] < lab[2])
        negative = lab[0] == "x" or (lab[0] == "e" and lab[1] > lab[2])
        if (positive and not ev > 0) or (negative and not ev < 0) or (not positive and not negative and ev != 0):
            raise AssertionError(f"delta has the wrong sign on {lab}")
    return delta


def weight_space_dim(ctx, lam, depth):
    return VermaModule(ctx, lam).weight_space_dim(depth)


def verma_act(ctx, lam, a, v):
    module = v.module
    if module.ctx is not ctx or module.lam != tuple(ctx.field(c) for c in lam):
        module = VermaModule(ctx, lam)
    return module.act(a, v)


def central_character(ctx, lam, check_depth=0):
    """chi_i(lambda) with t_i v_lambda = chi_i(lambda) v_lambda, i = 1..n.

    With ``check_depth > 0`` also verifies that t_i - chi_i kills every basis
    vector of depth <= check_depth.
    """
    module = lam if isinstance(lam, VermaModule) else VermaModule(ctx, lam)
    hw = module.highest()
    chis = []
    for i in range(1, ctx.n + 1):
        t = ctx.casimir(i).t
        image = module.act(t, hw)
        if set(image.terms) - {ctx.alg.unit}:
            raise ArithmeticError(f"t_{i} v_lambda is not proportional to v_lambda")
        chis.append(image.terms.get(ctx.alg.unit, ctx.field.zero))
    if check_depth:
        bad = scalar_action_failures(module, chis, check_depth)
        if bad:
            raise ArithmeticError(f"central elements do not act by scalars: {bad[:3]}")
    return chis


def scalar_action_failures(module, chis, depth):
    """(i, monomial) pairs where (t_i - chi_i) does not annihilate the basis vector."""
    ctx = module.ctx
    bad = []
    for i, chi in zip(range(1, ctx.n + 1), chis):
        t = ctx.casimir(i).t - ctx.scalar(chi)
        for k in range(depth + 1):
            for mono in module.basis(k):
                if not module.act(t, module.vector(mono)).is_zero():
                    bad.append((i, mono))
    return bad


def singular_vectors(ctx, lam, depth):
    """Singular vectors in depths 1..depth as (vector, C-weight, depth) triples.

    Each delta-graded piece is split into C-weight spaces, and the common
    kernel of all y_j and strictly upper e_ij is computed exactly there.
    """
    module = lam if isinstance(lam, VermaModule) else VermaModule(ctx, lam)
    raising = module.raising_operators()
    found = []
    for k in range(1, depth + 1):
        by_weight = {}
        for mono in module.basis(k):
            by_weight.setdefault(module.mono_weight(mono), []).append(mono)
        for wt in sorted(by_weight, key=lambda w: tuple(str(c) for c in w)):
            monos = by_weight[wt]
            images = [[module.act(r, module.vector(mono)) for r in raising] for mono in monos]
            keys = sorted({(ri, m) for img in images for ri, v in enumerate(img) for m in v.terms})
            rows = [[img[ri].terms.get(m, ctx.field.zero) for img in images] for ri, m in keys]
            for vec in nullspace(rows, len(monos), ctx.field):
                v = VermaVector(module, {m: c for m, c in zip(monos, vec) if c})
                found.append((v, wt, k))
    return found
