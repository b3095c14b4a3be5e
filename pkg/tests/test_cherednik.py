from fractions import Fraction
from itertools import product
import random

import pytest
import sympy

from infcherednik.cherednik import (CasimirError, Filtration, HbContext, hb_commutator, hb_context,
                                    hb_mul, min_admissible_prime, is_admissible_prime)
from infcherednik.envelope import envelope, symmetrize
from infcherednik.invariants import cprime_top_symbol, dualize
from infcherednik.pbw import commutator
from infcherednik.polyseries import Poly, e, x, y
from conftest import random_element


def test_context_validation():
    with pytest.raises(ValueError):
        HbContext(1, 1, [0, 2])
    with pytest.raises(ValueError):
        HbContext(1, 0, [1])
    with pytest.raises(ValueError):
        HbContext(1, 1, [0])
    with pytest.raises(ValueError):
        HbContext(1, 1, [0, 1], char=3)
    with pytest.raises(ValueError):
        HbContext(1, 1, [0, 1], char=9)
    assert is_admissible_prime(5, 1, 1) and not is_admissible_prime(3, 1, 1)
    assert min_admissible_prime(2, 1) == 5


def test_bracket_n1_m1(ctx11):
    U = ctx11.ug
    assert ctx11.bracket_table(1, 1) == U.scalar(3) + U.e(1, 1) * 2


def test_bracket_n2_m1(ctx21):
    U = ctx21.ug
    assert ctx21.bracket_table(1, 2) == U.e(1, 2)
    assert ctx21.bracket_table(1, 1) == U.scalar(2) + U.e(1, 1) * 2 + U.e(2, 2)


def test_bracket_n1_m2(ctx12):
    U = ctx12.ug
    assert ctx12.bracket_table(1, 1) == U.scalar(1) + U.e(1, 1) * (2 * -2) + U.e(1, 1) ** 2 * 3


def test_bracket_table_matches_series_oracle():
    """[y_i, x_j] = sum_k b_k sym(dualize(r_k(x_j, y_i))) with r_k taken from sympy."""
    ctx = HbContext(2, 2, [Fraction(1, 2), 3, 1])
    ts = sympy.Symbol("t")
    M = sympy.Matrix(2, 2, lambda i, j: sympy.Symbol(f"a{i + 1}{j + 1}"))
    one = sympy.eye(2) - ts * M
    G = one.adjugate() / one.det() ** 2
    syms = {sympy.Symbol(f"a{u}{v}"): e(v, u) for u in (1, 2) for v in (1, 2)}
    for i, j in product((1, 2), repeat=2):
        ser = sympy.series(G[j - 1, i - 1], ts, 0, 3).removeO()
        total = ctx.ug.zero()
        for k, bk in enumerate(ctx.b):
            coeff = sympy.Poly(sympy.expand(ser.coeff(ts, k)), *syms)
            s = Poly({tuple(sorted((syms[g], int(p)) for g, p in zip(syms, mono) if p)): Fraction(str(c))
                      for mono, c in coeff.terms()})
            total = total + symmetrize(s, ctx.ug) * bk
        assert ctx.bracket_table(i, j) == total


def test_normal_form_examples(ctx11):
    c = ctx11
    assert c.normal_form([("y", 1), ("x", 1)]) == c.x(1) * c.y(1) + c.scalar(3) + c.e(1, 1) * 2
    assert c.normal_form([("x", 1), ("y", 1)]).terms == {(1, 0, 1): 1}
    assert c.normal_form([("e", 1, 1), ("x", 1)]) == c.x(1) * c.e(1, 1) - c.x(1)
    with pytest.raises(IndexError):
        c.normal_form([("x", 2)])


def test_commutator_examples(ctx21):
    c = ctx21
    assert hb_commutator(c.e(1, 1), c.y(1)) == c.y(1)
    assert hb_commutator(c.y(1), c.x(1)) == c.ug_to_hb(c.bracket_table(1, 1))
    assert hb_commutator(c.y(2), c.x(1)) == c.ug_to_hb(c.bracket_table(2, 1))
    xy = c.x(1) * c.y(1)
    assert hb_mul(xy, xy) == c.x(1) * (c.y(1) * c.x(1)) * c.y(1)


def test_defining_relations(ctx21):
    c = ctx21
    for i, j, k in product((1, 2), repeat=3):
        assert commutator(c.e(i, j), c.y(k)) == (c.y(i) if j == k else c.alg.zero())
        assert commutator(c.e(i, j), c.x(k)) == (-c.x(j) if i == k else c.alg.zero())
        assert commutator(c.x(i), c.x(j)).is_zero() and commutator(c.y(i), c.y(j)).is_zero()


@pytest.mark.parametrize("n,m,b", [(1, 1, [2, 1]), (1, 2, [1, -1, 1]), (2, 1, [3, 1]), (2, 2, [1, 2, 1])])
def test_associativity_random_triples(n, m, b):
    ctx = hb_context(n, m, b)
    rng = random.Random(100 + 10 * n + m)
    for _ in range(100):
        a_, b_, c_ = (random_element(ctx, rng, 3, 2) for _ in range(3))
        assert (a_ * b_) * c_ == a_ * (b_ * c_)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_jacobi_generator_triples(n, m):
    ctx = hb_context(n, m, [1] * (m + 1))
    gens = ctx.generators()
    for a_, b_, c_ in product(gens, repeat=3):
        jac = commutator(a_, commutator(b_, c_)) + commutator(b_, commutator(c_, a_)) + commutator(c_, commutator(a_, b_))
        assert jac.is_zero()


def test_normal_form_idempotent(ctx21):
    rng = random.Random(8)
    for _ in range(30):
        a_ = random_element(ctx21, rng)
        again = ctx21.alg.zero()
        for mono, c in a_.terms.items():
            again = again + ctx21.alg.normal_form_word(ctx21.alg.word(mono), c)
        assert again == a_


def test_filtration_examples(ctx11):
    c = ctx11
    elem = c.x(1) * c.y(1) + c.scalar(3) + c.e(1, 1) * 2
    # deg e = 1 < deg xy = 2, so only xy survives
    assert c.symbol(elem, Filtration.WEIGHTED) == Poly.var(x(1)) * Poly.var(y(1))
    assert c.symbol(elem, Filtration.STANDARD) == Poly.var(x(1)) * Poly.var(y(1))
    assert c.symbol(elem, Filtration.GONLY) == Poly.var(e(1, 1)) * 2
    assert c.filtration_degree(c.e(1, 1), Filtration.STANDARD) == 0
    assert c.filtration_degree(c.x(1), Filtration.WEIGHTED) == 1
    c3 = HbContext(1, 3, [0, 0, 0, 1])
    assert c3.filtration_degree(c3.x(1), Filtration.WEIGHTED) == 3
    with pytest.raises(ValueError):
        c.symbol(c.alg.zero(), Filtration.WEIGHTED)


@pytest.mark.parametrize("filt", [Filtration.STANDARD, Filtration.WEIGHTED])
def test_filtration_multiplicative(ctx21, filt):
    rng = random.Random(21)
    for _ in range(40):
        a_, b_ = random_element(ctx21, rng), random_element(ctx21, rng)
        if a_.is_zero() or b_.is_zero():
            continue
        prod_ = a_ * b_
        da, db = ctx21.filtration_degree(a_, filt), ctx21.filtration_degree(b_, filt)
        assert ctx21.filtration_degree(prod_, filt) <= da + db
        if not (ctx21.symbol(a_, filt) * ctx21.symbol(b_, filt)).is_zero():
            assert ctx21.filtration_degree(prod_, filt) == da + db
            if filt is Filtration.WEIGHTED:
                assert ctx21.symbol(prod_, filt) == ctx21.symbol(a_, filt) * ctx21.symbol(b_, filt)


def test_exp_ad_examples():
    for b0 in (0, 2, Fraction(-1, 3)):
        c = HbContext(1, 1, [b0, 1])
        assert c.exp_ad(c.x(1), c.x(1)) == c.x(1)
        assert c.exp_ad(c.y(1), c.x(1)) == c.x(1) + c.scalar(b0) + c.e(1, 1) * 2 - c.y(1)


def test_exp_ad_rejects_mixed(ctx11):
    with pytest.raises(ValueError):
        ctx11.exp_ad(ctx11.x(1) + ctx11.y(1), ctx11.e(1, 1))
    with pytest.raises(ValueError):
        ctx11.exp_ad(ctx11.e(1, 1), ctx11.x(1))


@pytest.mark.parametrize("ctxname", ["ctx11", "ctx21", "ctx12"])
def test_exp_ad_automorphism(ctxname, request):
    ctx = request.getfixturevalue(ctxname)
    rng = random.Random(31)
    vs = [ctx.x(1) * 2 + (ctx.x(ctx.n) if ctx.n > 1 else ctx.alg.zero()), ctx.y(1) * Fraction(1, 2)]
    for _ in range(15):
        a_, b_ = random_element(ctx, rng, 2, 2), random_element(ctx, rng, 2, 2)
        for v in vs:
            assert ctx.exp_ad(v, a_ * b_) == ctx.exp_ad(v, a_) * ctx.exp_ad(v, b_)


@pytest.mark.parametrize("b0", [0, 3, Fraction(-5, 2)])
def test_casimir_anchor(b0):
    c = HbContext(1, 1, [b0, 1])
    res = c.casimir(1)
    U = c.ug
    assert res.c == -U.e(1, 1) ** 2 + U.e(1, 1) * (1 - b0)
    e11 = c.e(1, 1)
    assert res.t == c.x(1) * c.y(1) + c.scalar(b0) + e11 * 2 + e11 ** 2 + e11 * (b0 - 1)
    assert res.c.constant_term() == 0


@pytest.mark.parametrize("n,m,b", [(1, 1, [3, 1]), (1, 2, [1, -2, 1]), (1, 3, [0, 1, 0, 1]),
                                   (2, 1, [2, 1]), (2, 1, [Fraction(1, 3), 1])])
def test_casimirs_central(n, m, b):
    ctx = hb_context(n, m, b)
    ts = [ctx.casimir(i).t for i in range(1, n + 1)]
    for i, t in enumerate(ts, start=1):
        assert ctx.is_central(t)
        s, s_alt = ctx.casimir_parts(i)
        assert s == s_alt
        assert ctx.casimir(i).c.constant_term() == 0
    for t1, t2 in product(ts, repeat=2):
        assert commutator(t1, t2).is_zero()


@pytest.mark.parametrize("n,m,i", [(1, 1, 1), (1, 2, 1), (1, 3, 1), (2, 1, 1), (2, 1, 2)])
def test_casimir_top_symbol_matches_cprime_up_to_sign(n, m, i):
    ctx = hb_context(n, m, [1] * (m + 1))
    res = ctx.casimir(i)
    ref = dualize(cprime_top_symbol(n, m, i))
    sym = ctx.symbol(res.c, Filtration.GONLY)
    assert sym in (ref, -ref)
    assert res.sign == (1 if sym == ref else -1)
    assert res.metadata["sign"] == res.sign


def test_recorded_signs():
    assert [hb_context(1, m, [1] * (m + 1)).casimir(1).sign for m in (1, 2, 3)] == [-1, -1, -1]
    ctx = hb_context(2, 1, [1, 1])
    assert [ctx.casimir(1).sign, ctx.casimir(2).sign] == [-1, 1]


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1)])
def test_gonly_symbol_of_t_is_minus_symbol_of_c(n, m):
    """t_i = s_i - c_i and s_i has g-degree i - 1 < m + i, so the top g-part of t_i is that of -c_i."""
    ctx = hb_context(n, m, [1] * (m + 1))
    for i in range(1, n + 1):
        res = ctx.casimir(i)
        s, _ = ctx.casimir_parts(i)
        assert ctx.filtration_degree(s, Filtration.GONLY) < ctx.filtration_degree(res.c, Filtration.GONLY)
        assert ctx.symbol(res.t, Filtration.GONLY) == -ctx.symbol(res.c, Filtration.GONLY)


def test_exp_ad_preserves_centrality(ctx21):
    for i in (1, 2):
        t = ctx21.casimir(i).t
        for v in (ctx21.x(1) - ctx21.x(2) * 3, ctx21.y(2)):
            assert ctx21.exp_ad(v, t) == t


def test_casimir_index_range(ctx11):
    with pytest.raises(ValueError):
        ctx11.casimir(2)


def test_is_central_examples(ctx11):
    assert ctx11.is_central(ctx11.scalar(1))
    assert not ctx11.is_central(ctx11.x(1))


@pytest.mark.parametrize("n,d,count", [(1, 3, 20), (2, 2, 45), (1, 0, 1), (2, 0, 1)])
def test_pbw_dimension_check(n, d, count):
    ctx = hb_context(n, 1, [0, 1])
    rep = {}
    assert ctx.pbw_dimension_check(d, samples=30, seed=1, report=rep)
    assert rep["count"] == count


def test_ug_roundtrip(ctx21):
    U = ctx21.ug
    u = U.e(2, 1) * U.e(1, 2) * U.e(1, 1) + U.scalar(2)
    assert ctx21.hb_to_ug(ctx21.ug_to_hb(u)) == u
    with pytest.raises(ValueError):
        ctx21.hb_to_ug(ctx21.x(1))
