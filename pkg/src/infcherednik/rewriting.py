"""Word rewriting with a choice of redex, used to probe confluence.

Independent of the memoized engine in ``pbw``: elements are dicts of
arbitrary words, and one adjacent inversion g_i g_j (i > j) is rewritten
at a time as g_j g_i + [g_i, g_j] until every word is sorted.
"""

import random


def _leftmost(inv, rng):
    return inv[0]


def _rightmost(inv, rng):
    return inv[-1]


def _random(inv, rng):
    return rng.choice(inv)


STRATEGIES = {"leftmost": _leftmost, "rightmost": _rightmost, "random": _random}


def rewrite_normal_form(alg, word, strategy="leftmost", rng=None, max_steps=2_000_000):
    """Normal form of ``word`` as ``{exponent tuple: coeff}``."""
    pick = STRATEGIES[strategy]
    rng = rng or random.Random(0)
    one = alg.field.one
    pending = {tuple(word): one}
    done = {}
    steps = 0
    while pending:
        w, c = pending.popitem()
        inv = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
        if not inv:
            mono = [0] * alg.ngens
            for g in w:
                mono[g] += 1
            mono = tuple(mono)
            s = done.get(mono, 0) + c
            if s:
                done[mono] = s
            else:
                done.pop(mono, None)
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate within the step budget")
        k = pick(inv, rng)
        i, j = w[k], w[k + 1]
        head, tail = w[:k], w[k + 2:]
        _push(pending, head + (j, i) + tail, c)
        for bm, bc in alg.bracket_terms(i, j).items():
            _push(pending, head + alg.word(bm) + tail, c * bc)
    return done


def _push(pending, w, c):
    s = pending.get(w, 0) + c
    if s:
        pending[w] = s
    else:
        pending.pop(w, None)
