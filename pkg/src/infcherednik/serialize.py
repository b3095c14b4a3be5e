"""JSON wire format shared by all element types.

An element is a list of ``[coefficient, monomial]`` pairs.  Coefficients
are strings ``"p/q"`` (rationals) or ``"k mod p"`` (residues).  A monomial
is ``{"a": [[u, v, exp]...], "e": [[i, j, exp]...], "x": [[i, exp]...],
"y": [[i, exp]...]}`` with absent keys meaning empty; series variables,
when present, appear as ``"t": exp`` and ``"tau": exp``.  For
noncommutative elements the lists follow the normal (product) order.
"""

from .pbw import Element
from .polyseries import A, E, X, Y, T, TAU, Poly, scalar_to_str
from .verma import VermaVector

_KEYS = {A: "a", E: "e", X: "x", Y: "y"}


def monomial_to_obj(pairs):
    obj = {}
    for v, k in pairs:
        kind = v[0]
        if kind in (T, TAU):
            obj["t" if kind == T else "tau"] = k
        else:
            obj.setdefault(_KEYS[kind], []).append(list(v[1:]) + [k])
    return obj


def obj_to_pairs(obj):
    """Monomial object -> list of (variable, exponent) in listed order (x, e, y, a, t, tau)."""
    pairs = []
    for key, kind in (("x", X), ("e", E), ("y", Y), ("a", A)):
        for entry in obj.get(key, []):
            *idx, k = entry
            if k:
                pairs.append(((kind, *idx), k))
    for key, kind in (("t", T), ("tau", TAU)):
        if obj.get(key):
            pairs.append(((kind,), obj[key]))
    return pairs


def _element_pairs(alg, mono):
    return [(alg.gen_vars[i], k) for i, k in enumerate(mono) if k]


def to_json(obj):
    if isinstance(obj, Poly):
        return [[scalar_to_str(c), monomial_to_obj(m)] for m, c in obj.sorted_terms()]
    if isinstance(obj, Element):
        return [[scalar_to_str(c), monomial_to_obj(_element_pairs(obj.alg, m))] for m, c in obj.sorted_terms()]
    if isinstance(obj, VermaVector):
        alg = obj.module.ctx.alg
        return [[scalar_to_str(c), monomial_to_obj(_element_pairs(alg, m))]
                for m, c in sorted(obj.terms.items())]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def poly_from_json(data, field):
    out = Poly(field=field)
    for coeff, mono in data:
        pairs = tuple(sorted(obj_to_pairs(mono)))
        out = out + Poly({pairs: field.parse(coeff)}, field)
    return out


def element_from_json(data, alg):
    """Rebuild an element by straightening each monomial read as a word."""
    index = {v: i for i, v in enumerate(alg.gen_vars)}
    out = alg.zero()
    for coeff, mono in data:
        word = []
        for v, k in obj_to_pairs(mono):
            word.extend([index[v]] * k)
        out = out + alg.normal_form_word(word, alg.field.parse(coeff))
    return out
