"""Exact symbolic computation in infinitesimal Cherednik algebras H_b of gl_n."""

from .cherednik import CasimirError, Filtration, HbContext, hb_commutator, hb_context, hb_mul
from .envelope import alpha, envelope, symmetrize
from .exprparse import ExprError, format_expr, parse_expr
from .invariants import cprime_top_symbol, dualize, q_invariant, r_series
from .pbw import commutator
from .poisson import f_dets, gr_t, poisson_algebra
from .verma import VermaModule, central_character, singular_vectors

__version__ = "0.1.0"
