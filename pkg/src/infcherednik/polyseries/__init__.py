"""Exact scalars, sparse polynomials, truncated series and polynomial matrices."""

from .scalars import QQ, Field, Residue, CharacteristicError, is_prime, scalar_to_str, reduce_mod
from .poly import Poly, A, E, X, Y, T, TAU, a, e, x, y, t, tau, var, const, var_name
from .series import TruncSeries, series_inverse, matrix_resolvent
from .matrix import (poly_det, generic_matrix, charpoly_matrix, one_minus_tA, rref, rank,
                     nullspace, solve, SingularSystemError, mat_mul, mat_vec, transpose, inverse)


def poly_arith(p, q, op):
    """``op`` is one of ``"add"``, ``"sub"``, ``"mul"``."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")
