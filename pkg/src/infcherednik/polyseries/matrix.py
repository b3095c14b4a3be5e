"""Polynomial matrices and exact dense linear algebra over Q / F_p."""

from .poly import Poly, a, t
from .scalars import QQ

MAX_DET_SIZE = 4


def poly_det(M, max_size=MAX_DET_SIZE):
    """Determinant of a square matrix of Poly by cofactor expansion."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n > max_size:
        raise ValueError(f"determinant size {n} exceeds bound {max_size}")
    if n == 0:
        raise ValueError("empty matrix")
    field = M[0][0].field

    def rec(rows, cols):
        if len(rows) == 1:
            return M[rows[0]][cols[0]]
        total = Poly(field=field)
        r, rest = rows[0], rows[1:]
        for k, c in enumerate(cols):
            entry = M[r][c]
            if not entry:
                continue
            minor = rec(rest, cols[:k] + cols[k + 1:])
            total = total + entry * minor if k % 2 == 0 else total - entry * minor
        return total

    return rec(tuple(range(n)), tuple(range(n)))


def generic_matrix(n, field=QQ):
    return [[Poly.var(a(u, v), field) for v in range(1, n + 1)] for u in range(1, n + 1)]


def charpoly_matrix(n, field=QQ):
    """tI - A with symbolic entries."""
    T = Poly.var(t, field)
    return [[(T if u == v else 0) - Poly.var(a(u, v), field) for v in range(1, n + 1)]
            for u in range(1, n + 1)]


def one_minus_tA(n, field=QQ):
    T = Poly.var(t, field)
    return [[Poly.const(1 if u == v else 0, field) - T * Poly.var(a(u, v), field)
             for v in range(1, n + 1)] for u in range(1, n + 1)]


# dense exact linear algebra on lists of scalars

def rref(rows, field=QQ):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    R = [[field(c) for c in row] for row in rows]
    if not R:
        return R, []
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.one / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [vi - f * vr for vi, vr in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(rows, field=QQ):
    return len(rref(rows, field)[1])


def nullspace(rows, ncols, field=QQ):
    """Basis of {v : rows @ v = 0}."""
    if not rows:
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


class SingularSystemError(ValueError):
    pass


def solve(A, b, field=QQ):
    """Unique solution of A v = b; raises SingularSystemError otherwise."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, pivots = rref(aug, field)
    if n in pivots:
        raise SingularSystemError("inconsistent system")
    if len(pivots) < n:
        raise SingularSystemError("solution not unique")
    return [R[i][n] for i in range(n)]


def mat_mul(A, B):
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), 0 * A[0][0]) for j in range(len(B[0]))]
            for i in range(len(A))]


def mat_vec(A, v):
    return [sum((A[i][k] * v[k] for k in range(len(v))), 0 * A[0][0]) for i in range(len(A))]


def transpose(A):
    return [list(col) for col in zip(*A)]


def inverse(A, field=QQ):
    n = len(A)
    aug = [list(A[i]) + [field.one if i == j else field.zero for j in range(n)] for i in range(n)]
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        raise SingularSystemError("matrix is singular")
    return [row[n:] for row in R]
