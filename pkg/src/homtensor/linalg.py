"""Dense exact linear algebra over QQ or GF(p).

Matrices are lists of rows.  Every routine works on copies and leaves its
arguments untouched.
"""

from __future__ import annotations

from .field import QQ, field_of

__all__ = [
    "identity",
    "transpose",
    "matmul",
    "kron",
    "row_reduce",
    "matrix_rank",
    "solve_linear",
    "solve_vandermonde",
    "vandermonde",
    "is_invertible",
    "inverse",
]


def _infer_field(rows, field):
    if field is not None:
        return field
    for row in rows:
        for x in row:
            return field_of(x)
    return QQ


def identity(n: int, field=QQ):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def matmul(A, B, field=None):
    zero = _infer_field(A, field).zero
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), zero) for col in Bt] for row in A]


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def row_reduce(M, field=None):
    """Reduced row echelon form.  Returns ``(R, pivot_columns)``."""
    field = _infer_field(M, field)
    R = [[field(x) for x in row] for row in M]
    n_rows = len(R)
    n_cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(n_rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def matrix_rank(M, field=None) -> int:
    if not M or not M[0]:
        return 0
    return len(row_reduce(M, field)[1])


def solve_linear(A, b, field=None):
    """Solve ``A x = b``.

    Returns one solution (free variables set to zero) or ``None`` when the
    system is inconsistent.
    """
    if len(A) != len(b):
        raise ValueError(f"A has {len(A)} rows but b has length {len(b)}")
    field = _infer_field(A, field) if A and A[0] else _infer_field([b], field)
    n = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    if not aug:
        return [field.zero] * n
    R, pivots = row_reduce(aug, field)
    if n in pivots:
        return None
    x = [field.zero] * n
    for row, c in zip(R, pivots):
        x[c] = row[n]
    return x


def vandermonde(nodes, rows: int):
    """The ``rows x len(nodes)`` matrix whose row ``j`` holds ``nodes**j``."""
    return [[x**j for x in nodes] for j in range(rows)]


def solve_vandermonde(nodes, rhs, degree: int, field=None):
    if len(set(nodes)) != len(nodes):
        raise ValueError("nodes not distinct")
    if len(rhs) != degree + 1:
        raise ValueError(f"rhs must have length degree+1 = {degree + 1}")
    field = field or _infer_field([list(nodes) + list(rhs)], None)
    nodes = [field(x) for x in nodes]
    return solve_linear(vandermonde(nodes, degree + 1), [field(x) for x in rhs], field)


def is_invertible(M, field=None) -> bool:
    return len(M) == len(M[0]) and matrix_rank(M, field) == len(M)


def inverse(M, field=None):
    field = _infer_field(M, field)
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    aug = [list(row) + e for row, e in zip(M, identity(n, field))]
    R, pivots = row_reduce(aug, field)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in R]
