"""Exact integer matrices: determinants, Hermite and Smith normal forms,
integer kernels and cokernels.

Matrices are lists of rows of Python ints, so entries never overflow. All
functions return fresh lists and leave their arguments alone.
"""

from __future__ import annotations

from typing import List

IntMatrix = List[List[int]]

__all__ = [
    "IntMatrix",
    "shape",
    "identity",
    "zeros",
    "copy",
    "transpose",
    "matmul",
    "det",
    "rank",
    "hermite_normal_form",
    "smith_normal_form",
    "invariant_factors",
    "cokernel_invariants",
    "integer_kernel",
    "is_unimodular",
]


def shape(A: IntMatrix) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> IntMatrix:
    return [[0] * c for _ in range(r)]


def copy(A: IntMatrix) -> IntMatrix:
    return [list(row) for row in A]


def transpose(A: IntMatrix, cols: int | None = None) -> IntMatrix:
    """Transpose; ``cols`` fixes the row count of the result when A has no rows."""
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*A)]


def matmul(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    if A and len(A[0]) != len(B):
        raise ValueError("inner dimensions differ")
    Bt = transpose(B, len(B[0]) if B else 0)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def det(A: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = copy(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (pivot * M[i][j] - M[i][k] * M[k][j]) // prev
        prev = pivot
    return sign * M[n - 1][n - 1]


def hermite_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, T)`` with ``T`` unimodular and ``H = T A``. Pivots are
    positive, entries above a pivot lie in ``[0, pivot)``, zero rows sit at
    the bottom. H is unique for the row lattice of A.
    """
    rows, cols = shape(A)
    H = copy(A)
    T = identity(rows)
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        # gcd-combine everything at or below row r into row r
        while True:
            nz = [i for i in range(r, rows) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                H[r], H[p] = H[p], H[r]
                T[r], T[p] = T[p], T[r]
            done = True
            for i in range(r + 1, rows):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    _row_axpy(H, i, r, -q)
                    _row_axpy(T, i, r, -q)
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            T[r] = [-x for x in T[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                _row_axpy(H, i, r, -q)
                _row_axpy(T, i, r, -q)
        r += 1
    return H, T


def _row_axpy(M, i, j, q):
    # row i += q * row j
    ri, rj = M[i], M[j]
    for k in range(len(ri)):
        ri[k] += q * rj[k]


def _col_axpy(M, i, j, q):
    # col i += q * col j
    for row in M:
        row[i] += q * row[j]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(U, D, V)`` with ``A = U D V``.

    U and V are unimodular; D is diagonal with nonnegative entries
    d_1 | d_2 | ... (zeros last).
    """
    rows, cols = shape(A)
    D = copy(A)
    U = identity(rows)  # invariant: A = U D V throughout
    V = identity(cols)
    t = 0
    while t < min(rows, cols):
        nz = [(i, j) for i in range(t, rows) for j in range(t, cols) if D[i][j]]
        if not nz:
            break
        i, j = min(nz, key=lambda ij: (abs(D[ij[0]][ij[1]]), ij))
        _swap_rows_tracked(D, U, t, i)
        _swap_cols_tracked(D, V, t, j)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    _rowop_tracked(D, U, i, t, -q)
                    if D[i][t]:
                        _swap_rows_tracked(D, U, t, i)
                        changed = True
            for j in range(t + 1, cols):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    _colop_tracked(D, V, j, t, -q)
                    if D[t][j]:
                        _swap_cols_tracked(D, V, t, j)
                        changed = True
            if changed:
                continue
            # pivot must divide the remaining block
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            _rowop_tracked(D, U, t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            for row in U:
                row[t] = -row[t]
        t += 1
    return U, D, V


def _swap_rows_tracked(D, U, a, b):
    if a != b:
        D[a], D[b] = D[b], D[a]
        _swap_cols(U, a, b)


def _swap_cols_tracked(D, V, a, b):
    if a != b:
        _swap_cols(D, a, b)
        V[a], V[b] = V[b], V[a]


def _rowop_tracked(D, U, i, j, q):
    # D <- E D with E: row i += q row j; then U <- U E^-1, i.e. col j -= q col i
    _row_axpy(D, i, j, q)
    _col_axpy(U, j, i, -q)


def _colop_tracked(D, V, i, j, q):
    # D <- D E with E: col i += q col j; then V <- E^-1 V, i.e. row j -= q row i
    _col_axpy(D, i, j, q)
    _row_axpy(V, j, i, -q)


def invariant_factors(A: IntMatrix) -> list[int]:
    """Diagonal of the Smith form (length min(rows, cols))."""
    _, D, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(shape(A)))]


def rank(A: IntMatrix) -> int:
    return sum(1 for d in invariant_factors(A) if d)


def cokernel_invariants(A: IntMatrix, rows: int | None = None) -> list[int]:
    """Invariant factors of Z^rows / (column span of A).

    Factors equal to 1 are dropped; each free summand contributes a 0, e.g.
    ``[2, 0]`` is Z/2 + Z. ``rows`` is needed only when A has no columns.
    """
    n = len(A) if A else (rows or 0)
    if not A or not A[0]:
        return [0] * n
    ds = invariant_factors(A)
    out = [d for d in ds if d not in (0, 1)]
    out += [0] * (n - sum(1 for d in ds if d))
    return out


def integer_kernel(A: IntMatrix, cols: int | None = None) -> IntMatrix:
    """Basis of {x : A x = 0} over Z, as the columns of the returned matrix.

    The basis is saturated and canonical: its transpose is in Hermite normal
    form, so equal kernels give identical output. ``cols`` is needed only
    when A has no rows.
    """
    n = len(A[0]) if A else (cols or 0)
    # column-echelon A via the row HNF of A^T: H = T A^T, so rows of T
    # matching zero rows of H span the kernel
    At = transpose(A, n)
    H, T = hermite_normal_form(At)
    kernel_rows = [T[i] for i in range(n) if not any(H[i])]
    if not kernel_rows:
        return [[] for _ in range(n)]
    K, _ = hermite_normal_form(kernel_rows)
    return transpose([row for row in K if any(row)], n)


def is_unimodular(A: IntMatrix) -> bool:
    r, c = shape(A)
    return r == c and abs(det(A)) == 1
