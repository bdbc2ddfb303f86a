"""Exact integer linear algebra: rank, Hermite normal form, saturation.

Matrices are lists of rows of Python ints, so there is no overflow. Rational
solves use :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import DegenerateSpanError, DimensionError, SaturationError, SpanError

IntMatrix = list[list[int]]


def _as_matrix(M) -> IntMatrix:
    rows = [list(r) for r in M]
    if rows and len({len(r) for r in rows}) != 1:
        raise DimensionError("matrix rows have different lengths")
    return rows


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M) -> IntMatrix:
    return [list(c) for c in zip(*M)]


def matmul(A, B) -> IntMatrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def rank(M) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    A = _as_matrix(M)
    if not A:
        return 0
    m, n = len(A), len(A[0])
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            f = A[i][c]
            row_i, row_r = A[i], A[r]
            A[i] = [(p * row_i[j] - f * row_r[j]) // prev for j in range(n)]
        prev = p
        r += 1
        if r == m:
            break
    return r


def determinant(M) -> int:
    A = _as_matrix(M)
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise DimensionError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        p = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (p * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = p
    return sign * A[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_form(M) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``. Pivots of
    ``H`` are positive, entries above a pivot are reduced into
    ``[0, pivot)``, and zero rows come last.
    """
    A = _as_matrix(M)
    m = len(A)
    n = len(A[0]) if A else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        rows = [i for i in range(r, m) if A[i][c] != 0]
        if not rows:
            continue
        # fold every nonzero entry of column c into row r via 2x2 unimodular steps
        for i in rows:
            if i == r:
                continue
            a, b = A[r][c], A[i][c]
            if A[r][c] == 0:
                A[r], A[i] = A[i], A[r]
                U[r], U[i] = U[i], U[r]
                continue
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            Ar, Ai, Ur, Ui = A[r], A[i], U[r], U[i]
            A[r] = [x * u + y * v for u, v in zip(Ar, Ai)]
            A[i] = [p * v - q * u for u, v in zip(Ar, Ai)]
            U[r] = [x * u + y * v for u, v in zip(Ur, Ui)]
            U[i] = [p * v - q * u for u, v in zip(Ur, Ui)]
        if A[r][c] < 0:
            A[r] = [-v for v in A[r]]
            U[r] = [-v for v in U[r]]
        piv = A[r][c]
        for i in range(r):
            f = A[i][c] // piv
            if f:
                A[i] = [u - f * v for u, v in zip(A[i], A[r])]
                U[i] = [u - f * v for u, v in zip(U[i], U[r])]
        r += 1
    return A, U


def left_kernel(M) -> IntMatrix:
    """Basis (as rows) of the lattice ``{y in Z^m : y @ M == 0}``."""
    A = _as_matrix(M)
    H, U = hermite_form(A)
    return [U[i] for i, row in enumerate(H) if not any(row)]


def max_minor_gcd(B) -> int:
    """gcd of the maximal minors of a full-row-rank matrix ``B``."""
    B = _as_matrix(B)
    k = len(B)
    if k == 0:
        return 1
    g = 0
    for cols in combinations(range(len(B[0])), k):
        g = gcd(g, determinant([[row[c] for c in cols] for row in B]))
        if g == 1:
            return 1
    return g


def saturation_basis(vectors: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of ``Z^n`` intersected with the rational span of ``vectors``.

    The result is returned in Hermite normal form, so it is canonical for
    the saturated lattice.
    """
    V = _as_matrix(vectors)
    if not V:
        raise DegenerateSpanError("no vectors given")
    if not any(any(v) for v in V):
        raise DegenerateSpanError("all input vectors are zero")
    n = len(V[0])
    orth = left_kernel(transpose(V))        # y with V y = 0
    if not orth:
        return identity(n)
    sat = left_kernel(transpose(orth))      # x with orth x = 0
    H, _ = hermite_form(sat)
    return [row for row in H if any(row)]


def solve_rational(basis: Sequence[Sequence[int]], v: Sequence[int]) -> list[Fraction]:
    """Coefficients ``c`` with ``sum c_i basis_i == v``, or raise SpanError."""
    k = len(basis)
    n = len(v)
    # augmented system basis^T c = v, solved by Gauss-Jordan over Q
    A = [[Fraction(basis[i][j]) for i in range(k)] + [Fraction(v[j])] for j in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    if len(pivots) < k:
        raise DimensionError("basis vectors are linearly dependent")
    if any(A[i][k] != 0 for i in range(r, n)):
        raise SpanError(f"vector {list(v)} is outside the span of the basis")
    coeffs = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        coeffs[c] = A[i][k]
    return coeffs


def coordinates_in_basis(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int]:
    coeffs = solve_rational(basis, v)
    if any(c.denominator != 1 for c in coeffs):
        raise SaturationError(f"vector {list(v)} has non-integral coordinates {coeffs}")
    return [int(c) for c in coeffs]
