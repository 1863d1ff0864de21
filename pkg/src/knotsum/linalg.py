"""Exact linear algebra over the integers and rationals.

Everything here is exact: Bareiss elimination for integer determinants,
Lagrange interpolation for determinants of matrix pencils A + t*B, a
minor-expansion determinant for matrices of Laurent polynomials, and
congruence diagonalization over the rationals for symmetric signatures.
No floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPolynomial


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def pencil_determinant(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> LaurentPolynomial:
    """det(A + t*B) for integer matrices A, B, as an exact polynomial in t.

    The determinant has degree at most n, so n + 1 integer evaluations
    pin it down; each evaluation runs through Bareiss elimination.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError("pencil matrices differ in size")
    if n == 0:
        return LaurentPolynomial.constant(1)
    points = list(range(n + 1))
    values = []
    for x in points:
        mx = [[a[i][j] + x * b[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_determinant(mx))
    coeffs = _lagrange_integer_coefficients(points, values)
    return LaurentPolynomial.from_dict({e: c for e, c in enumerate(coeffs)})


def _lagrange_integer_coefficients(points: list[int], values: list[int]) -> list[int]:
    n = len(points)
    total = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(points, values)):
        # numerator polynomial prod_{j != i} (x - xj), built coefficient-wise
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            nxt = [Fraction(0)] * (len(num) + 1)
            for k, c in enumerate(num):
                nxt[k] -= c * xj
                nxt[k + 1] += c
            num = nxt
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for k, c in enumerate(num):
            total[k] += c * scale
    out = []
    for c in total:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return out


def laurent_matrix_determinant(
    matrix: Sequence[Sequence[LaurentPolynomial]],
) -> LaurentPolynomial:
    """Determinant of a square Laurent-polynomial matrix.

    Uses minor expansion memoized on column subsets: exact, division free,
    and fine for the small matrices produced by the reduced Burau
    representation (strand counts stay in the single digits).
    """
    n = len(matrix)
    if n == 0:
        return LaurentPolynomial.constant(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    full_mask = (1 << n) - 1
    memo: dict[int, LaurentPolynomial] = {full_mask: LaurentPolynomial.constant(1)}

    def det_for(mask: int) -> LaurentPolynomial:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        row = bin(mask).count("1")
        total = LaurentPolynomial()
        sign = 1
        for col in range(n):
            bit = 1 << col
            if mask & bit:
                continue
            entry = matrix[row][col]
            if not entry.is_zero():
                sub = det_for(mask | bit)
                term = entry * sub
                total = total + (term if sign > 0 else -term)
            sign = -sign
        memo[mask] = total
        return total

    return det_for(0)


def symmetric_signature(matrix: Sequence[Sequence[int]]) -> int:
    """Signature of a symmetric integer matrix by exact congruence diagonalization.

    Zero rows contribute nothing. Rational pivots only; no eigenvalues.
    """
    n = len(matrix)
    m = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix is not symmetric")
    sig = 0
    live = list(range(n))
    while live:
        pivot = next((i for i in live if m[i][i] != 0), None)
        if pivot is None:
            pair = next(
                ((i, j) for i in live for j in live if i < j and m[i][j] != 0), None
            )
            if pair is None:
                break  # remaining block is zero
            i, j = pair
            # congruence: add row/column j into i to expose a nonzero diagonal
            for k in range(n):
                m[i][k] += m[j][k]
            for k in range(n):
                m[k][i] += m[k][j]
            continue
        d = m[pivot][pivot]
        sig += 1 if d > 0 else -1
        live.remove(pivot)
        for i in live:
            factor = m[i][pivot] / d
            if factor == 0:
                continue
            for k in range(n):
                m[i][k] -= factor * m[pivot][k]
            for k in range(n):
                m[k][i] -= factor * m[k][pivot]
    return sig
