"""Exact Hankel determinants.

``H_n(A) = det(a_{i+j})_{0 <= i, j < n}`` with ``H_0 = 1``.  Entries are
scaled to integers and the determinant is taken by Bareiss fraction-free
elimination, so every intermediate value is an exact integer.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exactnum import Scalar, as_fraction
from .series import PowerSeries


class InsufficientOrderError(ValueError):
    pass


def hankel_matrix(coeffs: Sequence[Scalar], n: int) -> list[list[Fraction]]:
    if n > 0 and len(coeffs) < 2 * n - 1:
        raise InsufficientOrderError(
            f"H_{n} needs coefficients a_0..a_{2 * n - 2}, have {len(coeffs)}")
    return [[as_fraction(coeffs[i + j]) for j in range(n)] for i in range(n)]


def bareiss_det(m: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss, with row pivoting)."""
    a = [row[:] for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rational_det(m: list[list[Fraction]]) -> Fraction:
    """Clear denominators, run :func:`bareiss_det`, divide back."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = math.lcm(*(x.denominator for row in m for x in row))
    ints = [[int(x * scale) for x in row] for row in m]
    return Fraction(bareiss_det(ints), scale ** n)


def hankel_det(series: PowerSeries | Sequence[Scalar], n: int, scale: Scalar = 1) -> Fraction:
    """``H_n`` of ``scale * series``."""
    if n < 0:
        raise ValueError("negative Hankel order")
    if n == 0:
        return Fraction(1)
    coeffs = series.coeffs if isinstance(series, PowerSeries) else series
    return rational_det(hankel_matrix(coeffs, n)) * as_fraction(scale) ** n


def hankel_table(series: PowerSeries | Sequence[Scalar], max_n: int,
                 scale: Scalar = 1) -> list[Fraction]:
    """``[H_0, ..., H_max_n]``."""
    return [hankel_det(series, n, scale) for n in range(max_n + 1)]
