"""Exact Gaussian elimination over the rationals.

Partial pivoting picks, among the nonzero candidates in the pivot column, the
entry whose numerator has the largest bit length; any exact pivot rule is
correct, this one keeps coefficient growth in check.  Singularity raises
SingularSystemError (for the orthogonality systems it signals parameters that
violate the AT property).
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import SingularSystemError


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Solve A x = b exactly for square A over Fraction."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve_exact needs a square system")
    a = [[Fraction(v) for v in row] for row in matrix]
    b = [Fraction(v) for v in rhs]
    for col in range(n):
        pivot_row = None
        pivot_bits = -1
        for r in range(col, n):
            v = a[r][col]
            if v != 0 and v.numerator.bit_length() > pivot_bits:
                pivot_row = r
                pivot_bits = v.numerator.bit_length()
        if pivot_row is None:
            raise SingularSystemError(f"no pivot in column {col}")
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            b[col], b[pivot_row] = b[pivot_row], b[col]
        piv = a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / piv
            if factor == 0:
                continue
            for cc in range(col, n):
                a[r][cc] -= factor * a[col][cc]
            b[r] -= factor * b[col]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = b[r]
        for cc in range(r + 1, n):
            s -= a[r][cc] * x[cc]
        x[r] = s / a[r][r]
    return x
