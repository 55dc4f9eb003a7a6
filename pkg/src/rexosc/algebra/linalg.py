"""Exact determinants over commutative rings."""

from __future__ import annotations

from fractions import Fraction

from .poly import ONE, Poly

#: Below this size polynomial determinants use cofactor expansion.
COFACTOR_CUTOFF = 5


def det(matrix, one=Fraction(1)):
    """Determinant over any commutative ring with ``+``, ``-`` and ``*``.

    Division-free Laplace expansion along the first row with memoized
    minors, i.e. ``O(2**n * n)`` ring operations.  ``one`` is returned for
    the empty matrix.
    """
    n = len(matrix)
    if n == 0:
        return one
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    memo: dict[tuple[int, ...], object] = {}

    def minor(row: int, cols: tuple[int, ...]):
        # determinant of rows row..n-1 restricted to cols
        if len(cols) == 1:
            return matrix[row][cols[0]]
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = None
        for k, c in enumerate(cols):
            entry = matrix[row][c]
            if not entry:
                continue
            term = entry * minor(row + 1, cols[:k] + cols[k + 1:])
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = matrix[row][cols[0]] * 0
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def bareiss(matrix: list[list[Poly]]) -> Poly:
    """Fraction-free (Bareiss) elimination for polynomial matrices."""
    n = len(matrix)
    if n == 0:
        return ONE
    a = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = Poly()
        prev = pivot
    return a[n - 1][n - 1] * sign


def poly_det(matrix: list[list[Poly]]) -> Poly:
    """Determinant of a polynomial matrix."""
    if len(matrix) < COFACTOR_CUTOFF:
        return det(matrix, one=ONE)
    return bareiss(matrix)
