"""Exact integer/rational linear algebra for small intersection matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def leading_minors(a: Matrix) -> list[int]:
    """Leading principal minors det(A[:k, :k]) for k = 1..n, by Bareiss elimination.

    No pivoting is done, so the sequence stops early at the first vanishing
    minor (the remaining minors are not computed and the returned list is
    shorter than n).
    """
    n = len(a)
    m = [list(row) for row in a]
    minors = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return minors


def determinant(a: Matrix) -> int:
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_negative_definite(a: Matrix) -> bool:
    """Sylvester's criterion: (-1)^k det(A_k) > 0 for every leading minor.

    The empty matrix counts as negative definite.
    """
    n = len(a)
    minors = leading_minors(a)
    if len(minors) < n:
        return False
    return all((d < 0) if k % 2 == 0 else (d > 0) for k, d in enumerate(minors))


def solve(a: Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve A x = rhs exactly by Gauss-Jordan elimination over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n] for row in m]


def continuants(weights: Sequence[int]) -> list[int]:
    """Prefix determinants of the chain matrix with diagonal ``weights`` and off-diagonal -1.

    ``out[k]`` is the determinant of the first k rows/columns, out[0] = 1.
    """
    out = [1, weights[0]] if weights else [1]
    for w in weights[1:]:
        out.append(w * out[-1] - out[-2])
    return out


def solve_chain(self_int: Sequence[int], rhs: Sequence[int]) -> tuple[list[int], int]:
    """Solve the linear chain system with diagonal ``self_int`` and off-diagonal +1.

    Returns integer numerators and a common denominator ``d`` (d > 0 when the
    chain matrix is negative definite), so that ``x_i = num[i] / d``.
    The inverse of a tridiagonal matrix is expressed with prefix and suffix
    continuants, which keeps everything in integers.
    """
    n = len(self_int)
    w = [-x for x in self_int]
    pre = continuants(w)
    suf = continuants(w[::-1])[::-1]
    # suf[k] = det of rows k..n-1, suf[n] = 1
    d = pre[n]
    nonzero = [(j, r) for j, r in enumerate(rhs) if r]
    num = []
    for i in range(n):
        total = 0
        for j, r in nonzero:
            lo, hi = (i, j) if i <= j else (j, i)
            total += pre[lo] * suf[hi + 1] * r
        num.append(-total)
    return num, d
