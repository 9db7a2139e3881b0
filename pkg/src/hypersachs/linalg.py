"""Exact integer linear algebra: determinants and characteristic polynomials.

Everything here works over plain Python integers; divisions are exact by
construction and asserted.
"""

from __future__ import annotations


def bareiss_det(matrix: list[list[int]]) -> int:
    """Determinant of a square integer matrix, fraction-free (Bareiss).

    Intermediate values stay integral; row swaps flip the sign.
    """
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for j in range(n - 1):
        if m[j][j] == 0:
            for i in range(j + 1, n):
                if m[i][j] != 0:
                    m[j], m[i] = m[i], m[j]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(j + 1, n):
            for l in range(j + 1, n):
                num = m[i][l] * m[j][j] - m[i][j] * m[j][l]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss division must be exact"
                m[i][l] = q
            m[i][j] = 0
        prev = m[j][j]
    return sign * m[n - 1][n - 1]


def charpoly_int(matrix: list[list[int]]) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - A) of an integer matrix.

    Returns coefficients (1, c_1, ..., c_n) so the polynomial is
    x^n + c_1 x^{n-1} + ... + c_n.  Uses the Faddeev-LeVerrier recurrence;
    the division by the step index is exact for integer matrices.
    """
    n = len(matrix)
    coeffs = [1]
    if n == 0:
        return tuple(coeffs)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def mat_mul(a, b):
        return [
            [sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]

    work = [row[:] for row in matrix]
    for step in range(1, n + 1):
        trace = sum(work[i][i] for i in range(n))
        q, r = divmod(-trace, step)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(q)
        if step == n:
            break
        shifted = [
            [work[i][j] + q * ident[i][j] for j in range(n)] for i in range(n)
        ]
        work = mat_mul(matrix, shifted)
    return tuple(coeffs)


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of two integer polynomials given as coefficient lists (leading first)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b for integer polynomials (leading coefficients first)."""
    a = a[:]
    out = []
    lead = b[0]
    for i in range(len(a) - len(b) + 1):
        q, r = divmod(a[i], lead)
        assert r == 0, "polynomial division must be exact"
        out.append(q)
        for j, y in enumerate(b):
            a[i + j] -= q * y
    assert all(x == 0 for x in a), "polynomial division must be exact"
    return out
