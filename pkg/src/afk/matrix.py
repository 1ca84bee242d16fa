"""Dense matrices over LaurentPoly (lists of rows).  Small sizes only."""
from __future__ import annotations

from typing import Callable

from .qlaurent import ONE, ZERO, LaurentPoly, lsum, reduce_fraction

Matrix = list[list[LaurentPoly]]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def diag(entries: list[LaurentPoly]) -> Matrix:
    n = len(entries)
    return [[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[lsum(x * y for x, y in zip(row, col) if x and y) for col in cols] for row in a]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c: LaurentPoly, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def entrywise(f: Callable[[LaurentPoly], LaurentPoly], a: Matrix) -> Matrix:
    return [[f(x) for x in row] for row in a]


def matpow(a: Matrix, p: int) -> Matrix:
    out = identity(len(a))
    for _ in range(p):
        out = matmul(out, a)
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b)
    out = zeros(n * m)
    for i in range(n):
        for j in range(n):
            if not a[i][j]:
                continue
            for k in range(m):
                for l in range(m):
                    if b[k][l]:
                        out[i * m + k][j * m + l] = a[i][j] * b[k][l]
    return out


def is_zero(a: Matrix) -> bool:
    return all(not x for row in a for x in row)


def apply(a: Matrix, v: list[LaurentPoly]) -> list[LaurentPoly]:
    return [lsum(x * y for x, y in zip(row, v) if x and y) for row in a]


def solve_fraction_free(columns: list[list[LaurentPoly]], rhs: list[LaurentPoly]):
    """Solve sum_k c_k columns[k] = rhs over the fraction field Q(q).

    Returns ``None`` when the system is inconsistent, otherwise a list of
    reduced ``(numerator, denominator)`` pairs (free unknowns are set to 0).
    Elimination is cross-multiplying, so no division happens until the
    back-substitution, which stays in fraction form.
    """
    nrows = len(rhs)
    ncols = len(columns)
    rows = [[columns[k][r] for k in range(ncols)] + [rhs[r]] for r in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [p * x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i][ncols]:
            return None
    sol = [(ZERO, ONE)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = reduce_fraction(rows[i][ncols], rows[i][c])
    return sol
