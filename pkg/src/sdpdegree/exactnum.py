"""Exact integer kernels: binomials, determinants, Pfaffians.

Everything works on plain Python ints, which are arbitrary precision, so
all results are exact no matter how large the intermediates grow.
"""

from __future__ import annotations

import math

Matrix = list[list[int]]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _check_square(rows) -> int:
    dim = len(rows)
    if any(len(row) != dim for row in rows):
        raise ValueError("matrix is not square")
    return dim


def check_skew(rows: Matrix) -> int:
    """Validate skew-symmetry (zero diagonal, rows[k][l] == -rows[l][k]).

    Returns the dimension; raises ValueError on any violation.
    """
    dim = _check_square(rows)
    for k in range(dim):
        if rows[k][k] != 0:
            raise ValueError(f"diagonal entry [{k}][{k}] = {rows[k][k]} is nonzero")
        for l in range(k + 1, dim):
            if rows[k][l] != -rows[l][k]:
                raise ValueError(f"entries [{k}][{l}] and [{l}][{k}] are not antisymmetric")
    return dim


def skew_from_upper(dim: int, upper) -> Matrix:
    """Build a skew-symmetric matrix from its strict upper triangle.

    `upper` lists the entries (0,1), (0,2), ..., (0,dim-1), (1,2), ... in
    row-major order.
    """
    upper = list(upper)
    if len(upper) != dim * (dim - 1) // 2:
        raise ValueError(f"expected {dim * (dim - 1) // 2} upper entries, got {len(upper)}")
    rows = [[0] * dim for _ in range(dim)]
    pos = 0
    for k in range(dim):
        for l in range(k + 1, dim):
            rows[k][l] = upper[pos]
            rows[l][k] = -upper[pos]
            pos += 1
    return rows


def pfaffian(rows: Matrix) -> int:
    """Pfaffian of an even-dimensional skew-symmetric integer matrix.

    Expands along the first active row, Pf = sum_k (-1)^k a_{1k} Pf(minor),
    memoizing on the set of active indices since overlapping minors recur
    heavily.  The empty matrix has Pfaffian 1.
    """
    dim = check_skew(rows)
    if dim % 2:
        raise ValueError(f"Pfaffian needs even dimension, got {dim}")
    memo: dict[tuple[int, ...], int] = {}

    def pf(active: tuple[int, ...]) -> int:
        if not active:
            return 1
        val = memo.get(active)
        if val is not None:
            return val
        first = active[0]
        total = 0
        sign = 1
        for pos in range(1, len(active)):
            entry = rows[first][active[pos]]
            if entry:
                total += sign * entry * pf(active[1:pos] + active[pos + 1:])
            sign = -sign
        memo[active] = total
        return total

    return pf(tuple(range(dim)))


def determinant(rows: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division along the way is exact over the integers.  The 0x0
    determinant is 1.
    """
    dim = _check_square(rows)
    if dim == 0:
        return 1
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(dim - 1):
        if m[k][k] == 0:
            for i in range(k + 1, dim):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, dim):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, dim):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[-1][-1]
