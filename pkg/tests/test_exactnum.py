"""Exact kernel tests: binomial, determinant, Pfaffian.

The determinant is checked against plain cofactor expansion and the
Pfaffian against the signed perfect-matching sum; both oracles live here
and share no code with the library routines they check.
"""

import math
import random

import pytest

from sdpdegree.exactnum import (
    binomial,
    check_skew,
    determinant,
    pfaffian,
    skew_from_upper,
)


def det_cofactor(rows):
    """Independent oracle: Laplace expansion along the first row."""
    dim = len(rows)
    if dim == 0:
        return 1
    if dim == 1:
        return rows[0][0]
    total = 0
    for col in range(dim):
        if rows[0][col] == 0:
            continue
        minor = [row[:col] + row[col + 1:] for row in rows[1:]]
        total += (-1) ** col * rows[0][col] * det_cofactor(minor)
    return total


def pf_matching_sum(rows):
    """Independent oracle: sum of signed perfect matchings.

    The sign of a matching {(i1,j1),...,(ik,jk)} with i1<i2<... and il<jl
    is the parity of the flattened permutation (i1,j1,i2,j2,...).
    """
    dim = len(rows)
    if dim == 0:
        return 1

    def parity(perm):
        inversions = sum(
            1
            for a in range(len(perm))
            for b in range(a + 1, len(perm))
            if perm[a] > perm[b]
        )
        return -1 if inversions % 2 else 1

    def matchings(items):
        if not items:
            yield []
            return
        first = items[0]
        for pos in range(1, len(items)):
            rest = items[1:pos] + items[pos + 1:]
            for tail in matchings(rest):
                yield [(first, items[pos])] + tail

    total = 0
    for matching in matchings(list(range(dim))):
        flat = [v for pair in matching for v in pair]
        product = parity(flat)
        for i, j in matching:
            product *= rows[i][j]
        total += product
    return total


def random_skew(rng, dim):
    upper = [rng.randint(-100, 100) for _ in range(dim * (dim - 1) // 2)]
    return skew_from_upper(dim, upper)


def test_binomial_small_values():
    assert binomial(4, 2) == 6
    # appears inside psi of the pair (3,5): 35 = C(6,3) + C(6,4)
    assert binomial(6, 3) == math.factorial(6) // (math.factorial(3) * math.factorial(3))
    assert binomial(6, 3) == 20
    assert binomial(5, 7) == 0
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_rule():
    for n in range(1, 65):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_determinant_examples():
    assert determinant([[1, 1], [1, 2]]) == 1
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert determinant([[1, 0], [1, 1]]) == 1
    assert determinant([]) == 1
    assert determinant([[0, 1], [0, 2]]) == 0


def test_determinant_rejects_ragged():
    with pytest.raises(ValueError):
        determinant([[1, 2], [3]])


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(20080514)
    for _ in range(1000):
        dim = rng.randint(0, 4)
        rows = [[rng.randint(-10, 10) for _ in range(dim)] for _ in range(dim)]
        assert determinant(rows) == det_cofactor(rows)


def test_pfaffian_base_cases():
    assert pfaffian([]) == 1
    assert pfaffian([[0, 7], [-7, 0]]) == 7


def test_pfaffian_four_by_four():
    # upper entries (a12,a13,a14,a23,a24,a34); matching sum 1*10 - 3*10 + 7*3
    rows = skew_from_upper(4, [1, 3, 7, 3, 10, 10])
    assert pf_matching_sum(rows) == 1
    assert pfaffian(rows) == 1


def test_pfaffian_matches_matching_sum():
    rng = random.Random(7)
    for _ in range(80):
        dim = rng.choice([0, 2, 4, 6])
        rows = random_skew(rng, dim)
        assert pfaffian(rows) == pf_matching_sum(rows)


def test_pfaffian_squares_to_determinant():
    rng = random.Random(11)
    for _ in range(300):
        dim = rng.choice([0, 2, 4, 6, 8])
        rows = random_skew(rng, dim)
        assert pfaffian(rows) ** 2 == determinant(rows)


def test_pfaffian_swap_negates():
    rng = random.Random(13)
    for _ in range(100):
        dim = rng.choice([2, 4, 6, 8])
        rows = random_skew(rng, dim)
        k, l = rng.sample(range(dim), 2)
        swapped = [row[:] for row in rows]
        swapped[k], swapped[l] = swapped[l], swapped[k]
        for row in swapped:
            row[k], row[l] = row[l], row[k]
        assert pfaffian(swapped) == -pfaffian(rows)


def test_pfaffian_rejects_odd_dimension():
    with pytest.raises(ValueError):
        pfaffian([[0, 1, 2], [-1, 0, 3], [-2, -3, 0]])


def test_pfaffian_rejects_asymmetry():
    with pytest.raises(ValueError):
        pfaffian([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        pfaffian([[1, 2], [-2, 0]])


def test_skew_builder_and_checker():
    rows = skew_from_upper(4, [1, 2, 3, 4, 5, 6])
    assert check_skew(rows) == 4
    assert rows[2][1] == -4
    with pytest.raises(ValueError):
        skew_from_upper(4, [1, 2, 3])
