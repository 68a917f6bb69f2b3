"""The coefficient function psi on index sequences, by two independent routes.

The closed route evaluates a Pfaffian built from the one- and two-index
values (psi_single, psi_pair); the oracle route sums minors of the Pascal
lower-triangular matrix.  Agreement of the two routes is the library's
built-in correctness check.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .exactnum import binomial, determinant
from .indexseq import Sequence, as_sequence, format_sequence, parse_sequence


def psi_single(i: int) -> int:
    """psi of a single index: 2^(i-1)."""
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    return 1 << (i - 1)


@lru_cache(maxsize=None)
def psi_pair(i: int, j: int) -> int:
    """psi of an index pair i < j: sum of C(i+j-2, k) for k in i..j-1."""
    if i < 1 or i >= j:
        raise ValueError(f"pair requires 1 <= i < j, got ({i}, {j})")
    return sum(binomial(i + j - 2, k) for k in range(i, j))


class PsiCache:
    """Memo table from canonical sequence text to psi value.

    Keys are independent of any ambient n, so one cache serves every query.
    Writes of identical key/value pairs may race benignly: dict operations
    are atomic and every writer stores the same value for a given key.
    """

    def __init__(self):
        self._data: dict[str, int] = {}

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key: str) -> bool:
        return key in self._data

    def get(self, key: str) -> int | None:
        return self._data.get(key)

    def put(self, key: str, value: int) -> None:
        self._data[key] = value

    def items(self):
        return self._data.items()

    def save(self, path) -> None:
        """Write one `<sequence>:<value>` record per line, sorted by key."""
        lines = [f"{key}:{value}\n" for key, value in sorted(self._data.items())]
        with open(path, "w") as handle:
            handle.writelines(lines)

    @classmethod
    def load(cls, path, spot_check: int = 16, seed: int = 0) -> "PsiCache":
        """Read a cache file, then re-validate a deterministic sample.

        Each sampled entry is recomputed from scratch against an empty
        cache; any disagreement (or malformed line) raises ValueError.
        """
        cache = cls()
        with open(path) as handle:
            for lineno, line in enumerate(handle, start=1):
                line = line.rstrip("\n")
                if not line:
                    continue
                key, sep, value_text = line.rpartition(":")
                if not sep:
                    raise ValueError(f"{path}:{lineno}: malformed record {line!r}")
                seq = parse_sequence(key)
                try:
                    value = int(value_text)
                except ValueError:
                    raise ValueError(f"{path}:{lineno}: bad integer {value_text!r}") from None
                cache.put(format_sequence(seq), value)
        if spot_check and len(cache):
            keys = sorted(cache._data)
            sample = random.Random(seed).sample(keys, min(spot_check, len(keys)))
            for key in sample:
                expected = psi_closed(parse_sequence(key), PsiCache())
                if cache._data[key] != expected:
                    raise ValueError(
                        f"cache entry {key!r} = {cache._data[key]} fails re-validation"
                        f" (recomputed {expected})"
                    )
        return cache


def psi_closed(seq, cache: PsiCache | None = None) -> int:
    """psi via the Pfaffian closed form.

    Even-length sequences take the Pfaffian of the skew matrix of pair
    values; odd-length ones are augmented with a virtual leading index
    whose pairings are the single-index values.  The recursion expands
    along the first row and memoizes every sub-Pfaffian in `cache` (each
    one is itself the psi of an even subsequence).
    """
    seq = as_sequence(seq)
    if cache is None:
        cache = PsiCache()
    return _psi_rec(seq, cache)


def _psi_rec(seq: Sequence, cache: PsiCache) -> int:
    key = format_sequence(seq)
    val = cache.get(key)
    if val is not None:
        return val
    e = len(seq)
    if e == 0:
        val = 1
    elif e == 1:
        val = psi_single(seq[0])
    elif e == 2:
        val = psi_pair(seq[0], seq[1])
    elif e % 2:
        # virtual index sits in the first row, pairing via psi_single
        val = 0
        sign = 1
        for pos in range(e):
            val += sign * psi_single(seq[pos]) * _psi_rec(seq[:pos] + seq[pos + 1:], cache)
            sign = -sign
    else:
        val = 0
        sign = 1
        first = seq[0]
        for pos in range(1, e):
            val += sign * psi_pair(first, seq[pos]) * _psi_rec(seq[1:pos] + seq[pos + 1:], cache)
            sign = -sign
    cache.put(key, val)
    return val


def pascal_minor(rows_idx, cols_idx) -> int:
    """Minor of the infinite Pascal matrix (entry(i,j) = C(i-1, j-1)).

    Rows and columns are selected by two equally long strictly increasing
    sequences.  Whenever some column index exceeds its row index the minor
    is 0 by lower-triangularity.
    """
    rows_idx = as_sequence(rows_idx)
    cols_idx = as_sequence(cols_idx)
    if len(rows_idx) != len(cols_idx):
        raise ValueError(
            f"row and column selections differ in length: {len(rows_idx)} vs {len(cols_idx)}"
        )
    if any(j > i for i, j in zip(rows_idx, cols_idx)):
        return 0
    sub = [[binomial(i - 1, j - 1) for j in cols_idx] for i in rows_idx]
    return determinant(sub)


def _column_choices(seq: Sequence):
    # strictly increasing J with J[k] <= seq[k], the only J with nonzero minor
    e = len(seq)
    choice = [0] * e

    def extend(pos: int, lo: int):
        if pos == e:
            yield tuple(choice)
            return
        for value in range(lo, seq[pos] + 1):
            choice[pos] = value
            yield from extend(pos + 1, value + 1)

    yield from extend(0, 1)


def psi_oracle(seq) -> int:
    """psi via the independent minor-sum route.

    Sums pascal_minor(seq, J) over every strictly increasing J of the same
    length with J[k] <= seq[k]; all other J give vanishing minors, which
    makes the nominally infinite sum finite.
    """
    seq = as_sequence(seq)
    if not seq:
        return 1
    return sum(pascal_minor(seq, cols) for cols in _column_choices(seq))
