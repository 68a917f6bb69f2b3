"""Strictly increasing index sequences and their enumeration.

Sequences are plain tuples of 1-based positive integers in strictly
increasing order; the empty tuple is a valid sequence.  The canonical text
form is comma-separated entries ("1,3,5"), empty string for the empty
sequence.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

Sequence = tuple[int, ...]


def as_sequence(entries: Iterable[int]) -> Sequence:
    """Validate and normalise to a tuple; rejects anything not strictly
    increasing or containing entries < 1."""
    seq = tuple(entries)
    for pos, value in enumerate(seq):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"sequence entry {value!r} is not an integer")
        if value < 1:
            raise ValueError(f"sequence entry {value} is < 1")
        if pos and seq[pos - 1] >= value:
            raise ValueError(f"sequence {seq} is not strictly increasing")
    return seq


def format_sequence(seq: Iterable[int]) -> str:
    """Canonical text form: "1,3,5"; the empty sequence renders as ""."""
    return ",".join(str(v) for v in seq)


def parse_sequence(text: str) -> Sequence:
    """Inverse of format_sequence, with full validation."""
    text = text.strip()
    if not text:
        return ()
    try:
        entries = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse sequence from {text!r}") from None
    return as_sequence(entries)


def weight(seq: Iterable[int]) -> int:
    """Sum of the entries; 0 for the empty sequence."""
    return sum(seq)


def schur_degree(seq: Iterable[int]) -> int:
    """weight(seq) - e(e+1)/2 for a length-e sequence (0 for 1,2,...,e)."""
    seq = tuple(seq)
    e = len(seq)
    return sum(seq) - e * (e + 1) // 2


def complement(seq: Iterable[int], n: int) -> Sequence:
    """Complement within {1..n}, again strictly increasing."""
    seq = as_sequence(seq)
    if seq and (seq[0] < 1 or seq[-1] > n):
        raise ValueError(f"sequence {seq} does not fit inside 1..{n}")
    members = set(seq)
    return tuple(v for v in range(1, n + 1) if v not in members)


def enumerate_sequences(n: int, length: int, total: int) -> Iterator[Sequence]:
    """Yield the strictly increasing sequences in {1..n} with the given
    length and entry sum, in lexicographic order.

    Backtracks with sum-feasibility pruning: a branch dies as soon as the
    remaining slots cannot reach (or cannot avoid overshooting) the target.
    Infeasible queries yield nothing.
    """
    if n < 0 or length < 0 or length > n:
        raise ValueError(f"invalid enumeration query n={n}, length={length}")
    if total < 0:
        raise ValueError(f"invalid enumeration query sum={total}")

    prefix = [0] * length

    def extend(pos: int, lo: int, remaining: int) -> Iterator[Sequence]:
        if pos == length:
            if remaining == 0:
                yield tuple(prefix)
            return
        slots = length - pos - 1
        for value in range(lo, n - slots + 1):
            rest = remaining - value
            # least/greatest achievable by the remaining strictly larger slots
            least = slots * value + slots * (slots + 1) // 2
            greatest = slots * n - slots * (slots - 1) // 2
            if rest < least:
                break
            if rest > greatest:
                continue
            prefix[pos] = value
            yield from extend(pos + 1, value + 1, rest)

    return extend(0, 1, total)
