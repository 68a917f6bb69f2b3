"""The algebraic degree of semidefinite programming, exactly.

degree(m, n, r) counts, for a generic m-dimensional affine space of
symmetric n x n matrices, the tangent hyperplanes contributed by rank-r
optima; combinatorially it is the sum of psi(I) * psi(complement of I)
over the strictly increasing subsequences I of {1..n} with length n - r
and entry sum m.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .indexseq import Sequence, complement, enumerate_sequences
from .psi import PsiCache, _psi_rec, psi_oracle


class OracleMismatchError(Exception):
    """The Pfaffian route and the minor-sum route disagreed on some term."""

    def __init__(self, seq: Sequence, closed_term: int, oracle_term: int):
        self.seq = seq
        self.closed_term = closed_term
        self.oracle_term = oracle_term
        super().__init__(
            f"route mismatch at I={seq}: closed form gives {closed_term},"
            f" minor-sum oracle gives {oracle_term}"
        )


@dataclass(frozen=True)
class DegreeResult:
    value: int
    term_count: int
    in_range: bool


@dataclass(frozen=True)
class BidegreeTable:
    n: int
    r: int
    rows: list[tuple[int, int]] = field(default_factory=list)


def allowable_range(n: int, r: int) -> tuple[int, int]:
    """Closed interval of m for which the degree is defined and positive.

    Only 1 <= r <= n-1 has a meaningful range; the rank bounds 0 and n are
    rejected.
    """
    if n < 2 or not 1 <= r <= n - 1:
        raise ValueError(f"allowable range needs 1 <= r <= n-1, got n={n}, r={r}")
    m_min = (n - r) * (n - r + 1) // 2
    m_max = n * (n + 1) // 2 - r * (r + 1) // 2
    return m_min, m_max


def _validate_query(m: int, n: int, r: int) -> None:
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got n={n}")
    if not 0 <= r <= n:
        raise ValueError(f"rank bound must satisfy 0 <= r <= n, got r={r} for n={n}")
    if m < 0:
        raise ValueError(f"dimension must be >= 0, got m={m}")


def _in_range(m: int, n: int, r: int) -> bool:
    if not 1 <= r <= n - 1:
        return False
    m_min, m_max = allowable_range(n, r)
    return m_min <= m <= m_max


def _sum_terms(terms: list[tuple[Sequence, Sequence]], cache: PsiCache) -> int:
    return sum(_psi_rec(seq, cache) * _psi_rec(comp, cache) for seq, comp in terms)


def degree(m: int, n: int, r: int, cache: PsiCache | None = None,
           threads: int = 1) -> DegreeResult:
    """Exact degree for the query (m, n, r).

    Out-of-range queries are not an error: the sum is literally empty
    there, so the value is 0 and in_range is False.  With threads > 1 the
    terms are split into contiguous chunks whose exact partial sums are
    added in chunk order, so the result is bit-identical for any worker
    count.
    """
    _validate_query(m, n, r)
    if cache is None:
        cache = PsiCache()
    terms = [(seq, complement(seq, n)) for seq in enumerate_sequences(n, n - r, m)]
    if threads > 1 and len(terms) > 1:
        workers = min(threads, len(terms))
        step = (len(terms) + workers - 1) // workers
        chunks = [terms[pos:pos + step] for pos in range(0, len(terms), step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            value = sum(pool.map(lambda chunk: _sum_terms(chunk, cache), chunks))
    else:
        value = _sum_terms(terms, cache)
    return DegreeResult(value=value, term_count=len(terms), in_range=_in_range(m, n, r))


def degree_verified(m: int, n: int, r: int, cache: PsiCache | None = None) -> DegreeResult:
    """degree(m, n, r) with every term independently cross-checked.

    Each term is evaluated both by the Pfaffian closed form and by the
    minor-sum oracle; the first disagreeing term raises
    OracleMismatchError carrying both values.
    """
    _validate_query(m, n, r)
    if cache is None:
        cache = PsiCache()
    value = 0
    count = 0
    for seq in enumerate_sequences(n, n - r, m):
        comp = complement(seq, n)
        closed_term = _psi_rec(seq, cache) * _psi_rec(comp, cache)
        oracle_term = psi_oracle(seq) * psi_oracle(comp)
        if closed_term != oracle_term:
            raise OracleMismatchError(seq, closed_term, oracle_term)
        value += closed_term
        count += 1
    return DegreeResult(value=value, term_count=count, in_range=_in_range(m, n, r))


def bidegree_coefficients(n: int, r: int, cache: PsiCache | None = None,
                          threads: int = 1) -> BidegreeTable:
    """All degrees for fixed (n, r) across the allowable m interval.

    These are the coefficients of the bidegree generating polynomial of
    the rank-r locus; complements of early terms recur as primary terms of
    later ones, so the whole table shares one cache.
    """
    m_min, m_max = allowable_range(n, r)
    if cache is None:
        cache = PsiCache()
    rows = [(m, degree(m, n, r, cache, threads).value) for m in range(m_min, m_max + 1)]
    return BidegreeTable(n=n, r=r, rows=rows)
