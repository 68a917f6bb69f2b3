"""Exact computation of the algebraic degree of semidefinite programming.

The headline entry point is degree(m, n, r); psi_closed / psi_oracle give
the two independent routes to the coefficients it sums, and
degree_verified cross-checks them term by term.
"""

from .degree import (
    BidegreeTable,
    DegreeResult,
    OracleMismatchError,
    allowable_range,
    bidegree_coefficients,
    degree,
    degree_verified,
)
from .exactnum import binomial, check_skew, determinant, pfaffian, skew_from_upper
from .indexseq import (
    as_sequence,
    complement,
    enumerate_sequences,
    format_sequence,
    parse_sequence,
    schur_degree,
    weight,
)
from .psi import PsiCache, pascal_minor, psi_closed, psi_oracle, psi_pair, psi_single

__all__ = [
    "BidegreeTable",
    "DegreeResult",
    "OracleMismatchError",
    "PsiCache",
    "allowable_range",
    "as_sequence",
    "bidegree_coefficients",
    "binomial",
    "check_skew",
    "complement",
    "degree",
    "degree_verified",
    "determinant",
    "enumerate_sequences",
    "format_sequence",
    "parse_sequence",
    "pascal_minor",
    "pfaffian",
    "psi_closed",
    "psi_oracle",
    "psi_pair",
    "psi_single",
    "schur_degree",
    "skew_from_upper",
    "weight",
]

__version__ = "0.1.0"
