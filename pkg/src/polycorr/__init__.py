"""Exact-arithmetic toolkit for restrictive polynomial correspondences.

A bivariate polynomial P(z, w) links each point of one plane to a list of
points of the other.  This package decides, in exact Gaussian-rational
arithmetic, whether that linkage collapses to a fixed list-to-list
correspondence (the "restrictive" property), constructs the separated
form R(z) = S(w) when it does, multiplies correspondences through the
slice-pairing product with full validity diagnostics, and cross-checks
the algebra with a seeded numerical branch-list verifier.
"""

from .corr import (
    Classification,
    Correspondence,
    DegreeTooLowError,
    P1ViolationError,
    P2ViolationError,
    RankDecomposition,
    RankNotTwoError,
    RationalSeparation,
    ValidationError,
    Verdict,
    classify,
    conj_symmetry,
    consecutive_columns_independent,
    dagger,
    dagger_conj,
    decompose,
    dth_root,
    separate,
    sign_symmetry,
    validate,
)
from .exactnum import GaussianRational, Rational, nth_root
from .linalg import ExactMatrix, full_rank_factorize, rank, rref
from .numeric import (
    NoConvergenceError,
    SolutionLists,
    VerificationReport,
    VerifyVerdict,
    ZeroPolynomialError,
    roots,
    solution_lists,
    verify_restrictive,
)
from .parser import ParseError, format_poly, format_unipoly, parse_poly
from .poly import (
    BiPoly,
    UniPoly,
    bipoly_from_matrix,
    check_p1_p2,
    coeff_matrix,
    gcd_uni,
    proportionality_constant,
)
from .star import (
    CanonicalFactors,
    DegenerateProductError,
    DegreeMismatchError,
    JZeroError,
    StarDiagnostics,
    build_product_via_traces,
    canonical_factor,
    diagnostics,
    star,
    star_traces,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CanonicalFactors",
    "Classification",
    "Correspondence",
    "DegenerateProductError",
    "DegreeMismatchError",
    "DegreeTooLowError",
    "ExactMatrix",
    "GaussianRational",
    "JZeroError",
    "NoConvergenceError",
    "P1ViolationError",
    "P2ViolationError",
    "ParseError",
    "RankDecomposition",
    "RankNotTwoError",
    "Rational",
    "RationalSeparation",
    "SolutionLists",
    "StarDiagnostics",
    "UniPoly",
    "ValidationError",
    "VerificationReport",
    "Verdict",
    "VerifyVerdict",
    "ZeroPolynomialError",
    "bipoly_from_matrix",
    "build_product_via_traces",
    "canonical_factor",
    "check_p1_p2",
    "classify",
    "coeff_matrix",
    "conj_symmetry",
    "consecutive_columns_independent",
    "dagger",
    "dagger_conj",
    "decompose",
    "diagnostics",
    "dth_root",
    "format_poly",
    "format_unipoly",
    "full_rank_factorize",
    "gcd_uni",
    "nth_root",
    "parse_poly",
    "proportionality_constant",
    "rank",
    "roots",
    "rref",
    "separate",
    "sign_symmetry",
    "solution_lists",
    "star",
    "star_traces",
    "validate",
    "verify_restrictive",
]
