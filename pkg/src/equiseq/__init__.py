"""Equitable zero-sum subsequence extraction, exact counting, and search.

For odd N >= 3 every integer sequence of length >= 4N contains a subsequence
of length L > N with at least 2^L / N zero-sum subsets mod N.  This package
extracts such a subsequence constructively, verifies it with exact
arbitrary-precision counting and the roots-of-unity identity, and searches
for counterexamples to the stronger length-2N claim.
"""
from ._backend import BACKEND_NAME, HAVE_EXT
from .conjecture import (
    ConjectureInstance,
    ConjectureReport,
    Witness,
    enumerate_multisets,
    find_witness,
    search_conjecture,
)
from .core import (
    IntSequence,
    InternalError,
    LengthError,
    Modulus,
    OddModulus,
    ParityError,
    ScaleError,
    SizeError,
    normalize_residue,
    pm_class,
)
from .counting import (
    CosineTermVector,
    CountReport,
    brute_force_count,
    character_sum_estimate,
    cosine_identity_count,
    cosine_terms,
    count_by_residue,
    count_zero,
    meets_threshold,
)
from .equitable import (
    EquitableCertificate,
    PropertyReport,
    extract_equitable,
    verify_equitable,
)
from .pairing import Pair, PairedSequence, build_pairing
from .zerosum import ZeroSumCertificate, extract_zero_union, find_zero_subsum

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "HAVE_EXT",
    "ConjectureInstance",
    "ConjectureReport",
    "CosineTermVector",
    "CountReport",
    "EquitableCertificate",
    "IntSequence",
    "InternalError",
    "LengthError",
    "Modulus",
    "OddModulus",
    "Pair",
    "PairedSequence",
    "ParityError",
    "PropertyReport",
    "ScaleError",
    "SizeError",
    "Witness",
    "ZeroSumCertificate",
    "brute_force_count",
    "build_pairing",
    "character_sum_estimate",
    "cosine_identity_count",
    "cosine_terms",
    "count_by_residue",
    "count_zero",
    "enumerate_multisets",
    "extract_equitable",
    "extract_zero_union",
    "find_witness",
    "find_zero_subsum",
    "meets_threshold",
    "normalize_residue",
    "pm_class",
    "search_conjecture",
    "verify_equitable",
]
