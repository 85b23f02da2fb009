"""End-to-end extraction of an equitable subsequence, odd N >= 3, M >= 4N.

Pipeline: pair terms by ±-class mod 2N, pull a zero-sum union out of the
c-sequence mod N, unfold the chosen pairs back to original indices.  The
unfolded subsequence satisfies

  a) every nonzero ±-class mod 2N appears an even number of times
     (each pair contributes 0 or 2 members to its class),
  b) length L = 2 * |c-union| > N
     (M >= 4N forces T >= (3N-1)/2, so the union exceeds (N-1)/2), and
  c) total sum = 0 mod 2N
     (the union sum is 0 mod N and even; N odd makes that 0 mod 2N).

These three make every per-b cosine term nonnegative, so the zero-sum subset
count is at least the b=0 contribution 2^L / N.  The certificate records the
exact count and the exact integer threshold comparison; a verification
failure here is an implementation bug, never a valid outcome.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    IntSequence,
    InternalError,
    LengthError,
    Modulus,
    OddModulus,
    pm_class,
)
from .counting import count_zero, meets_threshold
from .pairing import PairedSequence, build_pairing
from .zerosum import ZeroSumCertificate, extract_zero_union


@dataclass(frozen=True)
class PropertyReport:
    """Verdicts for the three equitability properties of a sequence."""

    even_classes_ok: bool  # a) even multiplicity in every nonzero ±-class
    length_ok: bool  # b) L > N
    zero_sum_mod_2n_ok: bool  # c) total sum = 0 mod 2N
    length: int
    class_multiplicities: dict[int, int]  # ±-class representative -> count
    sum_mod_2n: int

    @property
    def all_ok(self) -> bool:
        return self.even_classes_ok and self.length_ok and self.zero_sum_mod_2n_ok


@dataclass(frozen=True)
class EquitableCertificate:
    selected_indices: frozenset[int]
    length: int
    report: PropertyReport
    zero_count: int  # subsets with sum = 0 mod N, empty included
    threshold_met: bool  # N * zero_count >= 2^L, exact
    pairing_trace: PairedSequence
    c_union: ZeroSumCertificate


def verify_equitable(seq: IntSequence, n_mod: OddModulus) -> PropertyReport:
    """Check properties a), b), c) on the sequence as given."""
    n = n_mod.n
    mults: dict[int, int] = {}
    for _, term in seq:
        cls = pm_class(term, n_mod)
        mults[cls] = mults.get(cls, 0) + 1
    even_ok = all(count % 2 == 0 for cls, count in mults.items() if cls != 0)
    length = len(seq)
    sum_mod = seq.total() % (2 * n)
    return PropertyReport(
        even_classes_ok=even_ok,
        length_ok=length > n,
        zero_sum_mod_2n_ok=sum_mod == 0,
        length=length,
        class_multiplicities=mults,
        sum_mod_2n=sum_mod,
    )


def extract_equitable(seq: IntSequence, n_mod: OddModulus) -> EquitableCertificate:
    """Run the full pipeline and return a fully verified certificate."""
    if not isinstance(n_mod, OddModulus):
        n_mod = OddModulus(n_mod.n)  # raises ParityError for even n
    n = n_mod.n
    if len(seq) < 4 * n:
        raise LengthError(f"need at least {4 * n} terms for N={n}, got {len(seq)}")

    pairing = build_pairing(seq, n_mod)
    if pairing.num_pairs < n:
        raise InternalError("pairing produced fewer than N pairs despite M >= 4N")
    c_union = extract_zero_union(pairing.c_sequence(), Modulus(n))

    selected = pairing.unfold(c_union.indices)
    sub = seq.subsequence(selected)
    if len(sub) != 2 * len(c_union.indices):
        raise InternalError("unfolded length disagrees with the c-union size")

    report = verify_equitable(sub, n_mod)
    if not report.all_ok:
        raise InternalError(f"extracted subsequence fails a)/b)/c): {report}")
    zero_count = count_zero(sub, n_mod, include_empty=True)
    if not meets_threshold(zero_count, report.length, n_mod):
        raise InternalError("extracted subsequence misses the 2^L/N threshold")

    return EquitableCertificate(
        selected_indices=frozenset(selected),
        length=report.length,
        report=report,
        zero_count=zero_count,
        threshold_met=True,
        pairing_trace=pairing,
        c_union=c_union,
    )
