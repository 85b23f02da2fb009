"""Command-line front end.

Commands: extract, count, verify, search.  Input is ASCII signed decimal
integers separated by whitespace; lines starting with '#' are comments.
JSON goes to stdout (stable field order, big integers as decimal strings),
diagnostics to stderr.

Exit codes: 0 success / verified; 1 verification failed or a counterexample
was found; 2 parse errors, bad flags, or precondition violations.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .conjecture import ConjectureReport, search_conjecture
from .core import (
    IntSequence,
    LengthError,
    Modulus,
    OddModulus,
    ParityError,
    ScaleError,
    SizeError,
)
from .counting import count_by_residue, meets_threshold
from .equitable import EquitableCertificate, PropertyReport, verify_equitable
from .equitable import extract_equitable
from .counting import count_zero

SCHEMA_VERSION = 1


def parse_sequence(text: str) -> IntSequence:
    tokens: list[str] = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        tokens.extend(line.split())
    try:
        return IntSequence.from_terms(int(tok) for tok in tokens)
    except ValueError as exc:
        raise ValueError(f"malformed integer in input: {exc}") from None


def _read_input(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _properties_payload(report: PropertyReport) -> dict:
    return {
        "even_classes_ok": report.even_classes_ok,
        "length_ok": report.length_ok,
        "zero_sum_mod_2N_ok": report.zero_sum_mod_2n_ok,
        "sum_mod_2N": report.sum_mod_2n,
        "class_multiplicities": {
            str(cls): count
            for cls, count in sorted(report.class_multiplicities.items())
        },
    }


def _certificate_payload(cert: EquitableCertificate, seq: IntSequence) -> dict:
    selected = sorted(cert.selected_indices)
    return {
        "selected_indices": selected,
        "selected_terms": [str(seq.term_at(i)) for i in selected],
        "L": cert.length,
        "properties": _properties_payload(cert.report),
        "zero_count": str(cert.zero_count),
        "threshold_met": cert.threshold_met,
        "pairing": {
            "num_pairs": cert.pairing_trace.num_pairs,
            "num_nonzero_pairs": cert.pairing_trace.num_nonzero_pairs,
            "pairs": [[p.i, p.j, str(p.c)] for p in cert.pairing_trace.pairs],
            "leftovers": sorted(cert.pairing_trace.leftovers),
        },
        "c_union": {
            "indices": sorted(cert.c_union.indices),
            "sum": str(cert.c_union.total),
        },
    }


def _search_payload(report: ConjectureReport) -> dict:
    witnesses = []
    for inst, w in zip(report.instances, report.witnesses):
        entry: dict = {"instance": list(inst.residues)}
        if w is None:
            entry["witness"] = None
        else:
            entry["witness"] = {
                "indices": list(w.indices),
                "L": w.length,
                "zero_count": str(w.zero_count),
            }
        witnesses.append(entry)
    return {
        "mode": report.mode,
        "sequence_length": report.sequence_length,
        "instances_checked": report.instances_checked,
        "counterexamples": [list(c.residues) for c in report.counterexamples],
        "budget": report.budget,
        "seed": report.seed,
        "witness_map": witnesses,
    }


def _emit(doc: dict, fmt: str, summary_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        for line in summary_lines:
            print(line)


def _cmd_extract(args: argparse.Namespace) -> int:
    n_mod = OddModulus(args.modulus)
    seq = parse_sequence(_read_input(args.input))
    cert = extract_equitable(seq, n_mod)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "extract",
        "modulus": n_mod.n,
        "input_length": len(seq),
        "certificate": _certificate_payload(cert, seq),
    }
    _emit(
        doc,
        args.format,
        [
            f"equitable subsequence of length {cert.length} "
            f"(indices {sorted(cert.selected_indices)})",
            f"zero-sum subsets: {cert.zero_count} "
            f"(threshold 2^{cert.length}/{n_mod.n} met: {cert.threshold_met})",
        ],
    )
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    n_mod = Modulus(args.modulus)
    seq = parse_sequence(_read_input(args.input))
    report = count_by_residue(seq, n_mod)
    include_empty = not args.exclude_empty
    zero = report.counts[0] - (0 if include_empty else 1)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "count",
        "modulus": n_mod.n,
        "L": report.length,
        "include_empty": include_empty,
        "counts": [str(c) for c in report.counts],
        "zero_count": str(zero),
        "threshold_met": meets_threshold(zero, report.length, n_mod),
    }
    _emit(
        doc,
        args.format,
        [
            f"L={report.length}, zero-sum subsets "
            f"({'empty included' if include_empty else 'nonempty'}): {zero}",
            f"threshold 2^{report.length}/{n_mod.n} met: {doc['threshold_met']}",
        ],
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    n_mod = OddModulus(args.modulus)
    seq = parse_sequence(_read_input(args.input))
    report = verify_equitable(seq, n_mod)
    zero = count_zero(seq, n_mod, include_empty=True)
    threshold = meets_threshold(zero, len(seq), n_mod)
    equitable = report.all_ok and threshold
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "modulus": n_mod.n,
        "L": report.length,
        "properties": _properties_payload(report),
        "zero_count": str(zero),
        "threshold_met": threshold,
        "equitable": equitable,
    }
    _emit(
        doc,
        args.format,
        [
            f"a) even classes: {report.even_classes_ok}  "
            f"b) L>{n_mod.n}: {report.length_ok}  "
            f"c) sum=0 mod {2 * n_mod.n}: {report.zero_sum_mod_2n_ok}",
            f"zero-sum subsets: {zero}, threshold met: {threshold}",
            f"equitable: {equitable}",
        ],
    )
    return 0 if equitable else 1


def _cmd_search(args: argparse.Namespace) -> int:
    n_mod = Modulus(args.modulus)
    report = search_conjecture(n_mod, args.mode, budget=args.budget, seed=args.seed)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "search",
        "modulus": n_mod.n,
        **_search_payload(report),
    }
    _emit(
        doc,
        args.format,
        [
            f"checked {report.instances_checked} instances of length "
            f"{report.sequence_length} ({report.mode})",
            f"counterexamples: {len(report.counterexamples)}",
        ],
    )
    if not report.ok:
        print(
            f"COUNTEREXAMPLE: {[list(c.residues) for c in report.counterexamples]}",
            file=sys.stderr,
        )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equiseq",
        description="Extract, count, verify, and search equitable zero-sum "
        "subsequences mod N.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        p.add_argument("--modulus", "-N", type=int, required=True)
        p.add_argument("--format", choices=("json", "text"), default="json")
        if with_input:
            p.add_argument(
                "--input", "-i", default=None, help="input file (default: stdin)"
            )

    p_extract = sub.add_parser("extract", help="run the extraction pipeline")
    common(p_extract)
    p_extract.set_defaults(func=_cmd_extract)

    p_count = sub.add_parser("count", help="count zero-sum subsets per residue")
    common(p_count)
    p_count.add_argument("--exclude-empty", action="store_true")
    p_count.set_defaults(func=_cmd_count)

    p_verify = sub.add_parser("verify", help="check equitability of the input as-is")
    common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="search for conjecture counterexamples")
    common(p_search, with_input=False)
    p_search.add_argument("--mode", choices=("exhaustive", "random"),
                          default="exhaustive")
    p_search.add_argument("--budget", type=int, default=None)
    p_search.add_argument("--seed", type=int, default=None)
    p_search.set_defaults(func=_cmd_search)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LengthError, ParityError, ScaleError, SizeError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
