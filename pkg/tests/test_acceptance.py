"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""
import io
import json
import random
import sys
import time
from itertools import product

import pytest

from equiseq import (
    IntSequence,
    Modulus,
    OddModulus,
    brute_force_count,
    build_pairing,
    character_sum_estimate,
    cosine_identity_count,
    cosine_terms,
    count_zero,
    enumerate_multisets,
    extract_equitable,
    extract_zero_union,
    find_zero_subsum,
    meets_threshold,
    search_conjecture,
    verify_equitable,
)
from equiseq.cli import main as cli_main


def seq_of(terms):
    return IntSequence.from_terms(terms)


def report(num, label, elapsed, budget):
    print(f"PASS criterion {num}: {label} ({elapsed:.2f}s < {budget}s)")
    assert elapsed < budget, f"criterion {num} exceeded its runtime budget"


def test_criterion_1_all_ones_counts():
    t0 = time.perf_counter()
    n3 = Modulus(3)
    assert count_zero(seq_of([1] * 9), n3, include_empty=False) == 169
    twelve = count_zero(seq_of([1] * 12), n3, include_empty=True)
    assert twelve == 1366
    assert meets_threshold(twelve, 12, n3)
    assert count_zero(seq_of([1] * 6), n3, include_empty=True) == 22
    assert count_zero(seq_of([1] * 6), n3, include_empty=False) == 21
    assert meets_threshold(22, 6, n3)
    assert not meets_threshold(21, 6, n3)
    report(1, "all-ones counts 169 / 1366 / 22 vs 21", time.perf_counter() - t0, 1)


def test_criterion_2_random_extraction_sweep():
    t0 = time.perf_counter()
    rng = random.Random(0xE9512)
    for n in (3, 5, 7, 9, 11):
        n_mod = OddModulus(n)
        for trial in range(200):
            m = 4 * n if trial % 2 == 0 else 4 * n + 7
            seq = seq_of(rng.randint(-10 * n, 10 * n) for _ in range(m))
            cert = extract_equitable(seq, n_mod)
            assert cert.length >= n + 1
            assert cert.report.all_ok
            assert n * cert.zero_count >= 2**cert.length
    report(2, "1000 random extractions, odd N in 3..11",
           time.perf_counter() - t0, 60)


def test_criterion_3_exhaustive_extraction_n3():
    t0 = time.perf_counter()
    n_mod = OddModulus(3)
    checked = 0
    for inst in enumerate_multisets(Modulus(6), 12):
        # residue patterns mod 2N = 6 of length 4N = 12
        cert = extract_equitable(seq_of(inst.residues), n_mod)
        assert cert.length >= 4
        assert cert.report.all_ok
        assert cert.threshold_met
        assert cert.length == 2 * len(cert.c_union.indices)
        checked += 1
    assert checked == 6188
    report(3, "6188 exhaustive N=3 pipelines", time.perf_counter() - t0, 600)


def test_criterion_4_oracle_equivalence():
    t0 = time.perf_counter()
    for n in (2, 3):
        n_mod = Modulus(n)
        for length in range(0, 11):
            for pattern in product(range(n), repeat=length):
                s = seq_of(pattern)
                assert count_zero(s, n_mod) == brute_force_count(s, n_mod)
    rng = random.Random(0xACE)
    for _ in range(1000):
        n = rng.randrange(2, 12)
        length = rng.randrange(0, 21)
        s = seq_of(rng.randint(-10**6, 10**6) for _ in range(length))
        assert count_zero(s, Modulus(n)) == brute_force_count(s, Modulus(n))
    report(4, "DP vs brute-force oracle, exhaustive + 1000 random",
           time.perf_counter() - t0, 60)


def test_criterion_5_identity():
    t0 = time.perf_counter()
    rng = random.Random(0x1DE47)
    for _ in range(500):
        n = Modulus(rng.randrange(2, 12))
        length = rng.randrange(0, 41)
        s = seq_of(rng.randint(-1000, 1000) for _ in range(length))
        exact = count_zero(s, n)
        approx = character_sum_estimate(s, n)
        assert abs(approx - exact) <= 1e-6 * max(1, exact)
    # cosine regrouping on sequences that pass the equitability check
    for n in (3, 5, 7):
        n_mod = OddModulus(n)
        for _ in range(25):
            base = seq_of(rng.randint(-10 * n, 10 * n) for _ in range(4 * n + 3))
            cert = extract_equitable(base, n_mod)
            sub = base.subsequence(cert.selected_indices)
            assert verify_equitable(sub, n_mod).all_ok
            vec = cosine_terms(sub, n_mod)
            assert all(t >= -1e-9 for t in vec.terms)
            exact = count_zero(sub, n_mod)
            assert abs(cosine_identity_count(sub, n_mod) - exact) <= 1e-6 * exact
    report(5, "character sum and cosine regrouping vs exact counts",
           time.perf_counter() - t0, 30)


def test_criterion_6_pigeonhole_extraction():
    t0 = time.perf_counter()
    rng = random.Random(0x1E44A)
    for _ in range(1000):
        n = rng.randrange(2, 15)
        t_len = rng.randrange(n, 3 * n + 5)
        seq = seq_of(rng.randint(-10**9, 10**9) for _ in range(t_len))

        block = find_zero_subsum(seq, Modulus(n))
        positions = sorted(seq.indices.index(i) for i in block.indices)
        assert positions == list(range(positions[0], positions[-1] + 1))
        assert block.indices and block.total % n == 0
        assert sum(seq.term_at(i) for i in block.indices) == block.total

        union = extract_zero_union(seq, Modulus(n))
        assert len(union.indices) >= t_len - n + 1
        assert union.total % n == 0
    report(6, "1000 pigeonhole blocks and zero-sum unions",
           time.perf_counter() - t0, 10)


def test_criterion_7_pairing_invariants():
    t0 = time.perf_counter()
    rng = random.Random(0x9A14)
    for _ in range(1000):
        n = rng.randrange(2, 15)
        m = rng.randrange(0, 6 * n)
        seq = seq_of(rng.randint(-20 * n, 20 * n) for _ in range(m))
        paired = build_pairing(seq, Modulus(n))
        used = [p.i for p in paired.pairs] + [p.j for p in paired.pairs]
        assert len(used) == len(set(used))
        assert set(used) | set(paired.leftovers) == set(seq.indices)
        assert all(p.c % 2 == 0 for p in paired.pairs)
        assert len(paired.leftovers) <= n + 1
        assert paired.num_pairs >= -(-(m - (n + 1)) // 2)  # ceil division
    report(7, "1000 pairing invariant checks", time.perf_counter() - t0, 10)


def test_criterion_8_conjecture_exhaustive():
    t0 = time.perf_counter()
    expected_counts = {2: 5, 3: 28, 4: 165, 5: 1001}
    for n, expected in expected_counts.items():
        n_mod = Modulus(n)
        result = search_conjecture(n_mod, "exhaustive")
        assert result.instances_checked == expected
        assert result.counterexamples == (), (
            f"counterexample found for N={n}: surface it! "
            f"{[list(c.residues) for c in result.counterexamples]}"
        )
        for inst, w in zip(result.instances, result.witnesses):
            assert w is not None and w.length >= n
            sub = seq_of(inst.residues).subsequence(w.indices)
            oracle = brute_force_count(sub, n_mod)
            assert oracle == w.zero_count
            assert n * oracle >= 2**w.length
    report(8, "exhaustive conjecture search N=2..5, witnesses re-verified",
           time.perf_counter() - t0, 300)


def test_criterion_9_cli_round_trip(monkeypatch, capsys):
    t0 = time.perf_counter()

    def run(args, text):
        monkeypatch.setattr(sys, "stdin", io.StringIO(text))
        code = cli_main(args)
        return code, capsys.readouterr().out

    twelve = "1 1 1 1 1 1 1 1 1 1 1 1\n"
    code, out1 = run(["extract", "-N", "3"], twelve)
    assert code == 0
    terms = " ".join(json.loads(out1)["certificate"]["selected_terms"])
    code, _ = run(["verify", "-N", "3"], terms + "\n")
    assert code == 0

    _, out2 = run(["extract", "-N", "3"], twelve)
    assert out1 == out2

    # exit-code contract: 0 = success/verified, 1 = not verified, 2 = cannot run
    assert run(["count", "-N", "3"], "1 2 3\n")[0] == 0
    assert run(["count", "-N", "1"], "1 2 3\n")[0] == 2
    assert run(["verify", "-N", "3"], "1 1\n")[0] == 1
    assert run(["verify", "-N", "4"], "1 1\n")[0] == 2
    assert run(["extract", "-N", "3"], "1 1 1\n")[0] == 2
    assert run(["search", "-N", "2"], "")[0] == 0
    assert run(["search", "-N", "9"], "")[0] == 2
    report(9, "CLI round-trip, determinism, exit codes",
           time.perf_counter() - t0, 5)
