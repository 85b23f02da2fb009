import math
import random

from equiseq import IntSequence, Modulus, build_pairing, pm_class


def check_invariants(seq, n_mod, paired):
    n = n_mod.n
    used = [p.i for p in paired.pairs] + [p.j for p in paired.pairs]
    assert len(used) == len(set(used))
    assert set(used) | set(paired.leftovers) == set(seq.indices)
    assert not set(used) & set(paired.leftovers)
    for p in paired.pairs:
        a, b = seq.term_at(p.i), seq.term_at(p.j)
        assert pm_class(a, n_mod) == pm_class(b, n_mod)
        assert p.c == a + b
        assert p.c % 2 == 0
    for p in paired.pairs[: paired.num_nonzero_pairs]:
        assert seq.term_at(p.i) % (2 * n) != 0
    for p in paired.pairs[paired.num_nonzero_pairs:]:
        assert seq.term_at(p.i) % (2 * n) == 0
        assert seq.term_at(p.j) % (2 * n) == 0
        assert p.c % (2 * n) == 0
    assert len(paired.leftovers) <= n + 1
    m = len(seq)
    assert 2 * paired.num_pairs + len(paired.leftovers) == m
    assert paired.num_pairs >= math.ceil((m - (n + 1)) / 2)


def test_single_class_example():
    seq = IntSequence.from_terms([1, 1, 1, 1])
    paired = build_pairing(seq, Modulus(3))
    assert [(p.i, p.j, p.c) for p in paired.pairs] == [(1, 2, 2), (3, 4, 2)]
    assert not paired.leftovers
    assert paired.num_nonzero_pairs == 2


def test_mixed_class_example():
    seq = IntSequence.from_terms([1, 5, 7, 2, 10, 3, 9, 6, 12])
    paired = build_pairing(seq, Modulus(3))
    assert [(p.i, p.j, p.c) for p in paired.pairs] == [
        (1, 2, 6),   # class {1,5}: members 1,2,3 pair greedily
        (4, 5, 12),  # class {2,4}
        (6, 7, 12),  # class {3}
        (8, 9, 18),  # class {0}, listed last
    ]
    assert paired.leftovers == frozenset({3})
    assert paired.num_nonzero_pairs == 3
    assert paired.num_pairs == 4
    check_invariants(seq, Modulus(3), paired)


def test_nothing_to_pair():
    paired = build_pairing(IntSequence.from_terms([1]), Modulus(3))
    assert paired.pairs == ()
    assert paired.leftovers == frozenset({1})


def test_c_sequence_indices():
    seq = IntSequence.from_terms([1, 1, 2, 2])
    paired = build_pairing(seq, Modulus(3))
    cseq = paired.c_sequence()
    assert cseq.indices == tuple(range(1, paired.num_pairs + 1))
    assert paired.unfold({1}) == {1, 2}


def test_pairing_invariants_randomized():
    rng = random.Random(998877)
    for _ in range(1000):
        n = rng.randrange(2, 13)
        m = rng.randrange(0, 6 * n)
        seq = IntSequence.from_terms(
            rng.randrange(-20 * n, 20 * n) for _ in range(m)
        )
        check_invariants(seq, Modulus(n), build_pairing(seq, Modulus(n)))


def test_pair_subset_unfolds_to_even_classes():
    # any selection of pairs puts 0 or 2 members into each nonzero ±-class
    rng = random.Random(5)
    n_mod = Modulus(5)
    seq = IntSequence.from_terms(rng.randrange(-100, 100) for _ in range(40))
    paired = build_pairing(seq, n_mod)
    for _ in range(50):
        chosen = {
            pos
            for pos in range(1, paired.num_pairs + 1)
            if rng.random() < 0.5
        }
        if not chosen:
            continue
        unfolded = paired.unfold(chosen)
        mults = {}
        for idx in unfolded:
            cls = pm_class(seq.term_at(idx), n_mod)
            mults[cls] = mults.get(cls, 0) + 1
        assert all(v % 2 == 0 for c, v in mults.items() if c != 0)
