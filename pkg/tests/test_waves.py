import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given
from hypothesis import strategies as st

from denumerant.cyclotomic import lcm
from denumerant.oracle import dp_count
from denumerant.poly import Poly, X
from denumerant.quasipoly import QuasiPolynomial
from denumerant.selftest import GOLDEN_WAVES, random_sequence
from denumerant.waves import (
    SequenceError,
    all_waves,
    denumerant,
    denumerant_from_waves,
    validate_sequence,
    wave_f,
    wave_f_trace,
    wave_one,
)


def QP(*comps):
    return QuasiPolynomial([Poly([Fr(c) for c in comp]) for comp in comps])


def test_wave_one_examples():
    assert wave_one((1, 3, 6)) == QP(["127/216", "5/18", "1/36"])
    assert wave_one((1,)) == QP([1])
    assert wave_one((1, 2)) == QP(["3/4", "1/2"])


def test_wave_f_examples():
    seq = (1, 3, 6)
    assert wave_f(seq, 3) == QP(["-1/54"], ["-29/108", "-1/18"], ["31/108", "1/18"])
    assert wave_f(seq, 2) == QP(["-1/24"], ["1/24"])
    assert wave_f(seq, 6) == QP(["1/6"], ["1/12"], ["-1/12"], ["-1/6"], ["-1/12"], ["1/12"])
    with pytest.raises(ValueError):
        wave_f(seq, 4)
    with pytest.raises(SequenceError):
        wave_f((2, 4), 2)


def test_all_waves_golden():
    waves = all_waves((1, 3, 6))
    assert list(waves) == [1, 2, 3, 6]
    for f, comps in GOLDEN_WAVES.items():
        assert waves[f] == QP(*comps)
    assert all_waves((1,)) == {1: QP([1])}


def test_example_two_ten_trace():
    tr = wave_f_trace((1, 3, 6), 3)
    assert tr.context.div_idx == (1, 2)
    assert tr.inverses == {1: (X + 2) / 3}
    assert tr.gtodd[1] == (2 * X - 29) / 6
    assert tr.M[0] == Poly([Fr(-10, 3), Fr(-3, 2)])
    assert list(tr.table[0]) == [Fr(1, 3), Fr(29, 6), Fr(-31, 6)]
    assert list(tr.table[1]) == [0, -1, 1]


def test_pairs_against_dp():
    waves = all_waves((2, 3))
    assert list(waves) == [1, 2, 3]
    counts = dp_count((2, 3), 50)
    for t in range(51):
        assert denumerant_from_waves(waves, t) == counts[t]


@pytest.mark.parametrize("seq", [(2, 3), (1, 3, 6), (3, 5, 7), (4, 6, 9, 10), (1, 2, 3, 4, 5, 6)])
def test_oracle_on_full_range(seq):
    waves = all_waves(seq)
    T = 3 * lcm(*seq)
    counts = dp_count(seq, T)
    assert [denumerant_from_waves(waves, t) for t in range(T + 1)] == list(counts.counts)


@given(st.randoms(use_true_random=False))
def test_oracle_property(rng):
    seq = random_sequence(rng, 5, 14)
    waves = all_waves(seq)
    T = min(3 * lcm(*seq), 3000)
    counts = dp_count(seq, T)
    for t in range(T + 1):
        assert denumerant_from_waves(waves, t) == counts[t]


def test_wave_degree_and_period():
    seq = (2, 4, 5, 8)
    for f, w in all_waves(seq).items():
        n = sum(a % f == 0 for a in seq)
        assert w.period == f
        assert w.degree < n


def test_point_values():
    assert denumerant((1, 3, 6), 14) == 9
    assert denumerant((1, 3, 6), 1789682) == 88971554961
    assert denumerant((1, 3, 6), 0) == 1


def test_validation_messages():
    with pytest.raises(SequenceError, match="gcd"):
        validate_sequence((2, 4))
    with pytest.raises(SequenceError, match="distinct"):
        validate_sequence((1, 1, 2))
    with pytest.raises(SequenceError, match="positive"):
        validate_sequence((1, 0))
    with pytest.raises(SequenceError, match="positive"):
        validate_sequence((1, -3))
    with pytest.raises(SequenceError, match="nonempty"):
        validate_sequence(())


def test_parallel_matches_serial():
    seq = tuple(range(1, 13))
    assert all_waves(seq, workers=3) == all_waves(seq, workers=1)
    assert list(all_waves(seq, workers=3)) == sorted(all_waves(seq))


def test_order_of_entries_is_irrelevant():
    rng = random.Random(5)
    seq = [3, 4, 10, 12]
    ref = all_waves(seq)
    rng.shuffle(seq)
    assert all_waves(seq) == ref
