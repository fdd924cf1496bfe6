"""Exit criteria.  All equalities are exact rational equalities.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

from fractions import Fraction

from chacon.measure import frequency, measure_estimate
from chacon.metrics import hamming, lemma1_value, min_zero_hamming_over_subwords, zero_hamming
from chacon.shifts import (
    anchor_level,
    finite_level_d,
    finite_level_d0,
    follow_type_counts,
    limit_distance,
    prop2_shift,
    prop2_values,
    sample_shifts,
    scan_follow_types,
    verify_lemma3,
    verify_prop1,
)
from chacon.words import ONE, level_length, occurrences

SIXTH = Fraction(1, 6)
TWO_NINTHS = Fraction(2, 9)


def test_criterion_01_lemma1_closed_form(hierarchy):
    for n in range(13):
        w = hierarchy.build_level(n)
        expected = Fraction(1, 2) + Fraction(1, 2 * 3**n)
        assert lemma1_value(n) == expected
        assert zero_hamming(w + ONE, ONE + w) == expected, n
        assert zero_hamming(ONE + w, w + ONE) == expected, n


def test_criterion_02_occurrence_counts(hierarchy):
    for n in range(6):
        for k in range(6):
            if n + k > 10:
                continue
            found = occurrences(hierarchy.build_level(n), hierarchy.build_level(n + k))
            assert len(found) == 3**k, (n, k)


def test_criterion_03_lemma2_bound(hierarchy):
    for n in range(1, 8):
        result = min_zero_hamming_over_subwords(n, n + 3, hierarchy)
        assert result.value > SIXTH, (n, result.value)
        assert result.witness != hierarchy.build_level(n)


def test_criterion_04_closed_form_equals_brute_force(hierarchy):
    checked = 0
    for i in range(1, level_length(3)):
        n = anchor_level(i)
        for k in range(0, 7 - n + 1):
            w = hierarchy.build_level(n + k)
            alpha = hierarchy.segment(i, len(w))
            assert finite_level_d0(i, k, hierarchy) == zero_hamming(w, alpha), (i, k)
            assert finite_level_d(i, k, hierarchy) == hamming(w, alpha), (i, k)
            checked += 1
    assert checked > 0


def test_criterion_05_follow_type_counts(hierarchy):
    for n in range(5):
        for k in range(6):
            scanned = scan_follow_types(n, k, hierarchy)
            assert (scanned.count_A, scanned.count_B) == ((3**k + 1) // 2, (3**k - 1) // 2)
            assert scanned == follow_type_counts(n, k)


def test_criterion_06_prop2_exact(hierarchy):
    for n in range(1, 11):
        i = prop2_shift(n)
        assert i == 2 * level_length(n - 1) + 1
        dist = limit_distance(i, hierarchy)
        assert dist.d0_limit == SIXTH + Fraction(1, 2 * 3**n), n
        assert dist.d_limit == TWO_NINTHS + Fraction(2, 3 ** (n + 1)), n


def test_criterion_07_prop1_bound_and_sharpness(hierarchy):
    report = verify_prop1(6, hierarchy)
    assert report.passed, report.render()
    minima = report.summary["minima_by_level"]
    previous = None
    for m in range(1, 7):
        value, argmins = minima[m]
        assert value == prop2_values(m)[0], m
        assert prop2_shift(m) in argmins
        assert value > SIXTH and Fraction(4, 3) * value > TWO_NINTHS
        if previous is not None:
            assert value < previous
        previous = value


def test_criterion_08_lemma3_identity(hierarchy):
    shifts = sample_shifts(200, 10**6, seed=0)
    assert len(set(shifts)) == 200 and max(shifts) <= 10**6
    report = verify_lemma3(shifts, max_k=6, brute_force_level=13, hierarchy=hierarchy)
    assert report.passed, report.render()
    for i in shifts[:20]:
        dist = limit_distance(i, hierarchy)
        assert dist.d_limit == Fraction(4, 3) * dist.d0_limit
        n = dist.decomposition.n
        ratios = [finite_level_d(i, k, hierarchy) / finite_level_d0(i, k, hierarchy)
                  for k in range(8)]
        assert ratios == [Fraction(4 * 3 ** (n + k), 3 ** (n + k + 1) - 1) for k in range(8)]
        gaps = [r - Fraction(4, 3) for r in ratios]
        assert all(0 < b < a for a, b in zip(gaps, gaps[1:]))


def test_criterion_09_structure(hierarchy):
    for n in range(13):
        report = hierarchy.check_structure(n)
        assert report.passed, report.render()
        w = hierarchy.build_level(n)
        assert w.zeros == 3**n and w.ones == (3**n - 1) // 2
        assert "11" not in w and "0000" not in w
        if n >= 1:
            assert w.startswith("001") and w.endswith("10")
        for m in range(n + 1):
            if 4 * level_length(m) <= len(w):
                assert hierarchy.build_level(m) * 4 not in w


def test_criterion_10_measure(hierarchy):
    for n in range(13):
        assert frequency("0", n, hierarchy) == Fraction(3**n, level_length(n))
        assert frequency("11", n, hierarchy) == 0
    seq = measure_estimate("0", range(1, 13), hierarchy)
    assert seq.values[-1][0] == 12
    assert abs(seq.final - Fraction(2, 3)) < Fraction(1, 10**4)
