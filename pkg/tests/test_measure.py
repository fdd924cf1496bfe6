from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chacon.errors import ChaconError, EmptyRangeError
from chacon.measure import CylinderSet, frequency, measure_estimate
from chacon.words import level_length

import oracle


@pytest.mark.parametrize("pattern, n, expected", [
    ("0", 1, Fraction(3, 4)),
    ("1", 2, Fraction(4, 13)),
    ("11", 5, Fraction(0)),
])
def test_frequency_examples(small_hierarchy, pattern, n, expected):
    assert frequency(pattern, n, small_hierarchy) == expected


@pytest.mark.parametrize("n", range(9))
def test_single_letter_closed_forms(small_hierarchy, n):
    f0 = frequency("0", n, small_hierarchy)
    f1 = frequency("1", n, small_hierarchy)
    assert f0 + f1 == 1
    assert f0 == Fraction(3**n, level_length(n))
    assert f1 == Fraction((3**n - 1) // 2, level_length(n))


@given(st.text(alphabet="01", min_size=1, max_size=8), st.integers(0, 6))
def test_frequency_matches_oracle(pattern, n):
    w = oracle.word(n)
    assert frequency(pattern, n) == Fraction(oracle.count_overlapping(pattern, w), len(w))


def test_measure_estimate_zero(small_hierarchy):
    seq = measure_estimate("0", range(1, 9), small_hierarchy)
    assert [n for n, _ in seq.values] == list(range(1, 9))
    assert seq.final == Fraction(3**8, level_length(8))
    gaps = [abs(v - Fraction(2, 3)) for _, v in seq.values]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert seq.last_difference == seq.values[-1][1] - seq.values[-2][1]
    assert seq.shrinking


def test_measure_estimate_one_and_absent(small_hierarchy):
    seq = measure_estimate("1", range(1, 9), small_hierarchy)
    assert abs(seq.final - Fraction(1, 3)) < Fraction(1, 1000)
    seq = measure_estimate("0000", range(1, 9), small_hierarchy)
    assert all(v == 0 for _, v in seq.values)


def test_cylinder_position_does_not_matter(small_hierarchy):
    a = measure_estimate(CylinderSet("010", position=0), range(2, 7), small_hierarchy)
    b = measure_estimate(CylinderSet("010", position=17), range(2, 7), small_hierarchy)
    assert a == b


@pytest.mark.parametrize("pattern", ["01", "0010", "1001", "00100010"])
def test_differences_reported(small_hierarchy, pattern):
    seq = measure_estimate(pattern, range(2, 9), small_hierarchy)
    assert len(seq.differences) == 6
    assert isinstance(seq.shrinking, bool)


def test_measure_errors(small_hierarchy):
    with pytest.raises(ChaconError):
        frequency("", 2, small_hierarchy)
    with pytest.raises(ChaconError):
        CylinderSet("")
    with pytest.raises(EmptyRangeError):
        measure_estimate("0", range(0), small_hierarchy)
