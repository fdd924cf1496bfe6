"""Exact Hamming and 0-Hamming distances between equal-length binary words."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import (
    EmptyWordError,
    LengthMismatchError,
    LevelAboveCapError,
    NoZerosError,
    UnequalZeroCountError,
    ChaconError,
)
from .report import Report
from .words import (
    ONE,
    ChaconHierarchy,
    FiniteWord,
    WordLike,
    as_word,
    default_hierarchy,
    level_length,
    occurrences,
)


def _pair(alpha: WordLike, beta: WordLike) -> tuple[FiniteWord, FiniteWord]:
    alpha, beta = as_word(alpha), as_word(beta)
    if len(alpha) != len(beta):
        raise LengthMismatchError(len(alpha), len(beta))
    return alpha, beta


def mismatches(alpha: WordLike, beta: WordLike) -> int:
    alpha, beta = _pair(alpha, beta)
    return int(np.count_nonzero(alpha.array != beta.array))


def zero_to_one(alpha: WordLike, beta: WordLike) -> int:
    """Number of positions where alpha has 0 and beta has 1."""
    alpha, beta = _pair(alpha, beta)
    return int(np.count_nonzero(beta.array > alpha.array))


def hamming(alpha: WordLike, beta: WordLike) -> Fraction:
    alpha, beta = _pair(alpha, beta)
    if not alpha:
        raise EmptyWordError("Hamming distance is undefined for empty words")
    return Fraction(mismatches(alpha, beta), len(alpha))


def zero_hamming(alpha: WordLike, beta: WordLike) -> Fraction:
    """Fraction of the 0-positions of ``alpha`` at which ``beta`` reads 1.

    Not symmetric in general; ``alpha`` must contain a 0.
    """
    alpha, beta = _pair(alpha, beta)
    zeros = alpha.zeros
    if zeros == 0:
        raise NoZerosError("0-Hamming distance needs at least one 0 in the first word")
    return Fraction(zero_to_one(alpha, beta), zeros)


def lemma1_value(n: int) -> Fraction:
    """Closed form 1/2 + 1/(2*3^n) for d_0(W_n 1, 1 W_n)."""
    return Fraction(1, 2) + Fraction(1, 2 * 3**n)


def verify_lemma1(n: int, hierarchy: ChaconHierarchy | None = None) -> Report:
    h = hierarchy or default_hierarchy()
    if n > h.cap - 1:
        raise LevelAboveCapError(n, h.cap - 1)
    w = h.build_level(n)
    left, right = w + ONE, ONE + w
    predicted = lemma1_value(n)
    forward = zero_hamming(left, right)
    backward = zero_hamming(right, left)
    report = Report(f"d_0 of W_{n}1 against 1W_{n}")
    report.add(f"d_0(W_{n}1, 1W_{n})", forward == predicted, computed=forward, predicted=predicted)
    report.add(f"d_0(1W_{n}, W_{n}1)", backward == predicted, computed=backward, predicted=predicted)
    report.summary["value"] = forward
    return report


class SubwordMinimum(NamedTuple):
    value: Fraction
    witness: FiniteWord
    position: int


def zero_hamming_profile(pattern: WordLike, haystack: WordLike) -> np.ndarray:
    """Numerators of d_0(pattern, haystack[s:s+|pattern|]) for every window start s."""
    pattern, haystack = as_word(pattern), as_word(haystack)
    if len(haystack) < len(pattern):
        return np.zeros(0, dtype=np.int64)
    windows = len(haystack) - len(pattern) + 1
    hay = haystack.array
    counts = np.zeros(windows, dtype=np.int64)
    for z in np.flatnonzero(pattern.array == 0):
        counts += hay[z:z + windows]
    return counts


def min_zero_hamming_over_subwords(n: int, search_level: int,
                                   hierarchy: ChaconHierarchy | None = None) -> SubwordMinimum:
    """Minimum of d_0(W_n, beta) over all factors beta != W_n of W_{search_level}.

    Ties go to the smallest start position.
    """
    h = hierarchy or default_hierarchy()
    if not n < search_level:
        raise ChaconError(f"search level {search_level} must exceed n = {n}")
    if search_level > h.cap:
        raise LevelAboveCapError(search_level, h.cap)
    target = h.build_level(n)
    hay = h.build_level(search_level)
    counts = zero_hamming_profile(target, hay)
    masked = counts.astype(np.float64)
    masked[occurrences(target, hay)] = np.inf
    p = int(np.argmin(masked))
    if not np.isfinite(masked[p]):
        raise ChaconError("every factor equals W_n; nothing to minimize")
    length = level_length(n)
    return SubwordMinimum(Fraction(int(counts[p]), target.zeros), hay[p:p + length], p)


def verify_lemma2(n: int, search_level: int | None = None,
                  hierarchy: ChaconHierarchy | None = None) -> Report:
    search_level = n + 3 if search_level is None else search_level
    result = min_zero_hamming_over_subwords(n, search_level, hierarchy)
    bound = Fraction(1, 6)
    report = Report(f"min d_0(W_{n}, beta) over factors of W_{search_level}")
    report.add(f"n={n}: minimum > 1/6", result.value > bound, computed=result.value,
               predicted=f"> {bound}", detail=f"witness at {result.position}")
    report.summary["minimum"] = result.value
    report.summary["witness_position"] = result.position
    return report


def equal_zero_count_identities(alpha: WordLike, beta: WordLike) -> Report:
    alpha, beta = _pair(alpha, beta)
    zeros = alpha.zeros
    if zeros != beta.zeros or zeros == 0:
        raise UnequalZeroCountError(
            f"identities need equal, positive zero counts (got {zeros} and {beta.zeros})")
    forward = zero_hamming(alpha, beta)
    backward = zero_hamming(beta, alpha)
    d = hamming(alpha, beta)
    rhs = 2 * forward * Fraction(zeros, len(alpha))
    report = Report("equal zero count identities")
    report.add("d_0 symmetric", forward == backward, computed=backward, predicted=forward)
    report.add("d = 2 d_0 #zeros/|alpha|", d == rhs, computed=d, predicted=rhs)
    return report
