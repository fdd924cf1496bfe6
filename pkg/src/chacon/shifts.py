"""Distances between W and its shifts sigma^i W.

For a shift 0 < i < |W_n| every copy of W_n inside W is compared against
one of only two words: the tail of W_n followed either by the head of the
next W_n (type A) or by 1 and then that head (type B).  Within the
W_{n+k}-prefix of W there are (3^k + 1)/2 copies of type A and (3^k - 1)/2
of type B, which gives the finite-level values in closed form and the
limit as the plain mean of the two comparison distances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import ChaconError, EmptyRangeError, LevelAboveCapError, NonPositiveShiftError
from .formatting import decimal_str
from .metrics import hamming, zero_hamming
from .report import Report
from .words import (
    ONE,
    ChaconHierarchy,
    FiniteWord,
    default_hierarchy,
    level_containing,
    level_length,
    occurrences,
)

SIXTH = Fraction(1, 6)
TWO_NINTHS = Fraction(2, 9)
FOUR_THIRDS = Fraction(4, 3)


def _check_shift(i: int) -> int:
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise NonPositiveShiftError(i)
    return i


@dataclass(frozen=True)
class ShiftDecomposition:
    i: int
    n: int
    beta1: FiniteWord
    beta2: FiniteWord
    d0_beta1: Fraction
    d0_beta2: Fraction


@dataclass(frozen=True)
class ShiftDistance:
    decomposition: ShiftDecomposition
    d0_limit: Fraction
    d_limit: Fraction

    @property
    def shift(self) -> int:
        return self.decomposition.i


@dataclass(frozen=True)
class FollowTypeCount:
    k: int
    count_A: int
    count_B: int


def anchor_level(i: int) -> int:
    """Smallest n with i < |W_n|."""
    return level_containing(_check_shift(i))


def decompose(i: int, hierarchy: ChaconHierarchy | None = None,
              anchor: int | None = None) -> ShiftDecomposition:
    """Build the two comparison words for shift ``i``.

    ``anchor`` overrides the level (it must still satisfy i < |W_anchor|);
    the limit distance does not depend on the choice.
    """
    h = hierarchy or default_hierarchy()
    n = anchor_level(i)
    if anchor is not None:
        if anchor < n:
            raise ChaconError(f"anchor {anchor} too small for shift {i}; need i < |W_anchor|")
        n = anchor
    w = h.build_level(n)
    length = len(w)
    tail = w[i:]
    beta1 = tail + w[:i]
    beta2 = tail + ONE + w[:i - 1]
    # the first copy of W_n in W is type A, the second (at |W_n|) is type B
    if h.segment(i, length) != beta1 or h.segment(length + i, length) != beta2:
        raise RuntimeError(f"comparison words for shift {i} disagree with W")
    return ShiftDecomposition(i, n, beta1, beta2, zero_hamming(w, beta1), zero_hamming(w, beta2))


def follow_type_counts(n: int, k: int) -> FollowTypeCount:
    """Follow types of the 3^k copies of W_n in the W_{n+k}-prefix of W.

    The last copy is followed by the next W_{n+k}, so it is type A.  The
    count does not depend on n.
    """
    if k < 0:
        raise ChaconError(f"k must be nonnegative, got {k}")
    return FollowTypeCount(k, (3**k + 1) // 2, (3**k - 1) // 2)


def scan_follow_types(n: int, k: int, hierarchy: ChaconHierarchy | None = None) -> FollowTypeCount:
    """Direct count of follow types by reading W past the W_{n+k} prefix."""
    h = hierarchy or default_hierarchy()
    block = h.build_level(n)
    prefix = h.build_level(n + k)
    lb = len(block)
    text = h.segment(0, len(prefix) + lb + 1).symbols
    raw = block.symbols
    count_a = count_b = 0
    for p in occurrences(block, prefix):
        after = p + lb
        if text[after:after + lb] == raw:
            count_a += 1
        elif text[after:after + lb + 1] == b"\x01" + raw:
            count_b += 1
        else:
            raise RuntimeError(f"copy of W_{n} at {p} has neither follow type")
    return FollowTypeCount(k, count_a, count_b)


def finite_level_d0(i: int, k: int, hierarchy: ChaconHierarchy | None = None,
                    decomposition: ShiftDecomposition | None = None) -> Fraction:
    """d_0(W_{n+k}, alpha_{n+k}) with n the anchor of i, in closed form."""
    dec = decomposition or decompose(i, hierarchy)
    counts = follow_type_counts(dec.n, k)
    return (counts.count_A * dec.d0_beta1 + counts.count_B * dec.d0_beta2) / 3**k


def finite_level_d(i: int, k: int, hierarchy: ChaconHierarchy | None = None,
                   decomposition: ShiftDecomposition | None = None) -> Fraction:
    """d(W_{n+k}, alpha_{n+k}); alpha has as many zeros as W_{n+k}."""
    dec = decomposition or decompose(i, hierarchy)
    m = dec.n + k
    return 2 * finite_level_d0(i, k, decomposition=dec) * Fraction(3**m, level_length(m))


def brute_force_finite_level(i: int, k: int,
                             hierarchy: ChaconHierarchy | None = None) -> tuple[Fraction, Fraction]:
    """(d, d_0) of W_{n+k} against the window of W starting at i, by direct comparison."""
    h = hierarchy or default_hierarchy()
    m = anchor_level(i) + k
    w = h.build_level(m)
    alpha = h.segment(i, len(w))
    return hamming(w, alpha), zero_hamming(w, alpha)


def limit_distance(i: int, hierarchy: ChaconHierarchy | None = None,
                   anchor: int | None = None) -> ShiftDistance:
    dec = decompose(i, hierarchy, anchor=anchor)
    d0 = (dec.d0_beta1 + dec.d0_beta2) / 2
    return ShiftDistance(dec, d0, FOUR_THIRDS * d0)


@dataclass(frozen=True)
class ProfileRow:
    shift: int
    d0: Fraction
    d: Fraction

    @property
    def d0_decimal(self) -> str:
        return decimal_str(self.d0)

    @property
    def d_decimal(self) -> str:
        return decimal_str(self.d)

    def as_dict(self) -> dict:
        return {
            "shift": self.shift,
            "d0_num": self.d0.numerator,
            "d0_den": self.d0.denominator,
            "d_num": self.d.numerator,
            "d_den": self.d.denominator,
            "d0_decimal": self.d0_decimal,
            "d_decimal": self.d_decimal,
        }


def profile(shifts: range, hierarchy: ChaconHierarchy | None = None) -> list[ProfileRow]:
    if len(shifts) == 0:
        raise EmptyRangeError(f"empty shift range {shifts}")
    rows = []
    for i in shifts:
        dist = limit_distance(i, hierarchy)
        rows.append(ProfileRow(i, dist.d0_limit, dist.d_limit))
    return rows


def prop2_shift(n: int) -> int:
    """i_n = 2|W_{n-1}| + 1, which equals 3^n."""
    if n < 1:
        raise ChaconError(f"n must be positive, got {n}")
    return 2 * level_length(n - 1) + 1


def prop2_values(n: int) -> tuple[Fraction, Fraction]:
    return SIXTH + Fraction(1, 2 * 3**n), TWO_NINTHS + Fraction(2, 3 ** (n + 1))


def verify_prop1(max_level: int, hierarchy: ChaconHierarchy | None = None) -> Report:
    """Every shift 0 < i < |W_max_level| stays strictly above 1/6 and 2/9.

    The summary records the minimum d_0 over i < |W_m| for each m, with
    every shift attaining it.
    """
    h = hierarchy or default_hierarchy()
    if max_level > h.cap:
        raise LevelAboveCapError(max_level, h.cap)
    report = Report(f"shifts 1 <= i < |W_{max_level}|")
    bad_d0 = bad_d = None
    best: Fraction | None = None
    argmins: list[int] = []
    minima: dict[int, tuple[Fraction, list[int]]] = {}
    level_end = {m: level_length(m) for m in range(1, max_level + 1)}
    for i in range(1, level_length(max_level)):
        dist = limit_distance(i, h)
        if dist.d_limit != FOUR_THIRDS * dist.d0_limit:
            raise RuntimeError(f"d and d_0 out of ratio at shift {i}")
        if bad_d0 is None and not dist.d0_limit > SIXTH:
            bad_d0 = (i, dist.d0_limit)
        if bad_d is None and not dist.d_limit > TWO_NINTHS:
            bad_d = (i, dist.d_limit)
        if best is None or dist.d0_limit < best:
            best, argmins = dist.d0_limit, [i]
        elif dist.d0_limit == best:
            argmins.append(i)
        for m, end in level_end.items():
            if i == end - 1:
                minima[m] = (best, list(argmins))
    report.add("d_0 > 1/6 for every shift", bad_d0 is None,
               detail="" if bad_d0 is None else f"shift {bad_d0[0]} gives {bad_d0[1]}")
    report.add("d > 2/9 for every shift", bad_d is None,
               detail="" if bad_d is None else f"shift {bad_d[0]} gives {bad_d[1]}")
    report.summary["minimum_d0"] = best
    report.summary["minimum_d"] = FOUR_THIRDS * best if best is not None else None
    report.summary["argmin"] = argmins[0] if argmins else None
    report.summary["argmins"] = argmins
    report.summary["minima_by_level"] = minima
    return report


def verify_prop2(max_n: int, hierarchy: ChaconHierarchy | None = None) -> Report:
    if max_n < 1:
        raise ChaconError(f"max_n must be at least 1, got {max_n}")
    h = hierarchy or default_hierarchy()
    report = Report(f"sharp shifts i_n = 2|W_(n-1)| + 1 for n = 1..{max_n}")
    for n in range(1, max_n + 1):
        i = prop2_shift(n)
        dist = limit_distance(i, h)
        d0, d = prop2_values(n)
        report.add(f"n={n} i={i} d_0", dist.d0_limit == d0, computed=dist.d0_limit, predicted=d0)
        report.add(f"n={n} i={i} d", dist.d_limit == d, computed=dist.d_limit, predicted=d)
        w = h.build_level(n - 1)
        dec = dist.decomposition
        report.add(f"n={n} beta1 = W W W 1", dec.n == n and dec.beta1 == w + w + w + ONE)
        report.add(f"n={n} beta2 = W 1 W W", dec.n == n and dec.beta2 == w + ONE + w + w)
    return report


def sample_shifts(count: int, upper: int, seed: int = 0) -> list[int]:
    """``count`` distinct shifts from [1, upper], sorted, reproducible by seed."""
    return sorted(random.Random(seed).sample(range(1, upper + 1), count))


def verify_lemma3(shifts: list[int], max_k: int = 6, brute_force_level: int = 13,
                  hierarchy: ChaconHierarchy | None = None) -> Report:
    """d = (4/3) d_0 in the limit, and d/d_0 = 4*3^m/(3^(m+1) - 1) at level m.

    Finite-level ratios come from the closed form for k <= max_k and, where
    the level m = n + k is at most ``brute_force_level``, from direct
    comparison against W as well.
    """
    h = hierarchy or default_hierarchy()
    brute_force_level = min(brute_force_level, h.cap)
    report = Report(f"d versus d_0 over {len(shifts)} shifts")
    bad_limit = bad_ratio = bad_brute = None
    brute_checked = 0
    for i in shifts:
        dist = limit_distance(i, h)
        if bad_limit is None and dist.d_limit != FOUR_THIRDS * dist.d0_limit:
            bad_limit = i
        dec = dist.decomposition
        for k in range(max_k + 1):
            m = dec.n + k
            expected = Fraction(4 * 3**m, 3 ** (m + 1) - 1)
            d0 = finite_level_d0(i, k, decomposition=dec)
            d = finite_level_d(i, k, decomposition=dec)
            if bad_ratio is None and d / d0 != expected:
                bad_ratio = (i, k)
            if m <= brute_force_level:
                bd, bd0 = brute_force_finite_level(i, k, h)
                brute_checked += 1
                if bad_brute is None and (bd != d or bd0 != d0 or bd / bd0 != expected):
                    bad_brute = (i, k)
    report.add("d_limit = 4/3 d0_limit", bad_limit is None,
               detail="" if bad_limit is None else f"shift {bad_limit}")
    report.add("finite-level d/d_0 = 4*3^m/(3^(m+1)-1)", bad_ratio is None,
               detail="" if bad_ratio is None else f"shift, k = {bad_ratio}")
    report.add("brute force agrees with closed form", bad_brute is None,
               detail=f"{brute_checked} comparisons" if bad_brute is None
               else f"shift, k = {bad_brute}")
    return report
