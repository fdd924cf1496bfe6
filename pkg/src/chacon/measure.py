"""Pattern frequencies in W_n, which converge to the shift-invariant measure
of the cylinder set of the pattern."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .errors import ChaconError, EmptyRangeError
from .words import (
    ChaconHierarchy,
    FiniteWord,
    WordLike,
    as_word,
    default_hierarchy,
    level_length,
    occurrences,
)


@dataclass(frozen=True)
class CylinderSet:
    """Points of the subshift reading ``pattern`` from ``position`` on.

    The position has no effect on the measure (the measure is shift
    invariant); it is carried only so the set can be named.
    """

    pattern: FiniteWord
    position: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pattern", as_word(self.pattern))
        if not self.pattern:
            raise ChaconError("cylinder pattern must be nonempty")


@dataclass(frozen=True)
class FrequencySequence:
    pattern: FiniteWord
    values: tuple[tuple[int, Fraction], ...]

    @property
    def final(self) -> Fraction:
        return self.values[-1][1]

    @property
    def differences(self) -> tuple[Fraction, ...]:
        return tuple(b[1] - a[1] for a, b in zip(self.values, self.values[1:]))

    @property
    def last_difference(self) -> Fraction | None:
        diffs = self.differences
        return diffs[-1] if diffs else None

    @property
    def shrinking(self) -> bool:
        """Whether |successive differences| never grow over the reported range."""
        sizes = [abs(d) for d in self.differences]
        return all(b <= a for a, b in zip(sizes, sizes[1:]))


def frequency(pattern: WordLike, n: int, hierarchy: ChaconHierarchy | None = None) -> Fraction:
    """Occurrences of ``pattern`` in W_n divided by |W_n|."""
    pattern = as_word(pattern)
    if not pattern:
        raise ChaconError("pattern must be nonempty")
    h = hierarchy or default_hierarchy()
    word = h.build_level(n)
    return Fraction(len(occurrences(pattern, word)), level_length(n))


def measure_estimate(pattern: WordLike | CylinderSet, levels: Iterable[int],
                     hierarchy: ChaconHierarchy | None = None) -> FrequencySequence:
    if isinstance(pattern, CylinderSet):
        pattern = pattern.pattern
    pattern = as_word(pattern)
    values = tuple((n, frequency(pattern, n, hierarchy)) for n in levels)
    if not values:
        raise EmptyRangeError("no levels requested")
    return FrequencySequence(pattern, values)
