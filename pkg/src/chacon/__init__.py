"""Exact combinatorics of the Chacón word W = 0010 0010 1 0010 ..."""

from .errors import ChaconError
from .measure import CylinderSet, FrequencySequence, frequency, measure_estimate
from .metrics import (
    equal_zero_count_identities,
    hamming,
    min_zero_hamming_over_subwords,
    verify_lemma1,
    zero_hamming,
)
from .report import Report
from .shifts import (
    FollowTypeCount,
    ShiftDecomposition,
    ShiftDistance,
    anchor_level,
    decompose,
    finite_level_d0,
    follow_type_counts,
    limit_distance,
    profile,
    verify_prop1,
    verify_prop2,
)
from .words import (
    ChaconHierarchy,
    FiniteWord,
    build_level,
    check_structure,
    letter_at,
    occurrences,
    segment,
)

__version__ = "0.1.0"
