"""Independent brute-force reference built on plain Python strings.

Nothing here imports the package; tests compare the package against it.
"""

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def word(n: int) -> str:
    w = "0"
    for _ in range(n):
        w = w + w + "1" + w
    return w


def prefix(length: int) -> str:
    n = 0
    while len(word(n)) < length:
        n += 1
    return word(n)[:length]


def count_overlapping(pattern: str, text: str) -> int:
    return sum(text.startswith(pattern, p) for p in range(len(text) - len(pattern) + 1))


def d(a: str, b: str) -> Fraction:
    return Fraction(sum(x != y for x, y in zip(a, b)), len(a))


def d0(a: str, b: str) -> Fraction:
    zeros = [j for j, c in enumerate(a) if c == "0"]
    return Fraction(sum(b[j] == "1" for j in zeros), len(zeros))


def min_d0_over_factors(n: int, search_level: int):
    target, hay = word(n), word(search_level)
    best = None
    for p in range(len(hay) - len(target) + 1):
        beta = hay[p:p + len(target)]
        if beta == target:
            continue
        v = d0(target, beta)
        if best is None or v < best[0]:
            best = (v, beta, p)
    return best


def finite_d0(i: int, level: int) -> Fraction:
    w = word(level)
    return d0(w, prefix(i + len(w))[i:])
