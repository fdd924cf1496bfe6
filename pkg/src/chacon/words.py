"""Finite binary words and the Chacón hierarchy W_0 = 0, W_{n+1} = W_n W_n 1 W_n.

Each W_n is a prefix of the infinite word W, so positions of W are addressed
by plain integers.  Letters of W are served by walking the length recursion
top-down, which never builds the enclosing level.
"""

from __future__ import annotations

import threading
from collections.abc import Iterable
from typing import Union

import numpy as np

from .errors import ChaconError, InvalidSymbolError, LevelAboveCapError
from .report import Report

DEFAULT_CAP = 15
# Levels at or below this are materialized freely by ``segment``.
_LEAF_LEVEL = 10

WordLike = Union["FiniteWord", str, bytes, Iterable[int]]


class FiniteWord:
    """An immutable word over {0, 1}, one byte (0x00 or 0x01) per symbol."""

    __slots__ = ("_data",)

    def __init__(self, symbols: WordLike = b""):
        if isinstance(symbols, FiniteWord):
            data = symbols._data
        elif isinstance(symbols, str):
            if symbols.strip("01"):
                raise InvalidSymbolError(f"word contains symbols other than 0/1: {symbols!r}")
            data = symbols.encode("ascii").translate(_FROM_ASCII)
        elif isinstance(symbols, (bytes, bytearray, memoryview)):
            data = bytes(symbols)
        else:
            data = bytes(list(symbols))
        if data.translate(None, b"\x00\x01"):
            raise InvalidSymbolError("word contains symbols other than 0/1")
        self._data = data

    @classmethod
    def _trusted(cls, data: bytes) -> "FiniteWord":
        word = cls.__new__(cls)
        word._data = data
        return word

    @property
    def symbols(self) -> bytes:
        return self._data

    @property
    def length(self) -> int:
        return len(self._data)

    @property
    def array(self) -> np.ndarray:
        """Read-only uint8 view of the symbols."""
        return np.frombuffer(self._data, dtype=np.uint8)

    def count(self, symbol: int) -> int:
        return self._data.count(bytes([symbol]))

    @property
    def zeros(self) -> int:
        return self._data.count(b"\x00")

    @property
    def ones(self) -> int:
        return self._data.count(b"\x01")

    def find(self, pattern: WordLike, start: int = 0) -> int:
        return self._data.find(as_word(pattern)._data, start)

    def __contains__(self, pattern: WordLike) -> bool:
        return as_word(pattern)._data in self._data

    def startswith(self, prefix: WordLike) -> bool:
        return self._data.startswith(as_word(prefix)._data)

    def endswith(self, suffix: WordLike) -> bool:
        return self._data.endswith(as_word(suffix)._data)

    def __len__(self) -> int:
        return len(self._data)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return FiniteWord._trusted(self._data[key])
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __add__(self, other: WordLike) -> "FiniteWord":
        return FiniteWord._trusted(self._data + as_word(other)._data)

    def __radd__(self, other: WordLike) -> "FiniteWord":
        return FiniteWord._trusted(as_word(other)._data + self._data)

    def __mul__(self, times: int) -> "FiniteWord":
        return FiniteWord._trusted(self._data * times)

    def __eq__(self, other) -> bool:
        if isinstance(other, FiniteWord):
            return self._data == other._data
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._data)

    def __str__(self) -> str:
        return self._data.translate(_TO_ASCII).decode("ascii")

    def __repr__(self) -> str:
        text = str(self)
        if len(text) > 40:
            text = f"{text[:40]}...<{len(self)} symbols>"
        return f"FiniteWord({text!r})"


_FROM_ASCII = bytes.maketrans(b"01", b"\x00\x01")
_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")

ONE = FiniteWord._trusted(b"\x01")
EMPTY = FiniteWord._trusted(b"")


def as_word(value: WordLike) -> FiniteWord:
    return value if isinstance(value, FiniteWord) else FiniteWord(value)


def level_length(n: int) -> int:
    """|W_n| = (3^(n+1) - 1) / 2."""
    check_level(n)
    return (3 ** (n + 1) - 1) // 2


def zero_count(n: int) -> int:
    check_level(n)
    return 3**n


def one_count(n: int) -> int:
    check_level(n)
    return (3**n - 1) // 2


def check_level(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise ChaconError(f"level must be a nonnegative integer, got {n!r}")
    return int(n)


def level_containing(i: int) -> int:
    """Smallest n with i < |W_n|."""
    n, length = 0, 1
    while i >= length:
        n += 1
        length = 3 * length + 1
    return n


def occurrences(pattern: WordLike, haystack: WordLike) -> list[int]:
    """All start positions of ``pattern`` in ``haystack``, overlaps included."""
    needle = as_word(pattern).symbols
    hay = as_word(haystack).symbols
    if not needle:
        raise ChaconError("pattern must be nonempty")
    found = []
    p = hay.find(needle)
    while p != -1:
        found.append(p)
        p = hay.find(needle, p + 1)
    return found


def letter_at(i: int) -> int:
    """W(i), in O(log i) steps and without materializing anything."""
    if i < 0:
        raise ChaconError(f"position must be nonnegative, got {i}")
    n = level_containing(i)
    length = (3 ** (n + 1) - 1) // 2
    while n > 0:
        length = (length - 1) // 3
        n -= 1
        if i < length:
            continue
        if i < 2 * length:
            i -= length
        elif i == 2 * length:
            return 1
        else:
            i -= 2 * length + 1
    return 0


class ChaconHierarchy:
    """Per-level metadata plus explicit words W_0..W_cap, built on demand.

    Levels are built once behind a lock and never mutated afterwards, so a
    hierarchy may be shared between threads.
    """

    def __init__(self, cap: int = DEFAULT_CAP):
        self.cap = check_level(cap)
        self._levels: list[bytes] = [b"\x00"]
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"ChaconHierarchy(cap={self.cap})"

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(level_length(n) for n in range(self.cap + 1))

    @property
    def zero_counts(self) -> tuple[int, ...]:
        return tuple(zero_count(n) for n in range(self.cap + 1))

    @property
    def one_counts(self) -> tuple[int, ...]:
        return tuple(one_count(n) for n in range(self.cap + 1))

    @property
    def materialization_cap(self) -> int:
        return self.cap

    def _raw(self, n: int) -> bytes:
        if n >= len(self._levels):
            with self._lock:
                while len(self._levels) <= n:
                    w = self._levels[-1]
                    self._levels.append(w + w + b"\x01" + w)
        return self._levels[n]

    def build_level(self, n: int) -> FiniteWord:
        n = check_level(n)
        if n > self.cap:
            raise LevelAboveCapError(n, self.cap)
        return FiniteWord._trusted(self._raw(n))

    def letter_at(self, i: int) -> int:
        return letter_at(i)

    def segment(self, start: int, length: int) -> FiniteWord:
        """W(start) ... W(start + length - 1)."""
        if start < 0 or length < 0:
            raise ChaconError(f"start and length must be nonnegative, got ({start}, {length})")
        if length == 0:
            return EMPTY
        end = start + length
        n = level_containing(end - 1)
        pieces: list[bytes] = []
        self._emit(n, start, end, pieces)
        return FiniteWord._trusted(b"".join(pieces))

    def _emit(self, n: int, lo: int, hi: int, out: list[bytes]) -> None:
        # lo, hi are offsets inside W_n with 0 <= lo < hi <= |W_n|.
        if n <= self.cap and (n <= _LEAF_LEVEL or n < len(self._levels)):
            out.append(self._raw(n)[lo:hi])
            return
        sub = (3**n - 1) // 2
        for offset in (0, sub):
            a, b = max(lo, offset), min(hi, offset + sub)
            if a < b:
                self._emit(n - 1, a - offset, b - offset, out)
        if lo <= 2 * sub < hi:
            out.append(b"\x01")
        offset = 2 * sub + 1
        a, b = max(lo, offset), min(hi, offset + sub)
        if a < b:
            self._emit(n - 1, a - offset, b - offset, out)

    def check_structure(self, n: int) -> Report:
        """Check the basic combinatorial facts about W_n.

        A failing check names the fact and the offending position; any
        failure is an implementation bug.
        """
        word = self.build_level(n)
        data = word.symbols
        report = Report(f"structure of W_{n}")
        report.add("length", len(word) == level_length(n), computed=len(word),
                   predicted=level_length(n))
        if n == 0:
            report.add("W_0 is '0'", str(word) == "0", computed=str(word), predicted="0")
        else:
            report.add("begins with 001", word.startswith("001"), computed=str(word[:3]),
                       predicted="001")
            report.add("ends with 10", word.endswith("10"), computed=str(word[-2:]), predicted="10")
        report.add("zero count", word.zeros == zero_count(n), computed=word.zeros,
                   predicted=zero_count(n))
        report.add("one count", word.ones == one_count(n), computed=word.ones,
                   predicted=one_count(n))
        for factor in ("11", "0000"):
            p = word.find(factor)
            report.add(f"no factor {factor}", p == -1, detail="" if p == -1 else f"found at {p}")

        for m in range(n + 1):
            block = self._raw(m)
            lm = len(block)
            if 4 * lm <= len(data):
                p = data.find(block * 4)
                report.add(f"no factor (W_{m})^4", p == -1,
                           detail="" if p == -1 else f"found at {p}")
            positions = occurrences(block, data)
            bad_before = bad_after = None
            last = positions[-1]
            for p in positions:
                if p and bad_before is None:
                    if not (data[p - lm:p] == block or data[p - lm - 1:p] == block + b"\x01"):
                        bad_before = p
                if p != last and bad_after is None:
                    if not (data[p + lm:p + 2 * lm] == block
                            or data[p + lm:p + 2 * lm + 1] == b"\x01" + block):
                        bad_after = p
            report.add(f"W_{m} preceded by W_{m} or W_{m}1", bad_before is None,
                       detail="" if bad_before is None else f"occurrence at {bad_before}")
            report.add(f"W_{m} followed by W_{m} or 1W_{m}", bad_after is None,
                       detail="" if bad_after is None else f"occurrence at {bad_after}")
        return report

    def verify_occurrences(self, max_total: int, max_n: int | None = None,
                           max_k: int | None = None) -> Report:
        """W_n occurs exactly 3^k times in W_{n+k}, for all n + k <= max_total."""
        if max_total > self.cap:
            raise LevelAboveCapError(max_total, self.cap)
        report = Report("occurrences of W_n in W_{n+k}")
        for n in range(max_total + 1):
            if max_n is not None and n > max_n:
                break
            for k in range(max_total - n + 1):
                if max_k is not None and k > max_k:
                    break
                count = len(occurrences(self._raw(n), self._raw(n + k)))
                report.add(f"n={n} k={k}", count == 3**k, computed=count, predicted=3**k)
        return report


_default: ChaconHierarchy | None = None
_default_lock = threading.Lock()


def default_hierarchy() -> ChaconHierarchy:
    global _default
    if _default is None:
        with _default_lock:
            if _default is None:
                _default = ChaconHierarchy(DEFAULT_CAP)
    return _default


def build_level(n: int, hierarchy: ChaconHierarchy | None = None) -> FiniteWord:
    return (hierarchy or default_hierarchy()).build_level(n)


def segment(start: int, length: int, hierarchy: ChaconHierarchy | None = None) -> FiniteWord:
    return (hierarchy or default_hierarchy()).segment(start, length)


def check_structure(n: int, hierarchy: ChaconHierarchy | None = None) -> Report:
    return (hierarchy or default_hierarchy()).check_structure(n)
