"""Binary words, skew accounting, and rotation/Lyndon predicates.

Words are ordered lexicographically with ``0 < 1``, a proper prefix sorting
before any of its extensions.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator, Union

import numpy as np

__all__ = [
    "BinaryWord",
    "WordLike",
    "as_word",
    "skew",
    "count_zeros",
    "count_ones",
    "is_lyndon",
    "least_rotation",
    "prefix_skew_profile",
    "discrepancy",
    "skew_extremes",
]


@functools.total_ordering
class BinaryWord:
    """Immutable finite word over ``{0, 1}``, stored bit-packed.

    Accepts a ``"0101"`` string, an iterable of 0/1 integers, or a numpy
    array of 0/1 values. A 2**28-symbol word occupies 32 MiB.
    """

    __slots__ = ("_packed", "_length")

    def __init__(self, bits: Union[str, Iterable[int], np.ndarray, "BinaryWord"] = ""):
        if isinstance(bits, BinaryWord):
            self._packed, self._length = bits._packed, bits._length
            return
        arr = _to_bit_array(bits)
        self._packed = np.packbits(arr).tobytes()
        self._length = int(arr.size)

    @classmethod
    def _from_packed(cls, packed: bytes, length: int) -> "BinaryWord":
        word = cls.__new__(cls)
        word._packed = packed
        word._length = length
        return word

    @classmethod
    def concat(cls, words: Iterable["BinaryWord"]) -> "BinaryWord":
        arrays = [w.to_array() for w in words]
        if not arrays:
            return cls()
        return cls(np.concatenate(arrays))

    def to_array(self) -> np.ndarray:
        """Unpacked ``uint8`` array of the symbols."""
        buf = np.frombuffer(self._packed, dtype=np.uint8)
        return np.unpackbits(buf, count=self._length)

    def count_ones(self) -> int:
        # packbits pads with zero bits, so padding never contributes
        return int.from_bytes(self._packed, "big").bit_count()

    def __len__(self) -> int:
        return self._length

    def __iter__(self) -> Iterator[int]:
        return iter(self.to_array().tolist())

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BinaryWord(self.to_array()[index])
        if index < 0:
            index += self._length
        if not 0 <= index < self._length:
            raise IndexError("BinaryWord index out of range")
        return (self._packed[index >> 3] >> (7 - (index & 7))) & 1

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        if not isinstance(other, BinaryWord):
            other = BinaryWord(other)
        return BinaryWord.concat((self, other))

    def __str__(self) -> str:
        return (self.to_array() + ord("0")).tobytes().decode("ascii")

    def __repr__(self) -> str:
        if self._length > 64:
            return f"BinaryWord(<{self._length} bits>)"
        return f"BinaryWord('{self}')"

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            other = BinaryWord(other)
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self._length == other._length and self._packed == other._packed

    def __lt__(self, other: "BinaryWord") -> bool:
        if isinstance(other, str):
            other = BinaryWord(other)
        if not isinstance(other, BinaryWord):
            return NotImplemented
        # zero padding makes (packed, length) order agree with bitwise lex order
        return (self._packed, self._length) < (other._packed, other._length)

    def __hash__(self) -> int:
        return hash((self._packed, self._length))


WordLike = Union[BinaryWord, str]


def _to_bit_array(bits) -> np.ndarray:
    if isinstance(bits, str):
        arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        arr = np.asarray(bits if isinstance(bits, np.ndarray) else list(bits))
        if arr.size and not np.issubdtype(arr.dtype, np.integer) and arr.dtype != bool:
            raise ValueError("binary word symbols must be integers 0 or 1")
        arr = arr.astype(np.int64, copy=False)
        if arr.size and (arr.min() < 0 or arr.max() > 1):
            raise ValueError("binary word symbols must be 0 or 1")
        arr = arr.astype(np.uint8)
    if arr.size and arr.max() > 1:
        raise ValueError("binary word symbols must be '0' or '1'")
    return arr.reshape(-1)


def as_word(w: WordLike) -> BinaryWord:
    return w if isinstance(w, BinaryWord) else BinaryWord(w)


def count_ones(w: WordLike) -> int:
    return as_word(w).count_ones()


def count_zeros(w: WordLike) -> int:
    w = as_word(w)
    return len(w) - w.count_ones()


def skew(w: WordLike) -> int:
    """Number of zeros minus number of ones.

    Python integers never overflow; for supported inputs (length at most
    2**28) the value fits a signed 64-bit integer regardless.
    """
    w = as_word(w)
    return len(w) - 2 * w.count_ones()


def _nonempty(w: WordLike) -> str:
    s = str(w)
    if not s:
        raise ValueError("operation undefined on the empty word")
    return s


def is_lyndon(w: WordLike) -> bool:
    """True iff ``w`` is strictly smaller than each of its proper rotations."""
    s = _nonempty(w)
    # first step of Duval's factorization: w is Lyndon iff the leading
    # Lyndon factor spans the whole word exactly once
    i, j = 0, 1
    while j < len(s) and s[i] <= s[j]:
        i = 0 if s[i] < s[j] else i + 1
        j += 1
    return j == len(s) and i == 0


def least_rotation(w: WordLike) -> BinaryWord:
    """Lexicographically least cyclic rotation (Booth's algorithm)."""
    s = _nonempty(w)
    n = len(s)
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = s[j % n]
        i = fail[j - k - 1]
        while i != -1 and c != s[(k + i + 1) % n]:
            if c < s[(k + i + 1) % n]:
                k = j - i - 1
            i = fail[i]
        if i == -1 and c != s[(k + i + 1) % n]:
            if c < s[(k + i + 1) % n]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    k %= n
    return BinaryWord(s[k:] + s[:k])


def prefix_skew_profile(w: WordLike) -> np.ndarray:
    """Skew of every nonempty prefix, as an ``int64`` array of length ``|w|``."""
    arr = as_word(w).to_array().astype(np.int64)
    return np.cumsum(1 - 2 * arr)


def skew_extremes(w: WordLike) -> tuple[int, int]:
    """``(max, min)`` prefix skew, counting the empty prefix (skew 0)."""
    profile = prefix_skew_profile(w)
    if profile.size == 0:
        return 0, 0
    return max(0, int(profile.max())), min(0, int(profile.min()))


def discrepancy(w: WordLike) -> int:
    """Largest prefix skew; 0 for the empty word.

    Zero-heavy words such as the Ford sequence only need the maximum. Use
    :func:`skew_extremes` when the most negative excursion matters too.
    """
    return skew_extremes(w)[0]
