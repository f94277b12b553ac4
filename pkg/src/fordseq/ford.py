"""The lexicographically least binary de Bruijn sequence and its breakpoints.

The Ford sequence of order ``n`` is built two ways:

* :func:`ford_by_concatenation` joins all Lyndon words whose length divides
  ``n`` in lexicographic order (production path);
* :func:`ford_by_greedy` appends bits one at a time, preferring 0, and
  backtracks when no completion is possible.

:func:`decompose` splits the sequence after its leading ``0`` into segments
``seg[n-1], ..., seg[1], seg[0]``. ``seg[i]`` holds the Lyndon factors whose
longest run of zeros is exactly ``i``; it ends with ``0**i 1**(n-i)`` and
``seg[0]`` is the final ``1``.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .words import BinaryWord, WordLike, as_word

__all__ = [
    "DEFAULT_MAX_ORDER",
    "DEFAULT_GREEDY_MAX_ORDER",
    "MAX_ORDER_ENV",
    "InvariantViolation",
    "max_order",
    "FordSequence",
    "FordDecomposition",
    "iter_lyndon_strings",
    "lyndon_words_dividing",
    "ford_by_concatenation",
    "ford_by_greedy",
    "ford_sequence",
    "is_de_bruijn",
    "decompose",
    "zero_run_suffix",
    "zero_run_block",
]

DEFAULT_MAX_ORDER = 28
DEFAULT_GREEDY_MAX_ORDER = 14
MAX_ORDER_ENV = "FORDSEQ_MAX_ORDER"


class InvariantViolation(RuntimeError):
    """An internal cross-check disagreed; indicates a bug or corrupted input."""


def max_order() -> int:
    """Largest supported order; ``$FORDSEQ_MAX_ORDER`` overrides the default 28."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be positive, got {value}")
    return value


def _check_order(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    if n > cap:
        raise ValueError(
            f"order {n} exceeds the {what} cap of {cap} "
            f"(an order-{n} sequence holds 2**{n} bits, {(1 << n) // 8:,} bytes packed)"
        )


@dataclass(frozen=True)
class FordSequence:
    order: int
    word: BinaryWord

    def __post_init__(self):
        if len(self.word) != 1 << self.order:
            raise ValueError(f"order-{self.order} sequence must have {1 << self.order} bits, got {len(self.word)}")

    def __str__(self) -> str:
        return str(self.word)


def iter_lyndon_strings(n: int) -> Iterator[str]:
    """Binary Lyndon words of every length dividing ``n``, in lex order.

    Steps through prenecklaces of length ``n`` with the necklace successor
    rule and emits the Lyndon prefix whenever its length divides ``n``;
    constant amortized time per word.
    """
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    a = [0] * (n + 1)  # a[1..n]; a[0] unused
    yield "0"
    while True:
        i = n
        while i > 0 and a[i] == 1:
            i -= 1
        if i == 0:
            return
        a[i] = 1
        for j in range(i + 1, n + 1):
            a[j] = a[j - i]
        if n % i == 0:
            yield "".join("1" if b else "0" for b in a[1 : i + 1])


def lyndon_words_dividing(n: int) -> list[BinaryWord]:
    _check_order(n, max_order(), "maximum")
    return [BinaryWord(s) for s in iter_lyndon_strings(n)]


_CHUNK_BITS = 1 << 20


def _pack_stream(pieces: Iterator[str]) -> tuple[bytes, int]:
    # pack in byte-aligned chunks so the unpacked sequence is never held whole
    packed: list[bytes] = []
    buf: list[str] = []
    pending = 0
    length = 0
    for piece in pieces:
        buf.append(piece)
        pending += len(piece)
        if pending >= _CHUNK_BITS:
            s = "".join(buf)
            cut = len(s) - len(s) % 8
            packed.append(np.packbits(np.frombuffer(s[:cut].encode("ascii"), np.uint8) - 48).tobytes())
            length += cut
            buf, pending = [s[cut:]], len(s) - cut
    tail = "".join(buf)
    packed.append(np.packbits(np.frombuffer(tail.encode("ascii"), np.uint8) - 48).tobytes())
    return b"".join(packed), length + len(tail)


def ford_by_concatenation(n: int) -> FordSequence:
    _check_order(n, max_order(), "maximum")
    packed, length = _pack_stream(iter_lyndon_strings(n))
    return FordSequence(n, BinaryWord._from_packed(packed, length))


def ford_by_greedy(n: int, cap: int = DEFAULT_GREEDY_MAX_ORDER) -> FordSequence:
    """Prefer-0 construction with backtracking.

    Starts from ``0**n`` and appends the smaller bit whose new length-``n``
    window is unused. When neither bit fits, or the finished string fails
    the cyclic wrap-around windows, the last choice is undone. The first
    complete string reached is the lex-least de Bruijn sequence.
    """
    _check_order(n, cap, "greedy")
    size = 1 << n
    mask = size - 1
    seen = bytearray(size)
    seen[0] = 1
    bits = [0] * n
    window = 0
    stack: list[tuple[int, int]] = []  # (previous window, bit placed)
    bit = 0
    while True:
        if len(bits) == size:
            wrapped = []
            w = window
            for j in range(n - 1):
                w = ((w << 1) | bits[j]) & mask
                if seen[w]:
                    break
                seen[w] = 1
                wrapped.append(w)
            else:
                return FordSequence(n, BinaryWord(bits))
            for w in wrapped:
                seen[w] = 0
            bit = 2
        while bit < 2:
            nxt = ((window << 1) | bit) & mask
            if not seen[nxt]:
                seen[nxt] = 1
                stack.append((window, bit))
                bits.append(bit)
                window, bit = nxt, 0
                break
            bit += 1
        else:
            if not stack:
                raise InvariantViolation(f"greedy search exhausted without a de Bruijn sequence of order {n}")
            seen[window] = 0
            bits.pop()
            window, last = stack.pop()
            bit = last + 1


def ford_sequence(n: int) -> FordSequence:
    """Cached :func:`ford_by_concatenation`."""
    return _cached_ford(n, max_order())


@functools.lru_cache(maxsize=32)
def _cached_ford(n: int, cap: int) -> FordSequence:
    return ford_by_concatenation(n)


def _window_values(arr: np.ndarray, n: int) -> np.ndarray:
    size = arr.size
    ext = np.concatenate([arr, arr[: n - 1]]).astype(np.int64)
    vals = np.zeros(size, dtype=np.int64)
    for j in range(n):
        vals = (vals << 1) | ext[j : j + size]
    return vals


def is_de_bruijn(w: WordLike, n: int) -> bool:
    """True iff the ``2**n`` cyclic length-``n`` windows of ``w`` are distinct."""
    w = as_word(w)
    if n < 1:
        raise ValueError(f"order must be a positive integer, got {n}")
    if len(w) != 1 << n:
        raise ValueError(f"a de Bruijn sequence of order {n} has {1 << n} bits, got {len(w)}")
    counts = np.bincount(_window_values(w.to_array(), n), minlength=1 << n)
    return bool((counts == 1).all())


def _max_zero_run(s: str) -> int:
    return max(map(len, s.split("1")))


@dataclass(frozen=True)
class FordDecomposition:
    """Breakpoint segmentation of a Ford sequence.

    ``segments`` lists ``(i, seg[i])`` for ``i = n-1`` down to ``0`` and
    ``offsets`` the 0-based start of each segment within the sequence.
    """

    order: int
    segments: tuple[tuple[int, BinaryWord], ...]
    offsets: tuple[int, ...]

    def segment(self, i: int) -> BinaryWord:
        """``seg[i]``; empty for ``i > n - 1``."""
        if i < 0:
            raise ValueError("segment index must be non-negative")
        if i > self.order - 1:
            return BinaryWord()
        return self.segments[self.order - 1 - i][1]

    def suffix(self, m: int) -> BinaryWord:
        """``seg[m] ... seg[1] seg[0]``: the Lyndon factors with at most ``m`` consecutive zeros."""
        if m < 0:
            raise ValueError("m must be non-negative")
        return BinaryWord.concat(self.segment(i) for i in range(min(m, self.order - 1), -1, -1))

    def block(self, m: int) -> BinaryWord:
        """``seg[m] ... seg[1]``: :meth:`suffix` without its final ``1``."""
        if m < 1:
            raise ValueError("m must be at least 1")
        return BinaryWord.concat(self.segment(i) for i in range(min(m, self.order - 1), 0, -1))


def decompose(f: FordSequence) -> FordDecomposition:
    """Split ``f`` into breakpoint segments.

    Segments come from classifying the Lyndon factors by their longest zero
    run, then are checked against a direct scan for the marker strings
    ``0**i 1**(n-i)``. Disagreement raises :class:`InvariantViolation`.
    """
    return _decompose(f)


@functools.lru_cache(maxsize=32)
def _decompose(f: FordSequence) -> FordDecomposition:
    n = f.order
    text = str(f.word)
    factors = iter_lyndon_strings(n)
    if next(factors) != text[:1]:
        raise InvariantViolation("sequence does not start with the Lyndon factor '0'")

    groups: dict[int, list[str]] = {i: [] for i in range(n)}
    previous = n - 1
    for factor in factors:
        run = _max_zero_run(factor)
        if run > previous:
            raise InvariantViolation(f"factor {factor} with zero run {run} follows run {previous}")
        groups[run].append(factor)
        previous = run
    by_class = {i: "".join(groups[i]) for i in range(n)}
    if "0" + "".join(by_class[i] for i in range(n - 1, -1, -1)) != text:
        raise InvariantViolation("Lyndon factors do not reassemble the sequence")

    # marker scan: seg[i] ends at the unique occurrence of 0^i 1^(n-i)
    ends = {}
    for i in range(1, n):
        pos = text.find("0" * i + "1" * (n - i))
        if pos < 0:
            raise InvariantViolation(f"marker 0^{i}1^{n - i} missing")
        ends[i] = pos + n
    starts = {n - 1: 1}
    for i in range(n - 2, -1, -1):
        starts[i] = ends[i + 1]
    ends[0] = len(text)
    for i in range(n):
        if text[starts[i] : ends[i]] != by_class[i]:
            raise InvariantViolation(f"segment {i} disagrees between factor classification and marker scan")
    if by_class[0] != "1":
        raise InvariantViolation("final segment is not '1'")

    order_desc = range(n - 1, -1, -1)
    return FordDecomposition(
        order=n,
        segments=tuple((i, BinaryWord(by_class[i])) for i in order_desc),
        offsets=tuple(starts[i] for i in order_desc),
    )


def zero_run_suffix(f: FordSequence, m: int) -> BinaryWord:
    """Suffix of ``f`` made of the Lyndon factors with at most ``m`` consecutive zeros.

    Always ends in the final ``1``; for ``m >= n - 1`` it is ``f`` minus its
    leading ``0``, and for ``m = 0`` it is just ``"1"``.
    """
    return decompose(f).suffix(m)


def zero_run_block(f: FordSequence, m: int) -> BinaryWord:
    """:func:`zero_run_suffix` without the final ``1``; requires ``m >= 1``."""
    return decompose(f).block(m)
