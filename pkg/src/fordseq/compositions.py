"""Compositions into parts >= 2, colored compositions, and primitive multisets.

A *primitive* is a Lyndon word ``0**i 1**j`` (``i, j >= 1``); its *order* is
``i``. Every Lyndon factor of a zero-run block splits uniquely into
primitives, and each primitive maps to the colored integer ``(i + j, i - 1)``.
Colored integers are written with primes, so ``(4, 2)`` prints as ``4''``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .ford import ford_sequence, zero_run_block
from .recurrences import padded_fibonacci
from .words import BinaryWord, WordLike, as_word, least_rotation

__all__ = [
    "MAX_ENUMERATION_TOTAL",
    "MAX_ENUMERATION_COLORS",
    "ColoredComposition",
    "PrimitiveMultiset",
    "parse_primitives",
    "order_one_primitives",
    "primitive_multiset",
    "primitive_count",
    "colored_primitive_count",
    "compositions_ge2",
    "colored_compositions",
    "count_colored_compositions",
    "composition_word",
    "lyndon_root",
    "format_part",
]

MAX_ENUMERATION_TOTAL = 24
MAX_ENUMERATION_COLORS = 8

_PRIMITIVE = re.compile(r"(0+)(1+)")


def format_part(part: int, color: int) -> str:
    return f"{part}{chr(39) * color}"


@dataclass(frozen=True)
class ColoredComposition:
    """Ordered parts ``(x, y)`` with ``x >= 2`` and ``0 <= y <= min(x - 2, colors - 1)``."""

    parts: tuple[tuple[int, int], ...]
    colors: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple((int(x), int(y)) for x, y in self.parts))
        if self.colors < 1:
            raise ValueError("number of colors must be at least 1")
        for x, y in self.parts:
            if x < 2:
                raise ValueError(f"part {x} is smaller than 2")
            if not 0 <= y <= min(x - 2, self.colors - 1):
                raise ValueError(f"color {y} not allowed on part {x} with {self.colors} colors")

    @property
    def total(self) -> int:
        return sum(x for x, _ in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(format_part(x, y) for x, y in self.parts)


@dataclass
class PrimitiveMultiset:
    """Multiplicities of colored integers ``(k, color)`` from one block."""

    m: int
    n: int
    counts: Counter = field(default_factory=Counter)

    def multiplicity(self, k: int, color: int = 0) -> int:
        return self.counts.get((k, color), 0)

    def uncolored(self) -> Counter:
        """Multiplicities of ``k`` with color 0, keyed by ``k``."""
        return Counter({k: c for (k, y), c in self.counts.items() if y == 0})

    def total_zeros(self) -> int:
        return sum((y + 1) * c for (k, y), c in self.counts.items())

    def total_ones(self) -> int:
        return sum((k - y - 1) * c for (k, y), c in self.counts.items())


def parse_primitives(w: WordLike) -> list[tuple[int, int]]:
    """Split ``w`` into maximal blocks ``0**i 1**j`` and return ``(i, i + j)`` pairs.

    >>> parse_primitives("001011")
    [(2, 3), (1, 3)]
    """
    s = str(w)
    if s and (s[0] != "0" or s[-1] != "1"):
        raise ValueError(f"{s!r} is not a concatenation of blocks 0^i 1^j")
    return [(len(z), len(z) + len(o)) for z, o in _PRIMITIVE.findall(s)]


def _require_order(n: int) -> None:
    if n < 2:
        raise ValueError(f"the order-1 segment is empty below order 2; got n = {n}")


def primitive_multiset(m: int, n: int) -> PrimitiveMultiset:
    """Colored integers of every primitive in the ``m``-run block of the order-``n`` Ford sequence."""
    if m < 1:
        raise ValueError("m must be at least 1")
    _require_order(n)
    block = zero_run_block(ford_sequence(n), m)
    counts = Counter((k, i - 1) for i, k in parse_primitives(block))
    return PrimitiveMultiset(m, n, counts)


def order_one_primitives(n: int) -> PrimitiveMultiset:
    """Lengths of the ``01**j`` primitives in the order-1 segment (all color 0)."""
    return primitive_multiset(1, n)


def primitive_count(n: int, k: int) -> int:
    """How many order-1 primitives of length ``k`` the order-1 segment of ``F_n`` holds."""
    return order_one_primitives(n).multiplicity(k)


def colored_primitive_count(m: int, n: int, k: int) -> int:
    """How many primitives of order 1 and length ``k`` the ``m``-run block of ``F_n`` holds."""
    return primitive_multiset(m, n).multiplicity(k)


def _check_enumeration(total: int, colors: int = 1) -> None:
    if total > MAX_ENUMERATION_TOTAL or colors > MAX_ENUMERATION_COLORS:
        raise ValueError(
            f"explicit enumeration is capped at total <= {MAX_ENUMERATION_TOTAL} and "
            f"colors <= {MAX_ENUMERATION_COLORS}; use count_colored_compositions for counts"
        )


def _iter_compositions_ge2(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(2, total + 1):
        for rest in _iter_compositions_ge2(total - first):
            yield (first,) + rest


def compositions_ge2(total: int) -> list[tuple[int, ...]]:
    """All compositions of ``total`` into parts >= 2, in lexicographic order.

    ``total = 0`` has the single empty composition; ``total = 1`` has none.
    """
    if total < 0:
        raise ValueError("total must be non-negative")
    _check_enumeration(total)
    return list(_iter_compositions_ge2(total))


def colored_compositions(colors: int, total: int) -> list[ColoredComposition]:
    """Every ``colors``-colored composition of ``total`` into parts >= 2.

    Part tuples come in lexicographic order; within one tuple, colorings
    vary fastest at the last part.
    """
    if colors < 1:
        raise ValueError("number of colors must be at least 1")
    if total < 0:
        raise ValueError("total must be non-negative")
    _check_enumeration(total, colors)
    out = []
    for parts in _iter_compositions_ge2(total):
        palettes = [range(min(x - 2, colors - 1) + 1) for x in parts]
        for coloring in itertools.product(*palettes):
            out.append(ColoredComposition(tuple(zip(parts, coloring)), colors))
    return out


def count_colored_compositions(colors: int, total: int) -> int:
    """Number of ``colors``-colored compositions of ``total`` into parts >= 2.

    Goes through the recurrence rather than enumerating, so it has no cap.
    """
    if colors < 1:
        raise ValueError("number of colors must be at least 1")
    if total < 0:
        raise ValueError("total must be non-negative")
    return padded_fibonacci(colors + 1, total + colors - 1)


def composition_word(k: int, parts: tuple[int, ...] | ColoredComposition) -> BinaryWord:
    """``0 1**(k-1)`` followed by ``0 1**(x-1)`` for each part ``x``."""
    if isinstance(parts, ColoredComposition):
        if any(y for _, y in parts.parts):
            raise ValueError("composition_word takes uncolored compositions")
        parts = tuple(x for x, _ in parts.parts)
    if k < 2 or any(x < 2 for x in parts):
        raise ValueError("parts must be at least 2")
    return BinaryWord("".join("0" + "1" * (x - 1) for x in (k,) + tuple(parts)))


def lyndon_root(w: WordLike) -> BinaryWord:
    """The Lyndon word ``r`` whose power ``r**(|w|/|r|)`` is the least rotation of ``w``."""
    s = str(least_rotation(as_word(w)))
    n = len(s)
    for p in range(1, n + 1):
        if n % p == 0 and s[:p] * (n // p) == s:
            return BinaryWord(s[:p])
    raise AssertionError("unreachable: p = n always matches")
