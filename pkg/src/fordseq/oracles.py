"""Brute-force reference implementations.

Slow on purpose: each one follows a definition literally and shares no
code with the fast paths it is used to check.
"""

from __future__ import annotations

import itertools
from typing import Iterator


def rotations(s: str) -> list[str]:
    return [s[i:] + s[:i] for i in range(len(s))]


def naive_least_rotation(s: str) -> str:
    return min(rotations(s))


def naive_is_lyndon(s: str) -> bool:
    """Aperiodic and strictly least among its rotations."""
    rots = rotations(s)
    return len(set(rots)) == len(s) and s == min(rots)


def all_words(length: int) -> Iterator[str]:
    for bits in itertools.product("01", repeat=length):
        yield "".join(bits)


def naive_lyndon_words(max_length: int) -> list[str]:
    return sorted(w for k in range(1, max_length + 1) for w in all_words(k) if naive_is_lyndon(w))


def cyclic_windows(s: str, n: int) -> list[str]:
    t = s + s[: n - 1]
    return [t[i : i + n] for i in range(len(s))]


def all_de_bruijn_strings(n: int) -> Iterator[str]:
    """Every binary string of length ``2**n`` whose cyclic ``n``-windows are distinct.

    Each such string is a rotation of exactly one that begins with ``0**n``.
    Those are found by exhaustive depth-first search (both bits tried at
    every step, wrap-around windows checked at the end), and all of their
    rotations are emitted.
    """
    size = 2**n
    for cycle in _de_bruijn_from_zeros(n):
        if len(set(cyclic_windows(cycle, n))) != size:
            raise AssertionError(f"search produced a non-de Bruijn string {cycle}")
        yield from rotations(cycle)


def _de_bruijn_from_zeros(n: int) -> Iterator[str]:
    size = 2**n
    stack = [("0" * n, frozenset(["0" * n]))]
    while stack:
        s, used = stack.pop()
        if len(s) == size:
            if used.isdisjoint(cyclic_windows(s, n)[size - n + 1 :]):
                yield s
            continue
        for b in "10":
            w = s[len(s) - n + 1 :] + b
            if w not in used:
                stack.append((s + b, used | {w}))


def naive_compositions_ge2(total: int) -> list[tuple[int, ...]]:
    """Filter all compositions of ``total`` (every subset of cut points) for parts >= 2."""
    if total == 0:
        return [()]
    out = []
    for cuts in itertools.product((False, True), repeat=total - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        if min(parts) >= 2:
            out.append(tuple(parts))
    return out


def colored_composition_count_dp(colors: int, total: int) -> int:
    """Count by splitting off the last part: ``min(x - 2, colors - 1) + 1`` colorings of part ``x``."""
    d = [1] + [0] * total
    for t in range(1, total + 1):
        d[t] = sum((min(x - 2, colors - 1) + 1) * d[t - x] for x in range(2, t + 1))
    return d[total]


def naive_fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a
