"""Exact evaluation of Fibonacci-like recurrences of arbitrary order.

Every sequence here has the form ``a[k] = a[k-1] + ... + a[k-m]`` and is
pinned down by its first ``m`` terms. Arithmetic is checked against the
signed 64-bit range: a term outside it raises :class:`OverflowError`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

__all__ = [
    "INT64_MIN",
    "INT64_MAX",
    "checked_int64",
    "RecurrenceSequence",
    "fibonacci",
    "lucas",
    "generalized_fibonacci",
    "generalized_lucas",
    "padded_fibonacci",
]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked_int64(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"value {value} does not fit a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class RecurrenceSequence:
    """Order-``m`` recurrence where each later term sums the previous ``m``.

    ``order`` is ``len(initial_values)``.
    """

    initial_values: tuple[int, ...]

    def __post_init__(self):
        if not self.initial_values:
            raise ValueError("a recurrence needs at least one initial value")
        object.__setattr__(self, "initial_values", tuple(int(v) for v in self.initial_values))
        for v in self.initial_values:
            checked_int64(v)

    @property
    def order(self) -> int:
        return len(self.initial_values)

    @classmethod
    def generalized_fibonacci(cls, m: int) -> "RecurrenceSequence":
        """Initial values ``1, 1, ..., 1``."""
        _require_order(m, 1)
        return cls((1,) * m)

    @classmethod
    def generalized_lucas(cls, m: int) -> "RecurrenceSequence":
        """Initial values ``m, 1, 3, 7, ..., 2**(m-1) - 1``."""
        _require_order(m, 1)
        return cls((m,) + tuple(2**i - 1 for i in range(1, m)))

    @classmethod
    def padded_fibonacci(cls, m: int) -> "RecurrenceSequence":
        """Initial values ``0, ..., 0, 1, 0`` (the 1 sits at index ``m - 2``)."""
        _require_order(m, 2)
        return cls((0,) * (m - 2) + (1, 0))

    def terms(self, count: int) -> list[int]:
        """The first ``count`` terms."""
        if count < 0:
            raise ValueError("count must be non-negative")
        m = self.order
        out = list(self.initial_values[:count])
        if count <= m:
            return out
        window = deque(self.initial_values)
        total = sum(window)
        for _ in range(count - m):
            nxt = checked_int64(total)
            out.append(nxt)
            total = total + nxt - window.popleft()
            window.append(nxt)
        return out

    def term(self, n: int) -> int:
        if n < 0:
            raise ValueError("recurrence index must be non-negative")
        return self.terms(n + 1)[n]


def _require_order(m: int, least: int) -> None:
    if m < least:
        raise ValueError(f"recurrence order must be at least {least}, got {m}")


_FIBONACCI = RecurrenceSequence((0, 1))
_LUCAS = RecurrenceSequence((2, 1))


def fibonacci(n: int) -> int:
    return _FIBONACCI.term(n)


def lucas(n: int) -> int:
    return _LUCAS.term(n)


def generalized_fibonacci(m: int, n: int) -> int:
    """Term ``n`` of the order-``m`` recurrence started from ``m`` ones.

    ``m = 2`` gives ``fibonacci(n + 1)``; ``m = 1`` is constantly 1.
    Up to sign, these are the skews of the breakpoint suffixes.
    """
    return RecurrenceSequence.generalized_fibonacci(m).term(n)


def generalized_lucas(m: int, n: int) -> int:
    """Term ``n`` of the order-``m`` recurrence started from ``m, 1, 3, ..., 2**(m-1) - 1``.

    ``m = 2`` gives the Lucas numbers; these count breakpoint-suffix lengths.
    """
    return RecurrenceSequence.generalized_lucas(m).term(n)


def padded_fibonacci(m: int, n: int) -> int:
    """Term ``n`` of the order-``m`` recurrence started from ``0, ..., 0, 1, 0``.

    Requires ``m >= 2``. Counts colored compositions: the number of
    ``c``-colored compositions of ``k`` into parts >= 2 is
    ``padded_fibonacci(c + 1, k + c - 1)``.
    """
    return RecurrenceSequence.padded_fibonacci(m).term(n)
