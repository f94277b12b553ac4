"""Truncated formal power series with integer coefficients.

A :class:`TruncatedSeries` of degree ``N`` stands for a power series modulo
``x**(N+1)``. The generating functions below are all rational with
denominator ``1 - x - x**2 - ... - x**m``, so division only ever needs a
unit constant term and stays exact.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .recurrences import checked_int64

__all__ = [
    "DEFAULT_DEGREE",
    "TruncatedSeries",
    "multibonacci_denominator",
    "generalized_fibonacci_gf",
    "generalized_lucas_gf",
    "padded_fibonacci_gf",
    "primitive_count_gf",
    "block_zeros_gf",
    "block_ones_gf",
    "suffix_skew_gf",
    "suffix_length_gf",
]

DEFAULT_DEGREE = 64


class TruncatedSeries:
    """Integer power series known up to and including ``x**degree``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[int], degree: int | None = None):
        coeffs = [int(c) for c in coefficients]
        if degree is None:
            degree = len(coeffs) - 1
        if degree < 0:
            raise ValueError("truncation degree must be non-negative")
        coeffs = coeffs[: degree + 1] + [0] * (degree + 1 - len(coeffs))
        self._coeffs = tuple(checked_int64(c) for c in coeffs)

    @classmethod
    def monomial(cls, power: int, degree: int, coefficient: int = 1) -> "TruncatedSeries":
        coeffs = [0] * (degree + 1)
        if power <= degree:
            coeffs[power] = coefficient
        return cls(coeffs, degree)

    @classmethod
    def polynomial(cls, coefficients: Sequence[int], degree: int) -> "TruncatedSeries":
        """Polynomial from its low-to-high coefficients, truncated to ``degree``."""
        return cls(coefficients, degree)

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, k: int) -> int:
        if not 0 <= k <= self.degree:
            raise IndexError(f"coefficient {k} is outside the truncation 0..{self.degree}")
        return self._coeffs[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)})"

    def _same_degree(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.degree != self.degree:
            raise ValueError(f"truncation degrees differ: {self.degree} vs {other.degree}")

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_degree(other)
        return TruncatedSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_degree(other)
        return TruncatedSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_degree(other)
        a, b = self._coeffs, other._coeffs
        n = len(a)
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_degree(other)
        den = other._coeffs
        if den[0] not in (1, -1):
            raise ZeroDivisionError("denominator constant term must be +1 or -1 for exact division")
        num = self._coeffs
        q: list[int] = []
        for k in range(len(num)):
            acc = num[k] - sum(den[j] * q[k - j] for j in range(1, k + 1))
            # den[0] is a unit, so dividing by it equals multiplying by it
            q.append(checked_int64(acc * den[0]))
        return TruncatedSeries(q)


def multibonacci_denominator(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``1 - x - x**2 - ... - x**m`` truncated to ``degree``."""
    if m < 1:
        raise ValueError("denominator order must be at least 1")
    return TruncatedSeries([1] + [-1] * m, degree)


def _ratio(numerator: Sequence[int], m: int, degree: int) -> TruncatedSeries:
    return TruncatedSeries(numerator, degree) / multibonacci_denominator(m, degree)


def generalized_fibonacci_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``(1 - sum_{i=2}^{m-1} (i-1) x**i) / D_m``."""
    if m < 1:
        raise ValueError("order must be at least 1")
    num = [1, 0] + [-(i - 1) for i in range(2, m)]
    return _ratio(num, m, degree)


def generalized_lucas_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``(m - sum_{i=1}^{m-1} (m-i) x**i) / D_m``."""
    if m < 1:
        raise ValueError("order must be at least 1")
    num = [m] + [-(m - i) for i in range(1, m)]
    return _ratio(num, m, degree)


def padded_fibonacci_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``x**(m-2) (1 - x) / D_m``; requires ``m >= 2``."""
    if m < 2:
        raise ValueError("order must be at least 2")
    num = [0] * (m - 2) + [1, -1]
    return _ratio(num, m, degree)


def primitive_count_gf(m: int, k: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``x**k (1 - x) / D_{m+1}``.

    Coefficient ``n`` counts the uncolored parts ``k`` among the primitives
    of the ``m``-run block of the order-``n`` Ford sequence.
    """
    if m < 1 or k < 2:
        raise ValueError("need m >= 1 and k >= 2")
    num = [0] * k + [1, -1]
    return _ratio(num, m + 1, degree)


def block_zeros_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``x**2 sum_{i=0}^{m-1} (i+1) x**i / D_{m+1}``: zeros of the ``m``-run block."""
    if m < 1:
        raise ValueError("m must be at least 1")
    num = [0, 0] + [i + 1 for i in range(m)]
    return _ratio(num, m + 1, degree)


def block_ones_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``x**2 sum_{i=0}^{m-1} x**i / ((1 - x) D_{m+1})``: ones of the ``m``-run block."""
    if m < 1:
        raise ValueError("m must be at least 1")
    num = TruncatedSeries([0, 0] + [1] * m, degree)
    den = multibonacci_denominator(m + 1, degree) * TruncatedSeries([1, -1], degree)
    return num / den


def suffix_skew_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``(-x + sum_{i=3}^{m+1} (i-2) x**i) / D_{m+1}``: skew of the ``m``-run suffix."""
    if m < 0:
        raise ValueError("m must be non-negative")
    num = [0, -1, 0] + [i - 2 for i in range(3, m + 2)]
    return _ratio(num, m + 1, degree)


def suffix_length_gf(m: int, degree: int = DEFAULT_DEGREE) -> TruncatedSeries:
    """``sum_{i=1}^{m+1} i x**i / D_{m+1}``: length of the ``m``-run suffix."""
    if m < 0:
        raise ValueError("m must be non-negative")
    num = [0] + [i for i in range(1, m + 2)]
    return _ratio(num, m + 1, degree)
