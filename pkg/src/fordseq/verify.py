"""Numerical verification of every identity the library encodes.

:func:`run_verification` evaluates a fixed list of checks at a chosen scale
and returns a :class:`VerificationReport`. Each check either passes or
records the first counterexample it found. An exception raised inside a
check counts as a failure, with the exception text as the counterexample.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator, Optional

from . import oracles
from .compositions import (
    colored_compositions,
    compositions_ge2,
    parse_primitives,
)
from .ford import (
    FordSequence,
    decompose,
    ford_by_concatenation,
    ford_by_greedy,
    is_de_bruijn,
    iter_lyndon_strings,
)
from .recurrences import (
    fibonacci,
    generalized_fibonacci,
    generalized_lucas,
    lucas,
    padded_fibonacci,
)
from .series import (
    block_ones_gf,
    block_zeros_gf,
    generalized_fibonacci_gf,
    generalized_lucas_gf,
    padded_fibonacci_gf,
    primitive_count_gf,
    suffix_length_gf,
    suffix_skew_gf,
)
from .words import count_ones, count_zeros, is_lyndon, least_rotation, skew

DEFAULT_VERIFY_ORDER = 16
DEFAULT_VERIFY_M = 9

# published suffix skews and lengths, rows n = 1..10, columns m = 0..n-1
REFERENCE_SKEW_TABLE = (
    (-1,),
    (-1, -1),
    (-1, -2, -1),
    (-1, -3, -3, -1),
    (-1, -5, -5, -4, -1),
    (-1, -8, -9, -7, -5, -1),
    (-1, -13, -17, -13, -9, -6, -1),
    (-1, -21, -31, -25, -17, -11, -7, -1),
    (-1, -34, -57, -49, -33, -21, -13, -8, -1),
    (-1, -55, -105, -94, -65, -41, -25, -15, -9, -1),
)
REFERENCE_LENGTH_TABLE = (
    (1,),
    (1, 3),
    (1, 4, 7),
    (1, 7, 11, 15),
    (1, 11, 21, 26, 31),
    (1, 18, 39, 51, 57, 63),
    (1, 29, 71, 99, 113, 120, 127),
    (1, 47, 131, 191, 223, 239, 247, 255),
    (1, 76, 241, 367, 439, 475, 493, 502, 511),
    (1, 123, 443, 708, 863, 943, 983, 1003, 1013, 1023),
)

Constructor = Callable[[int], FordSequence]


@dataclass
class CheckResult:
    name: str
    parameters: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class VerificationReport:
    max_order: int
    max_m: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self) -> Optional[CheckResult]:
        return next((r for r in self.results if not r.passed), None)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name}  [{r.parameters}]"
            if r.counterexample is not None:
                line += f"  counterexample: {r.counterexample}"
            lines.append(line)
        total = len(self.results)
        failed = sum(not r.passed for r in self.results)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({total - failed}/{total} checks passed)")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "max_order": self.max_order,
            "max_m": self.max_m,
            "checks": [asdict(r) for r in self.results],
        }
        return json.dumps(payload, indent=2) + "\n"


class _Context:
    def __init__(self, max_order: int, max_m: int, construct: Constructor):
        self.max_order = max_order
        self.max_m = max_m
        self._construct = construct
        self._sequences: dict[int, FordSequence] = {}

    def ford(self, n: int) -> FordSequence:
        if n not in self._sequences:
            self._sequences[n] = self._construct(n)
        return self._sequences[n]


_Check = Callable[[_Context], Iterator[str]]
_CHECKS: list[tuple[str, Callable[[_Context], str], _Check]] = []


def _check(name: str, parameters: Callable[[_Context], str]):
    def register(fn: _Check) -> _Check:
        _CHECKS.append((name, parameters, fn))
        return fn

    return register


def _fixed(text: str) -> Callable[[_Context], str]:
    return lambda ctx: text


# Each check is a generator of counterexample descriptions; the first one
# yielded fails the check.


@_check("fibonacci.sum_identities", _fixed("1 <= n <= 40"))
def _fib_sums(ctx):
    for n in range(1, 41):
        if sum(fibonacci(i) for i in range(1, n + 1)) != fibonacci(n + 2) - 1:
            yield f"sum F_i, n={n}"
        if sum(i * fibonacci(n - i) for i in range(1, n + 1)) != fibonacci(n + 3) - (n + 2):
            yield f"sum i*F_(n-i), n={n}"
        if lucas(n) != fibonacci(n - 1) + fibonacci(n + 1):
            yield f"L_n = F_(n-1) + F_(n+1), n={n}"


@_check("recurrences.low_order_cases", _fixed("0 <= n <= 30"))
def _low_order(ctx):
    for n in range(31):
        if generalized_fibonacci(2, n) != fibonacci(n + 1):
            yield f"G(2,{n})"
        if generalized_lucas(2, n) != lucas(n):
            yield f"H(2,{n})"
        if n >= 1 and padded_fibonacci(2, n) != fibonacci(n - 1):
            yield f"P(2,{n})"


@_check("recurrences.padded_powers_of_two", _fixed("2 <= m <= 8"))
def _padded_powers_of_two(ctx):
    for m in range(2, 9):
        for n in range(m, 2 * m - 1):
            if padded_fibonacci(m, n) != 2 ** (n - m):
                yield f"P({m},{n}) != 2^{n - m}"
        if padded_fibonacci(m, 2 * m - 1) != 2 ** (m - 1) - 1:
            yield f"P({m},{2 * m - 1}) != 2^{m - 1} - 1"


@_check("series.recurrence_generating_functions", _fixed("1 <= m <= 6, degree 60"))
def _gf_recurrences(ctx):
    for m in range(1, 7):
        pairs = [
            ("G", generalized_fibonacci_gf(m, 60), lambda n: generalized_fibonacci(m, n)),
            ("H", generalized_lucas_gf(m, 60), lambda n: generalized_lucas(m, n)),
        ]
        if m >= 2:
            pairs.append(("P", padded_fibonacci_gf(m, 60), lambda n: padded_fibonacci(m, n)))
        for label, gf, term in pairs:
            for n in range(61):
                if gf[n] != term(n):
                    yield f"{label}({m},{n}): series {gf[n]} vs recurrence {term(n)}"


@_check("words.lyndon_short_list", _fixed("length <= 4"))
def _lyndon_list(ctx):
    found = sorted(w for k in range(1, 5) for w in oracles.all_words(k) if is_lyndon(w))
    expected = sorted(["0", "1", "01", "001", "011", "0001", "0011", "0111"])
    if found != expected:
        yield f"{found}"


@_check("words.lyndon_and_rotation_vs_bruteforce", _fixed("1 <= length <= 12"))
def _lyndon_brute(ctx):
    for k in range(1, 13):
        for w in oracles.all_words(k):
            if is_lyndon(w) != oracles.naive_is_lyndon(w):
                yield f"is_lyndon({w})"
            if str(least_rotation(w)) != oracles.naive_least_rotation(w):
                yield f"least_rotation({w})"


@_check("ford.de_bruijn_property", lambda ctx: f"1 <= n <= {ctx.max_order}")
def _de_bruijn(ctx):
    for n in range(1, ctx.max_order + 1):
        f = ctx.ford(n)
        if len(f.word) != 2**n or skew(f.word) != 0:
            yield f"n={n}: length {len(f.word)}, skew {skew(f.word)}"
        if not is_de_bruijn(f.word, n):
            yield f"n={n}: repeated window"


@_check("ford.greedy_matches_concatenation", lambda ctx: f"1 <= n <= {min(ctx.max_order, 14)}")
def _greedy(ctx):
    for n in range(1, min(ctx.max_order, 14) + 1):
        if ford_by_greedy(n).word != ctx.ford(n).word:
            yield f"n={n}"


@_check("ford.lex_least_bruteforce", lambda ctx: f"1 <= n <= {min(ctx.max_order, 5)}")
def _lex_least(ctx):
    for n in range(1, min(ctx.max_order, 5) + 1):
        best = min(oracles.all_de_bruijn_strings(n))
        if str(ctx.ford(n).word) != best:
            yield f"n={n}: least is {best}"


@_check("ford.lyndon_generation_vs_bruteforce", _fixed("1 <= n <= 12"))
def _lyndon_generation(ctx):
    for n in range(1, 13):
        expected = [w for w in oracles.naive_lyndon_words(n) if n % len(w) == 0]
        if list(iter_lyndon_strings(n)) != expected:
            yield f"n={n}"


@_check("ford.decomposition", lambda ctx: f"1 <= n <= {ctx.max_order}")
def _decomposition(ctx):
    for n in range(1, ctx.max_order + 1):
        f = ctx.ford(n)
        d = decompose(f)
        text = str(f.word)
        rebuilt = "0" + "".join(str(w) for _, w in d.segments)
        if rebuilt != text:
            yield f"n={n}: segments do not reassemble the sequence"
        if str(d.segment(0)) != "1" or len(d.segment(n)) != 0:
            yield f"n={n}: boundary segments"
        if str(d.suffix(n - 1)) != text[1:]:
            yield f"n={n}: full suffix"
        for i in range(1, n):
            seg = str(d.segment(i))
            if not seg.endswith("0" * i + "1" * (n - i)):
                yield f"n={n}, i={i}: segment does not end with its marker"
            for i_, k in parse_primitives(seg):
                if i_ > i:
                    yield f"n={n}, i={i}: zero run {i_} inside segment"
            if "0" * i not in seg:
                yield f"n={n}, i={i}: missing zero run"


@_check("ford.suffix_skew_and_length", lambda ctx: f"1 <= n <= {ctx.max_order}, 0 <= m <= {ctx.max_m}")
def _suffix_skew_and_length(ctx):
    for n in range(1, ctx.max_order + 1):
        d = decompose(ctx.ford(n))
        for m in range(ctx.max_m + 1):
            suffix = d.suffix(m)
            if skew(suffix) != -generalized_fibonacci(m + 1, n - 1):
                yield f"n={n}, m={m}: skew {skew(suffix)} vs -G = {-generalized_fibonacci(m + 1, n - 1)}"
            if len(suffix) != generalized_lucas(m + 1, n):
                yield f"n={n}, m={m}: length {len(suffix)} vs H = {generalized_lucas(m + 1, n)}"


@_check("order_one.segment_counts", lambda ctx: f"2 <= n <= {ctx.max_order}")
def _order_one(ctx):
    for n in range(2, ctx.max_order + 1):
        seg = decompose(ctx.ford(n)).segment(1)
        counts: dict[int, int] = {}
        for _, k in parse_primitives(seg):
            counts[k] = counts.get(k, 0) + 1
        for k in range(2, n + 2):
            expected = fibonacci(n - k - 1) if k <= n - 1 else (1 if k == n else 0)
            if counts.get(k, 0) != expected:
                yield f"c({n},{k}) = {counts.get(k, 0)}, expected {expected}"
        if count_zeros(seg) != fibonacci(n - 1):
            yield f"n={n}: zeros"
        if count_ones(seg) != fibonacci(n + 1) - 1:
            yield f"n={n}: ones"
        if skew(seg) != 1 - fibonacci(n):
            yield f"n={n}: skew"
        if len(seg) != lucas(n) - 1:
            yield f"n={n}: length"


@_check("compositions.colored_counts", _fixed("1 <= m <= 5, 0 <= n <= 18"))
def _colored_counts(ctx):
    for m in range(1, 6):
        for n in range(19):
            listed = colored_compositions(m, n)
            if len(listed) != padded_fibonacci(m + 1, n + m - 1):
                yield f"d({m},{n}) = {len(listed)} vs P = {padded_fibonacci(m + 1, n + m - 1)}"
            if len(set(listed)) != len(listed):
                yield f"d({m},{n}): duplicates"
    for n in range(19):
        if compositions_ge2(n) != sorted(oracles.naive_compositions_ge2(n)):
            yield f"compositions of {n} into parts >= 2"
        if n >= 2 and len(compositions_ge2(n)) != fibonacci(n - 1):
            yield f"count of compositions of {n} != F_{n - 1}"


@_check("compositions.primitive_count_series", lambda ctx: f"1 <= m <= {min(ctx.max_m, 4)}, 2 <= n <= {min(ctx.max_order, 16)}")
def _cmnk(ctx):
    top = min(ctx.max_order, 16)
    for m in range(1, min(ctx.max_m, 4) + 1):
        for n in range(2, top + 1):
            psi = _psi(ctx, m, n)
            for k in range(2, n + 1):
                coeff = primitive_count_gf(m, k, top)[n]
                if psi.get((k, 0), 0) != coeff:
                    yield f"c({m},{n},{k}) = {psi.get((k, 0), 0)} vs coefficient {coeff}"


@_check("compositions.color_symmetry_and_totals", lambda ctx: f"1 <= m <= {ctx.max_m}, 2 <= n <= {ctx.max_order}")
def _color_symmetry(ctx):
    for m in range(1, ctx.max_m + 1):
        for n in range(2, ctx.max_order + 1):
            psi = _psi(ctx, m, n)
            block = decompose(ctx.ford(n)).block(m)
            for (k, y), count in psi.items():
                if y > min(k - 2, m - 1):
                    yield f"m={m}, n={n}: color {y} on {k}"
            for k in range(2, n + 1):
                base = psi.get((k, 0), 0)
                for y in range(1, min(k - 2, m - 1) + 1):
                    if psi.get((k, y), 0) != base:
                        yield f"m={m}, n={n}, k={k}: color {y} count {psi.get((k, y), 0)} vs {base}"
            if sum((y + 1) * c for (k, y), c in psi.items()) != count_zeros(block):
                yield f"m={m}, n={n}: zeros from primitives"
            if sum((k - y - 1) * c for (k, y), c in psi.items()) != count_ones(block):
                yield f"m={m}, n={n}: ones from primitives"


def _psi(ctx: _Context, m: int, n: int) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for i, k in parse_primitives(decompose(ctx.ford(n)).block(m)):
        counts[(k, i - 1)] = counts.get((k, i - 1), 0) + 1
    return counts


@_check("series.measured_block_and_suffix", lambda ctx: f"1 <= n <= {ctx.max_order}, 0 <= m <= {ctx.max_m}")
def _gf_measured(ctx):
    degree = ctx.max_order
    for m in range(ctx.max_m + 1):
        sk_gf, len_gf = suffix_skew_gf(m, degree), suffix_length_gf(m, degree)
        z_gf = block_zeros_gf(m, degree) if m >= 1 else None
        o_gf = block_ones_gf(m, degree) if m >= 1 else None
        for n in range(1, ctx.max_order + 1):
            d = decompose(ctx.ford(n))
            suffix = d.suffix(m)
            if sk_gf[n] != skew(suffix) or len_gf[n] != len(suffix):
                yield f"m={m}, n={n}: suffix series ({sk_gf[n]}, {len_gf[n]}) vs measured ({skew(suffix)}, {len(suffix)})"
            if m >= 1:
                block = d.block(m)
                if z_gf[n] != count_zeros(block) or o_gf[n] != count_ones(block):
                    yield f"m={m}, n={n}: block series vs measured"


@_check("tables.reference_values", lambda ctx: "1 <= n <= 10" if ctx.max_order >= 10 else "skipped (max order < 10)")
def _tables(ctx):
    if ctx.max_order < 10:
        return
    for n in range(1, 11):
        d = decompose(ctx.ford(n))
        skews = tuple(skew(d.suffix(m)) for m in range(n))
        lengths = tuple(len(d.suffix(m)) for m in range(n))
        if skews != REFERENCE_SKEW_TABLE[n - 1]:
            yield f"skew row {n}: {skews}"
        if lengths != REFERENCE_LENGTH_TABLE[n - 1]:
            yield f"length row {n}: {lengths}"


def run_verification(
    max_order: int = DEFAULT_VERIFY_ORDER,
    max_m: int = DEFAULT_VERIFY_M,
    construct: Constructor = ford_by_concatenation,
) -> VerificationReport:
    """Run every check at the given scale.

    ``construct`` supplies the sequences under test; pass a deliberately
    broken constructor to confirm the suite notices.
    """
    if max_order < 1 or max_m < 0:
        raise ValueError("need max_order >= 1 and max_m >= 0")
    ctx = _Context(max_order, max_m, construct)
    report = VerificationReport(max_order, max_m)
    for name, parameters, fn in _CHECKS:
        try:
            failure = next(iter(fn(ctx)), None)
        except Exception as exc:  # a crash inside a check is a failed check
            failure = f"{type(exc).__name__}: {exc}"
        report.results.append(CheckResult(name, parameters(ctx), failure is None, failure))
    report.results.sort(key=lambda r: (r.name, r.parameters))
    return report


def corrupted_constructor(position: int = 3) -> Constructor:
    """Constructor that flips one bit of each sequence of order >= 2 (negative control)."""

    def construct(n: int) -> FordSequence:
        f = ford_by_concatenation(n)
        if n < 2:
            return f
        bits = f.word.to_array().copy()
        bits[position % len(bits)] ^= 1
        return FordSequence(n, type(f.word)(bits))

    return construct
