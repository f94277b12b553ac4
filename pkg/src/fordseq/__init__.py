"""Lex-least binary de Bruijn sequences and the enumerative identities of their breakpoint suffixes."""

from .ford import (
    FordDecomposition,
    FordSequence,
    decompose,
    ford_by_concatenation,
    ford_by_greedy,
    ford_sequence,
    is_de_bruijn,
    lyndon_words_dividing,
    zero_run_block,
    zero_run_suffix,
)
from .recurrences import (
    RecurrenceSequence,
    fibonacci,
    generalized_fibonacci,
    generalized_lucas,
    lucas,
    padded_fibonacci,
)
from .series import TruncatedSeries
from .words import (
    BinaryWord,
    count_ones,
    count_zeros,
    discrepancy,
    is_lyndon,
    least_rotation,
    prefix_skew_profile,
    skew,
)

__version__ = "0.1.0"
