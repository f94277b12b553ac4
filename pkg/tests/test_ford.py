import pytest
from hypothesis import given
from hypothesis import strategies as st

from fordseq import oracles
from fordseq.ford import (
    FordSequence,
    InvariantViolation,
    MAX_ORDER_ENV,
    decompose,
    ford_by_concatenation,
    ford_by_greedy,
    ford_sequence,
    is_de_bruijn,
    iter_lyndon_strings,
    lyndon_words_dividing,
    zero_run_block,
    zero_run_suffix,
)
from fordseq.words import BinaryWord, is_lyndon, skew

orders = st.integers(min_value=1, max_value=12)


class TestLyndonWords:
    def test_examples(self):
        assert [str(w) for w in lyndon_words_dividing(3)] == ["0", "001", "011", "1"]
        assert [str(w) for w in lyndon_words_dividing(1)] == ["0", "1"]
        assert [str(w) for w in lyndon_words_dividing(4)] == ["0", "0001", "0011", "01", "0111", "1"]

    def test_order_zero_rejected(self):
        with pytest.raises(ValueError):
            lyndon_words_dividing(0)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_generate_and_filter(self, n):
        expected = [w for w in oracles.naive_lyndon_words(n) if n % len(w) == 0]
        assert list(iter_lyndon_strings(n)) == expected

    @given(orders)
    def test_sorted_lyndon_and_dividing(self, n):
        words = lyndon_words_dividing(n)
        assert all(is_lyndon(w) and n % len(w) == 0 for w in words)
        assert all(a < b for a, b in zip(words, words[1:]))


class TestConstruction:
    @pytest.mark.parametrize("n, expected", [(1, "01"), (2, "0011"), (3, "00010111"), (4, "0000100110101111")])
    def test_small_orders(self, n, expected):
        assert str(ford_by_concatenation(n)) == expected
        assert str(ford_by_greedy(n)) == expected

    def test_caps(self, monkeypatch):
        with pytest.raises(ValueError, match="greedy cap"):
            ford_by_greedy(15)
        monkeypatch.setenv(MAX_ORDER_ENV, "6")
        with pytest.raises(ValueError, match="cap"):
            ford_by_concatenation(7)
        assert len(ford_by_concatenation(6).word) == 64
        with pytest.raises(ValueError):
            ford_by_concatenation(0)

    def test_sequence_length_enforced(self):
        with pytest.raises(ValueError):
            FordSequence(3, BinaryWord("0001"))

    @pytest.mark.parametrize("n", range(1, 15))
    def test_greedy_equals_concatenation(self, n):
        f = ford_by_concatenation(n)
        assert ford_by_greedy(n).word == f.word
        assert is_de_bruijn(f.word, n)
        assert skew(f.word) == 0 and len(f.word) == 2**n

    @pytest.mark.parametrize("n", range(1, 6))
    def test_lex_least_against_exhaustive_search(self, n):
        assert str(ford_by_concatenation(n)) == min(oracles.all_de_bruijn_strings(n))

    def test_exhaustive_search_counts(self):
        # 2^(2^(n-1)) de Bruijn strings of order n, counting rotations
        assert [sum(1 for _ in oracles.all_de_bruijn_strings(n)) for n in range(1, 5)] == [2, 4, 16, 256]


class TestDeBruijn:
    @pytest.mark.parametrize("w, expected", [("00010111", True), ("00011101", True), ("00001111", False)])
    def test_examples(self, w, expected):
        assert is_de_bruijn(w, 3) is expected

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            is_de_bruijn("0001", 3)

    @given(st.integers(1, 4), st.data())
    def test_agrees_with_window_enumeration(self, n, data):
        s = data.draw(st.text(alphabet="01", min_size=2**n, max_size=2**n))
        assert is_de_bruijn(s, n) == (len(set(oracles.cyclic_windows(s, n))) == 2**n)


class TestDecomposition:
    def test_order_six_segment(self):
        assert str(decompose(ford_sequence(6)).segment(1)) == "01010111011011111"

    def test_order_three(self):
        d = decompose(ford_sequence(3))
        assert [(i, str(w)) for i, w in d.segments] == [(2, "001"), (1, "011"), (0, "1")]
        assert d.offsets == (1, 4, 7)

    def test_order_one(self):
        d = decompose(ford_sequence(1))
        assert [(i, str(w)) for i, w in d.segments] == [(0, "1")]
        assert str(zero_run_suffix(ford_sequence(1), 0)) == "1"

    def test_suffix_examples(self):
        s = zero_run_suffix(ford_sequence(4), 1)
        assert (skew(s), len(s)) == (-3, 7)
        s = zero_run_suffix(ford_sequence(10), 3)
        assert (skew(s), len(s)) == (-94, 708)
        assert str(zero_run_suffix(ford_sequence(5), 0)) == "1"

    def test_block_examples(self):
        assert str(zero_run_block(ford_sequence(6), 1)) == "01010111011011111"
        assert str(zero_run_block(ford_sequence(2), 1)) == "01"
        assert str(zero_run_block(ford_sequence(3), 2)) == "001011"
        with pytest.raises(ValueError):
            zero_run_block(ford_sequence(3), 0)

    def test_corrupted_sequence_detected(self):
        bits = ford_sequence(5).word.to_array().copy()
        bits[7] ^= 1
        with pytest.raises(InvariantViolation):
            decompose(FordSequence(5, BinaryWord(bits)))

    @given(orders, st.integers(min_value=0, max_value=14))
    def test_segment_invariants(self, n, m):
        f = ford_sequence(n)
        d = decompose(f)
        text = str(f.word)
        assert "0" + "".join(str(w) for _, w in d.segments) == text
        assert str(d.segment(0)) == "1" and len(d.segment(n + m)) == 0
        for (i, w), start in zip(d.segments, d.offsets):
            assert text[start : start + len(w)] == str(w)
            if i >= 1:
                assert str(w).endswith("0" * i + "1" * (n - i))
        i = min(m, n - 1)
        if i >= 1:
            factors = [x for x in iter_lyndon_strings(n) if x != "0" and max(map(len, x.split("1"))) == i]
            assert "".join(factors) == str(d.segment(i))
            assert all("0" * i in x and "0" * (i + 1) not in x for x in factors)
        suffix = zero_run_suffix(f, m)
        if m >= n - 1:
            assert str(suffix) == text[1:]
        assert text.endswith(str(suffix))
        if m >= 1:
            assert zero_run_block(f, m) + BinaryWord("1") == suffix
