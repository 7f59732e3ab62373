"""Value-type behavior: parsing, ordering, validation, exact arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from codekraft import (
    Alphabet,
    Code,
    EmptyWordError,
    Factorization,
    MixedAlphabetsError,
    UnknownSymbolError,
    Word,
    concat,
    make_code,
    parse_word,
)

from helpers import BINARY, bcode, binary_words_up_to


class TestAlphabet:
    def test_size_and_index_bijection(self):
        a = Alphabet("abc")
        assert a.size == 3
        assert [a.index(ch) for ch in "abc"] == [0, 1, 2]

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Alphabet("")

    def test_rejects_duplicate_symbols(self):
        with pytest.raises(ValueError):
            Alphabet("011")

    def test_large_alphabet(self):
        a = Alphabet("0123456789abcdefghijklmnopqrstuvwxyz")
        assert a.size == 36
        assert a.index("z") == 35

    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbolError):
            Alphabet("01").index("2")


class TestParseWord:
    def test_single_symbol(self):
        w = parse_word("0", BINARY)
        assert w.indices == (0,) and len(w) == 1

    def test_transliteration(self):
        w = parse_word("010", BINARY)
        assert w.indices == (0, 1, 0) and len(w) == 3

    def test_symbol_outside_alphabet(self):
        with pytest.raises(UnknownSymbolError):
            parse_word("012", BINARY)

    def test_empty_rejected(self):
        with pytest.raises(EmptyWordError):
            parse_word("", BINARY)

    @given(st.text(alphabet="01", min_size=1, max_size=40))
    def test_round_trip(self, text):
        assert parse_word(text, BINARY).text == text

    @given(st.text(alphabet="ab", min_size=1, max_size=20))
    def test_round_trip_other_alphabet(self, text):
        a = Alphabet("ba")
        assert parse_word(text, a).text == text


class TestWord:
    def test_indices_validated(self):
        with pytest.raises(ValueError):
            Word(BINARY, (0, 2))

    def test_empty_rejected(self):
        with pytest.raises(EmptyWordError):
            Word(BINARY, ())

    def test_shortlex_uses_symbol_index_not_codepoint(self):
        # in alphabet "ba", 'b' has index 0 and sorts before 'a'
        a = Alphabet("ba")
        assert a.word("b") < a.word("a")

    def test_shortlex_is_total(self):
        words = binary_words_up_to(3)
        for u in words:
            for v in words:
                if u == v:
                    assert not u < v and not v < u
                else:
                    assert (u < v) != (v < u)

    def test_cross_alphabet_order_rejected(self):
        with pytest.raises(MixedAlphabetsError):
            BINARY.word("0") < Alphabet("ab").word("a")

    def test_concatenation_operator(self):
        assert BINARY.word("0") + BINARY.word("10") == BINARY.word("010")

    def test_concat_function(self):
        ws = [BINARY.word(t) for t in ("0", "10", "11")]
        assert concat(ws) == BINARY.word("01011")
        with pytest.raises(EmptyWordError):
            concat([])


class TestCode:
    def test_deduplication(self):
        c = make_code([BINARY.word("0"), BINARY.word("10"), BINARY.word("10")], BINARY)
        assert c.cardinality == 2
        assert [w.text for w in c] == ["0", "10"]

    def test_empty_code(self):
        c = make_code([], BINARY)
        assert c.cardinality == 0
        assert list(c) == []

    def test_shortlex_iteration(self):
        c = bcode("11", "0")
        assert [w.text for w in c] == ["0", "11"]

    def test_idempotent(self):
        c = bcode("0", "10", "11")
        assert make_code(c.words, BINARY) == c

    def test_contains_and_without(self):
        c = bcode("0", "10")
        assert BINARY.word("10") in c
        assert BINARY.word("11") not in c
        assert c.without(BINARY.word("10")) == bcode("0")

    def test_mixed_alphabets_rejected(self):
        with pytest.raises(MixedAlphabetsError):
            Code(BINARY, [Alphabet("ab").word("a")])

    def test_immutable(self):
        c = bcode("0")
        with pytest.raises(AttributeError):
            c.words = ()

    def test_hashable_and_ordered_key(self):
        assert len({bcode("0", "1"), bcode("0", "1"), bcode("0")}) == 2
        assert bcode("0", "1").sort_key < bcode("0", "11").sort_key

    def test_str(self):
        assert str(bcode("11", "0")) == "{0, 11}"
        assert str(bcode()) == "{}"


class TestKraftValueArithmetic:
    @given(
        st.integers(min_value=0, max_value=10**9),
        st.integers(min_value=1, max_value=10**9),
        st.integers(min_value=0, max_value=10**9),
        st.integers(min_value=1, max_value=10**9),
    )
    def test_addition_is_exact(self, a, b, c, d):
        g = math.gcd(a * d + c * b, b * d)
        assert Fraction(a, b) + Fraction(c, d) == Fraction((a * d + c * b) // g, (b * d) // g)

    @given(st.fractions(max_denominator=10**6), st.fractions(max_denominator=10**6))
    def test_equality_is_reduced_form_equality(self, x, y):
        assert (x == y) == (x.numerator == y.numerator and x.denominator == y.denominator)


class TestFactorization:
    def test_concatenation_matches_factors(self):
        f = Factorization((BINARY.word("0"), BINARY.word("10")))
        assert f.concatenation == BINARY.word("010")
        assert len(f.concatenation) == sum(len(w) for w in f.factors)
        assert f.composition == (1, 2)

    def test_nonempty_required(self):
        with pytest.raises(EmptyWordError):
            Factorization(())

    def test_rendering(self):
        f = Factorization((BINARY.word("01"), BINARY.word("0")))
        assert str(f) == "01·0"
