from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from richlang.errors import AlphabetError, EmptyWordError, InputTooLargeError, WordParseError
from richlang.words import (
    Alphabet,
    Word,
    all_words,
    count_palindromes_of_length,
    is_palindrome,
    longest_palindromic_suffix_bruteforce,
    palindromic_factor_set_bruteforce,
    reverse,
)


def W(text, q=2):
    return Word.parse(text, q)


def words(max_q=4, max_len=20):
    return st.integers(2, max_q).flatmap(
        lambda q: st.lists(st.integers(0, q - 1), max_size=max_len).map(lambda xs: Word(tuple(xs), q))
    )


@pytest.mark.parametrize("text,expected", [("", True), ("baab", True), ("ab", False), ("aba", True)])
def test_is_palindrome(text, expected):
    assert is_palindrome(W(text)) is expected


@pytest.mark.parametrize("text,expected", [("abb", "bba"), ("", ""), ("aba", "aba")])
def test_reverse(text, expected):
    assert str(reverse(W(text))) == expected


@given(words())
def test_reverse_is_involution(w):
    assert reverse(reverse(w)) == w


def test_factor_sets():
    assert {str(f) for f in palindromic_factor_set_bruteforce(W("abaab"))} == {"", "a", "b", "aa", "aba", "baab"}
    assert {str(f) for f in palindromic_factor_set_bruteforce(W("aaa"))} == {"", "a", "aa", "aaa"}
    assert {str(f) for f in palindromic_factor_set_bruteforce(W("abcabc", 3))} == {"", "a", "b", "c"}


def test_factor_set_guard():
    with pytest.raises(InputTooLargeError):
        palindromic_factor_set_bruteforce(Word((0,) * 31))


@pytest.mark.parametrize("text,expected", [("abaab", "baab"), ("a", "a"), ("abc", "c")])
def test_longest_palindromic_suffix(text, expected):
    assert str(longest_palindromic_suffix_bruteforce(W(text, 3))) == expected


def test_longest_palindromic_suffix_empty():
    with pytest.raises(EmptyWordError):
        longest_palindromic_suffix_bruteforce(W(""))


def test_count_palindromes_examples():
    assert count_palindromes_of_length(1, 5) == 5
    assert count_palindromes_of_length(3, 2) == 4
    assert count_palindromes_of_length(4, 3) == 9


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("i", range(1, 9))
def test_count_palindromes_matches_enumeration(i, q):
    assert sum(1 for w in product(range(q), repeat=i) if w == w[::-1]) == count_palindromes_of_length(i, q)


def test_n_plus_one_bound_exhaustive_binary():
    for n in range(0, 15):
        for w in all_words(2, n):
            assert len(palindromic_factor_set_bruteforce(w)) <= n + 1


@given(words(max_len=20))
def test_n_plus_one_bound_sampled(w):
    assert len(palindromic_factor_set_bruteforce(w)) <= len(w) + 1


@given(words())
def test_factor_set_of_reversal(w):
    forward = palindromic_factor_set_bruteforce(w)
    backward = palindromic_factor_set_bruteforce(reverse(w))
    assert {reverse(f) for f in backward} == forward
    assert len(forward) == len(backward)


def test_parse_and_render_round_trip():
    w = W("a0z9", 36)
    assert w.letters == (0, 26, 25, 35)
    assert str(w) == "a0z9"


def test_parse_rejects_letters_outside_alphabet():
    with pytest.raises(WordParseError):
        W("abc", 2)
    with pytest.raises(WordParseError):
        W("A", 2)


def test_alphabet_range():
    with pytest.raises(AlphabetError):
        Alphabet(1)
    with pytest.raises(AlphabetError):
        Alphabet(37)
    assert Alphabet(36).symbols.endswith("9")


def test_word_rejects_bad_letter():
    with pytest.raises(AlphabetError):
        Word((0, 2), 2)
