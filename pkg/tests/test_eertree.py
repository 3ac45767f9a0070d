import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from richlang.eertree import AppendOutcome, Eertree
from richlang.errors import AlphabetError, EmptyWordError, UndoUnderflowError
from richlang.words import (
    Word,
    all_words,
    longest_palindromic_suffix_bruteforce,
    palindromic_factor_set_bruteforce,
)


def build(text, q=2):
    return Eertree.from_word(Word.parse(text, q))


def test_append_aba():
    t = Eertree(2)
    outcomes = [t.append(x) for x in (0, 1, 0)]
    assert [o.created_new for o in outcomes] == [True, True, True]
    assert outcomes[-1] == AppendOutcome(True, 3)


def test_append_aa():
    t = Eertree(2)
    t.append(0)
    assert t.append(0) == AppendOutcome(True, 2)


def test_append_without_new_palindrome():
    t = build("abcab", 3)
    out = t.append(2)
    assert not out.created_new
    assert t.distinct_palindromes() == 3


def test_append_rejects_out_of_range():
    with pytest.raises(AlphabetError):
        Eertree(2).append(2)


@pytest.mark.parametrize("text,count", [("", 0), ("abaab", 5), ("abcabc", 3)])
def test_distinct_palindromes(text, count):
    assert build(text, 3).distinct_palindromes() == count


@pytest.mark.parametrize("text,length", [("abaab", 4), ("a", 1), ("abc", 1)])
def test_longest_palindromic_suffix(text, length):
    assert build(text, 3).longest_palindromic_suffix_length() == length


def test_longest_palindromic_suffix_empty():
    with pytest.raises(EmptyWordError):
        Eertree(2).longest_palindromic_suffix_length()


def test_undo_single():
    t = Eertree(2)
    t.append(0)
    t.undo()
    assert t.distinct_count == 0 and len(t) == 0


def test_undo_underflow():
    with pytest.raises(UndoUnderflowError):
        Eertree(2).undo()


@pytest.mark.parametrize("q", [2, 3, 9, 12])
def test_full_unwind_restores_fresh_state(q):
    rng = random.Random(q)
    for _ in range(200):
        t = Eertree(q)
        fresh = t.state()
        for _ in range(rng.randint(0, 20)):
            t.append(rng.randrange(q))
        while len(t):
            t.undo()
        assert t.state() == fresh


def test_oracle_equivalence_binary_exhaustive():
    for n in range(0, 13):
        for w in all_words(2, n):
            t = Eertree.from_word(w)
            assert t.distinct_palindromes() == len(palindromic_factor_set_bruteforce(w)) - 1
            assert t.palindromes() == {f.letters for f in palindromic_factor_set_bruteforce(w)} - {()}
            if n:
                assert t.longest_palindromic_suffix_length() == len(longest_palindromic_suffix_bruteforce(w))


def test_per_append_delta_and_node_bound():
    for w in all_words(2, 14):
        t = Eertree(2)
        prev = 0
        for x in w:
            t.append(x)
            assert t.distinct_count - prev in (0, 1)
            assert t.node_count <= len(t) + 2
            assert t.journal_depth == len(t)
            prev = t.distinct_count


ops = st.lists(st.one_of(st.integers(0, 1), st.just("undo")), max_size=60)


@given(ops)
def test_interleaved_append_undo_matches_replay(seq):
    t = Eertree(2)
    for op in seq:
        if op == "undo":
            if len(t) == 0:
                continue
            t.undo()
        elif len(t) < 15:
            t.append(op)
        w = t.word()
        assert t.distinct_palindromes() == len(palindromic_factor_set_bruteforce(w)) - 1
        replay = Eertree.from_word(w)
        assert (t.buffer, t.distinct_count, t.lps_length) == (replay.buffer, replay.distinct_count, replay.lps_length)


@given(st.integers(9, 20).flatmap(lambda q: st.lists(st.integers(0, q - 1), max_size=25).map(lambda xs: Word(tuple(xs), q))))
def test_sparse_transitions_agree_with_oracle(w):
    t = Eertree.from_word(w)
    assert t.distinct_palindromes() == len(palindromic_factor_set_bruteforce(w)) - 1


def test_suffix_link_invariants():
    t = build("abaababaab")
    assert t._link[0] == 0 and t._link[1] == 0
    for node in range(2, t.node_count):
        assert t._len[t._link[node]] < t._len[node]
