"""Alphabets, words, and naive brute-force oracles.

Letters are small integer indices rendered as ``a``..``z`` then ``0``..``9``.
The oracles here are deliberately slow and obvious: they enumerate substrings
and compare against reversals, so they cannot share a bug with the eertree.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError, EmptyWordError, InputTooLargeError, WordParseError

SYMBOLS = string.ascii_lowercase + string.digits
MAX_Q = len(SYMBOLS)
BRUTE_FORCE_MAX_LEN = 30

_INDEX = {ch: i for i, ch in enumerate(SYMBOLS)}


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not 2 <= self.size <= MAX_Q:
            raise AlphabetError(f"alphabet size must be in [2, {MAX_Q}], got {self.size}")

    @property
    def symbols(self) -> str:
        return SYMBOLS[: self.size]


@dataclass(frozen=True)
class Word:
    """A finite word over a ``q``-letter alphabet, stored as letter indices."""

    letters: tuple[int, ...]
    q: int = 2

    def __post_init__(self):
        Alphabet(self.q)
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for x in self.letters:
            if not 0 <= x < self.q:
                raise AlphabetError(f"letter index {x} outside alphabet of size {self.q}")

    @classmethod
    def parse(cls, text: str, q: int = 2) -> Word:
        alphabet = Alphabet(q)
        letters = []
        for pos, ch in enumerate(text):
            idx = _INDEX.get(ch)
            if idx is None or idx >= alphabet.size:
                raise WordParseError(
                    f"character {ch!r} at position {pos} is not in alphabet {alphabet.symbols!r}"
                )
            letters.append(idx)
        return cls(tuple(letters), q)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def length(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Word(self.letters[key], self.q)
        return self.letters[key]

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters, max(self.q, other.q))

    def __str__(self) -> str:
        return render(self.letters)


def render(letters: Iterable[int]) -> str:
    return "".join(SYMBOLS[x] for x in letters)


def as_word(w: Word | str | Sequence[int], q: int = 2) -> Word:
    """Coerce text or a letter sequence into a :class:`Word`."""
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w, q)
    return Word(tuple(w), q)


def is_palindrome(w: Word | Sequence[int]) -> bool:
    letters = tuple(w)
    return letters == letters[::-1]


def reverse(w: Word) -> Word:
    return Word(w.letters[::-1], w.q)


def palindromic_factor_set_bruteforce(w: Word) -> set[Word]:
    """All distinct palindromic factors of ``w``, the empty word included."""
    n = len(w)
    if n > BRUTE_FORCE_MAX_LEN:
        raise InputTooLargeError(f"brute-force oracle limited to length {BRUTE_FORCE_MAX_LEN}, got {n}")
    letters = w.letters
    found = {()}
    for i in range(n):
        for j in range(i + 1, n + 1):
            factor = letters[i:j]
            if factor == factor[::-1]:
                found.add(factor)
    return {Word(f, w.q) for f in found}


def longest_palindromic_suffix_bruteforce(w: Word) -> Word:
    n = len(w)
    if n == 0:
        raise EmptyWordError("the empty word has no non-empty palindromic suffix")
    for start in range(n):
        suffix = w.letters[start:]
        if suffix == suffix[::-1]:
            return Word(suffix, w.q)
    raise AssertionError("unreachable: the last letter is a palindrome")


def count_occurrences_bruteforce(factor: Word, w: Word) -> int:
    """Number of positions at which ``factor`` occurs in ``w`` (overlaps counted)."""
    k = len(factor)
    return sum(1 for i in range(len(w) - k + 1) if w.letters[i : i + k] == factor.letters)


def count_palindromes_of_length(i: int, q: int) -> int:
    """Number of palindromes of length ``i`` over ``q`` letters: ``q**ceil(i/2)``."""
    if i < 1 or q < 2:
        raise ValueError(f"need i >= 1 and q >= 2, got i={i}, q={q}")
    return q ** ((i + 1) // 2)


def all_words(q: int, n: int) -> Iterator[Word]:
    """Every word of length ``n`` over ``q`` letters in lexicographic order."""
    for letters in product(range(q), repeat=n):
        yield Word(letters, q)
