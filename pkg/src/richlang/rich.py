"""Richness, palindromic defect, and UPS-factorization.

The UPS-factorization of a rich word ``w`` is ``w = w_p ... w_2 w_1`` where
each ``w_i`` is the longest palindromic suffix of ``w_p ... w_i``.  It is
obtained by repeatedly stripping the longest palindromic suffix.  The empty
word is treated as rich with ``p = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .eertree import Eertree
from .errors import NotRichError
from .words import Word, as_word, render


@dataclass(frozen=True)
class UPSFactorization:
    """Parts listed left to right, i.e. ``w_p, w_{p-1}, ..., w_1``."""

    word: Word
    parts: tuple[Word, ...] = field(default_factory=tuple)

    @property
    def p(self) -> int:
        return len(self.parts)

    def as_strings(self) -> list[str]:
        return [str(part) for part in self.parts]


def distinct_palindromic_factors(w: Word) -> int:
    """Distinct palindromic factors of ``w``, counting the empty word."""
    return Eertree.from_word(w).distinct_palindromes() + 1


def is_rich(w: Word | str) -> bool:
    w = as_word(w)
    tree = Eertree(w.q)
    for x in w.letters:
        if not tree.push(x):
            return False
    return True


def defect(w: Word | str) -> int:
    w = as_word(w)
    return len(w) + 1 - distinct_palindromic_factors(w)


def greedy_suffix_factorize(w: Word) -> tuple[Word, ...]:
    """Strip longest palindromic suffixes until nothing is left.

    Applies to any word; parts need not be distinct unless ``w`` is rich.
    """
    parts = []
    end = len(w)
    while end > 0:
        lps = Eertree(w.q, w.letters[:end]).lps_length
        parts.append(w[end - lps : end])
        end -= lps
    parts.reverse()
    return tuple(parts)


def ups_factorize(w: Word | str) -> UPSFactorization:
    w = as_word(w)
    d = defect(w)
    if d:
        raise NotRichError(str(w), d)
    return UPSFactorization(w, greedy_suffix_factorize(w))


def ups_part_count(w: Word | str) -> int:
    return ups_factorize(w).p


def factorization_record(w: Word, permissive: bool = False) -> dict:
    """JSON-ready record ``{word, rich, defect, p, parts, n}``.

    With ``permissive`` a non-rich word is factorized greedily instead of
    raising :class:`NotRichError`.
    """
    d = defect(w)
    if d and not permissive:
        raise NotRichError(str(w), d)
    parts = greedy_suffix_factorize(w)
    return {
        "word": str(w),
        "rich": d == 0,
        "defect": d,
        "p": len(parts),
        "parts": [render(part.letters) for part in parts],
        "n": len(w),
    }
