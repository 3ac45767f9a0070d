"""Property suites run by ``richlang verify``.

Each suite returns a :class:`SuiteResult`; output never includes timings so
that a fixed seed gives byte-identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from . import bounds
from .eertree import Eertree
from .enumerate import census_bruteforce, count_rich, rich_words
from .rich import is_rich, ups_factorize
from .words import (
    Word,
    count_occurrences_bruteforce,
    count_palindromes_of_length,
    is_palindrome,
    longest_palindromic_suffix_bruteforce,
    palindromic_factor_set_bruteforce,
)

SUITES = ("oracle", "lemmas", "appendix")
MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    marginal: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_word_against_oracle(w: Word) -> list[str]:
    """Compare eertree-derived quantities with the brute-force definitions."""
    problems = []
    oracle = palindromic_factor_set_bruteforce(w)
    tree = Eertree.from_word(w)
    if tree.distinct_palindromes() != len(oracle) - 1:
        problems.append(f"{w}: eertree count {tree.distinct_palindromes()} != oracle {len(oracle) - 1}")
    if len(w) and tree.longest_palindromic_suffix_length() != len(longest_palindromic_suffix_bruteforce(w)):
        problems.append(f"{w}: longest palindromic suffix mismatch")
    if is_rich(w) != (len(oracle) == len(w) + 1):
        problems.append(f"{w}: is_rich disagrees with definition")
    return problems


def check_ups_invariants(w: Word) -> list[str]:
    """The five structural properties of the UPS-factorization of a rich word."""
    problems = []
    parts = ups_factorize(w).parts
    if not all(len(part) and is_palindrome(part) for part in parts):
        problems.append(f"{w}: non-palindromic or empty part")
    if len(set(parts)) != len(parts):
        problems.append(f"{w}: repeated part")
    if tuple(x for part in parts for x in part) != w.letters:
        problems.append(f"{w}: parts do not concatenate to the word")
    end = len(w)
    for part in reversed(parts):
        prefix = w[:end]
        if longest_palindromic_suffix_bruteforce(prefix) != part:
            problems.append(f"{w}: part {part} is not the longest palindromic suffix of {prefix}")
        if count_occurrences_bruteforce(part, prefix) != 1:
            problems.append(f"{w}: part {part} is not unioccurrent in {prefix}")
        end -= len(part)
    return problems


def oracle_suite(q: int = 2, max_n: int = 10, seed: int = 0, samples: int = 50) -> SuiteResult:
    result = SuiteResult("oracle")
    for n in range(max_n + 1):
        for letters in product(range(q), repeat=n):
            problems = check_word_against_oracle(Word(letters, q))
            result.check(not problems, "; ".join(problems))

    rng = random.Random(seed)
    for sample_q in (3, 4):
        for n in range(1, 19):
            for _ in range(samples):
                w = Word(tuple(rng.randrange(sample_q) for _ in range(n)), sample_q)
                problems = check_word_against_oracle(w)
                result.check(not problems, "; ".join(problems))

    census = census_bruteforce(q, max_n, lambda w: len(palindromic_factor_set_bruteforce(Word(w, q))) == len(w) + 1)
    table = count_rich(q, max_n, "exact", workers=1)
    result.check(list(table.counts) == census, f"count_rich {table.counts} != census {census}")
    reduced = count_rich(q, max_n, "reduced", workers=1)
    result.check(reduced == table, "exact and reduced tables differ")

    for n in range(1, max_n + 1):
        for w in rich_words(q, n):
            problems = check_ups_invariants(w)
            result.check(not problems, "; ".join(problems))
    return result


def lemmas_suite(max_N: int = 50) -> SuiteResult:
    result = SuiteResult("lemmas")
    for N, x in bounds.lemma_c_grid(max_N):
        verdict = bounds.lemma_c_verdict(N, x)
        if verdict is bounds.Verdict.MARGINAL:
            result.marginal += 1
        result.check(verdict is not bounds.Verdict.FAIL, f"lemma C fails at N={N}, x={x}")

    for i in range(1, 9):
        for q in (2, 3):
            brute = sum(1 for w in product(range(q), repeat=i) if is_palindrome(w))
            result.check(brute == count_palindromes_of_length(i, q), f"palindrome count i={i}, q={q}")

    for q in range(2, 7):
        ts = [bounds.minimal_t(n, q) for n in range(1, 2001)]
        result.check(all(a <= b for a, b in zip(ts, ts[1:])), f"minimal_t not monotone in n for q={q}")
    for n in range(1, 2001):
        ts = [bounds.minimal_t(n, q) for q in range(2, 7)]
        result.check(all(a >= b for a, b in zip(ts, ts[1:])), f"minimal_t increases with q at n={n}")

    for n in range(1, 31):
        total = sum(bounds.composition_count(n, p) for p in range(1, n + 1))
        result.check(total == 2 ** (n - 1), f"compositions of {n} sum to {total}")

    for q in (2, 3):
        table = count_rich(q, 10, "reduced", workers=1)
        for n in range(2, 11):
            dp = bounds.theorem_d_rhs(n, q, table)
            brute = bounds.theorem_d_rhs_bruteforce(n, table)
            result.check(dp == brute, f"theorem D DP {dp} != enumeration {brute} at n={n}, q={q}")
            result.check(table[n] <= dp, f"R_{n} > theorem D bound for q={q}")
    return result


def appendix_suite(max_N: int = 60) -> SuiteResult:
    result = SuiteResult("appendix")
    for N in range(1, max_N + 1):
        for L in range(1, N + 1):
            verdict = bounds.binomial_tail_verdict(N, L)
            if verdict is bounds.Verdict.MARGINAL:
                result.marginal += 1
            result.check(verdict is not bounds.Verdict.FAIL, f"binomial tail bound fails at N={N}, L={L}")
    return result


def run_suites(suite: str, q: int = 2, max_n: int = 10, seed: int = 0, samples: int = 50) -> list[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if name == "oracle":
            out.append(oracle_suite(q, max_n, seed, samples))
        elif name == "lemmas":
            out.append(lemmas_suite())
        elif name == "appendix":
            out.append(appendix_suite())
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out
