"""Exit criteria for the package, one test per criterion.

Each test records a ``PASS``/``FAIL`` line that is printed in the terminal
summary; tolerances are fixed here and never relaxed.
"""

import math
import random
import time
from contextlib import contextmanager
from itertools import product

import pytest

from richlang import bounds
from richlang.cli import main
from richlang.eertree import Eertree
from richlang.enumerate import count_rich, enumerate_with_stats, rich_words
from richlang.verify import check_ups_invariants
from richlang.words import Word, palindromic_factor_set_bruteforce

from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(name, time_limit=None):
    start = time.monotonic()
    status = "FAIL"
    try:
        yield
        elapsed = time.monotonic() - start
        if time_limit is not None:
            assert elapsed < time_limit, f"{name}: {elapsed:.1f}s exceeds {time_limit}s"
        status = "PASS"
    finally:
        ACCEPTANCE_LINES.append(f"{status}  {name}  ({time.monotonic() - start:.1f}s)")


def brute_count(w):
    return len(palindromic_factor_set_bruteforce(w)) - 1


@pytest.fixture(scope="module")
def tables():
    return {
        2: count_rich(2, 20, "reduced", workers=1),
        3: count_rich(3, 20, "reduced", workers=1),
    }


def test_oracle_equivalence():
    with criterion("oracle equivalence: eertree == brute force", time_limit=120):
        for n in range(0, 13):
            for letters in product(range(2), repeat=n):
                w = Word(letters, 2)
                assert Eertree.from_word(w).distinct_palindromes() == brute_count(w)
        rng = random.Random(2016)
        for q in (3, 4):
            for n in range(1, 19):
                for _ in range(1000):
                    w = Word(tuple(rng.randrange(q) for _ in range(n)), q)
                    assert Eertree.from_word(w).distinct_palindromes() == brute_count(w)


def test_counting_correctness():
    with criterion("counting: count_rich(2, 14) == brute-force census", time_limit=120):
        census = [
            sum(1 for letters in product(range(2), repeat=n) if brute_count(Word(letters, 2)) == n)
            for n in range(15)
        ]
        table = count_rich(2, 14, "exact", workers=1)
        assert list(table.counts) == census
        assert table.counts[:5] == (1, 2, 4, 8, 16)


def test_performance():
    with criterion("performance: count_rich(2, 25, reduced) < 5 min", time_limit=300):
        table = count_rich(2, 25, "reduced")
        assert table.n_max == 25
        assert count_rich(2, 16, "exact", workers=1).counts == table.counts[:17]


def test_structural_properties(tables):
    with criterion("structure: monotone, submultiplicative, certificate non-increasing"):
        for q, table in tables.items():
            c = table.counts
            assert all(c[n + 1] >= c[n] for n in range(20))
            for n in range(21):
                for m in range(21 - n):
                    assert c[n + m] <= c[n] * c[m]
            certs = [row.certificate for row in bounds.growth_report(table)]
            assert all(a >= b for a, b in zip(certs, certs[1:]))


def test_ups_factorization():
    with criterion("UPS-factorization invariants on all rich binary words n <= 14", time_limit=180):
        checked = 0
        for n in range(1, 15):
            for w in rich_words(2, n):
                assert check_ups_invariants(w) == []
                checked += 1
        assert checked == sum(count_rich(2, 14).counts[1:])


def test_theorem_a_lemma_b():
    with criterion("p_max <= lemma B bound and p_max <= kappa_n"):
        for q, n_max in ((2, 14), (3, 10)):
            _, stats = enumerate_with_stats(q, n_max, "exact", workers=1)
            for n in range(1, n_max + 1):
                assert stats.p_max[n] <= bounds.lemma_b_bound(n, q)
                if n >= 2:
                    assert stats.p_max[n] <= bounds.kappa(n, q)
            result = bounds.verify_theorem_a(stats, q)
            assert result.all_within and result.lemma_b_ok


def test_theorem_d(tables):
    with criterion("R_n <= theorem D right-hand side, DP == composition enumeration"):
        for q, table in tables.items():
            for n in range(2, 17):
                rhs = bounds.theorem_d_rhs(n, q, table)
                assert table[n] <= rhs
                if n <= 10:
                    assert rhs == bounds.theorem_d_rhs_bruteforce(n, table)


def test_lemma_c_grid():
    with criterion("Lemma C grid at tolerance 1e-9, zero marginal"):
        grid = bounds.lemma_c_grid(50)
        verdicts = [bounds.lemma_c_verdict(N, x) for N, x in grid]
        assert bounds.TOLERANCE == 1e-9
        assert verdicts.count(bounds.Verdict.MARGINAL) == 0
        assert all(v is bounds.Verdict.PASS for v in verdicts)


def test_appendix_grid():
    with criterion("binomial tail bound for 1 <= L <= N <= 60"):
        for N in range(1, 61):
            for L in range(1, N + 1):
                assert bounds.binomial_tail_verdict(N, L) is bounds.Verdict.PASS


def test_growth_certificate(tables, capsys):
    with criterion("growth certificate finite, in [1, root(4)], reference point flagged out of scope"):
        table = tables[2]
        rows = bounds.growth_report(table)
        root4 = rows[3].root
        assert root4 == 2
        cert = rows[-1].certificate
        assert math.isfinite(cert) and 1 <= cert <= root4
        assert main(["count", "--q", "2", "--max-n", "16", "--format", "plain"]) == 0
        out = capsys.readouterr().out
        assert "1.605" in out and "out of desk scope" in out


def test_determinism(capsys):
    with criterion("determinism: verify all --seed 42, parallel vs single count"):
        main(["verify", "all", "--seed", "42"])
        first = capsys.readouterr().out
        main(["verify", "all", "--seed", "42"])
        second = capsys.readouterr().out
        assert first == second
        main(["count", "--q", "2", "--max-n", "18", "--mode", "reduced", "--workers", "1"])
        single = capsys.readouterr().out
        main(["count", "--q", "2", "--max-n", "18", "--mode", "reduced", "--workers", "3"])
        parallel = capsys.readouterr().out
        assert single == parallel
