"""Executable forms of the counting bounds for rich words.

Integer-valued quantities (minimal ``t``, the palindrome-count bound, the
composition recurrence) are computed exactly.  Real-valued inequalities are
decided either in exact rational arithmetic or in log space with ``mpmath``;
a result within ``TOLERANCE`` of equality is reported as marginal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

import mpmath

from .enumerate import CountTable, EnumerationStats
from .errors import DomainError, InsufficientDataError, InvalidHypothesisError

TOLERANCE = 1e-9
_DPS = 50

# R_60(2)^(1/60) < 1.605 is the published reference point (OEIS A216264);
# n = 60 is far beyond exhaustive enumeration and is never computed here.
REFERENCE_N = 60
REFERENCE_ROOT = 1.605
REFERENCE_NOTE = (
    "reference point R_60(2)^(1/60) < 1.605 (OEIS A216264) is out of desk scope "
    "and not computed; certificates below come from exhaustively counted lengths only"
)

Real = Union[int, float, Fraction, str]


class Verdict(enum.Enum):
    PASS = "pass"
    MARGINAL = "marginal"
    FAIL = "fail"


def constant_c(q: int) -> float:
    """``max(8 q^(3/2) ln q, 8 * 9^(3/2) ln 9)``."""
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    return max(8 * q**1.5 * math.log(q), 8 * 9**1.5 * math.log(9))


def _constant_c_mp(q: int) -> mpmath.mpf:
    return max(8 * mpmath.mpf(q) ** 1.5 * mpmath.log(q), 216 * mpmath.log(9))


def kappa(n: int, q: int) -> int:
    """``ceil(c * n / ln n)``.

    Evaluated with 50 digits beyond those of ``n``; a value within 1e-30 of an integer
    is taken to be that integer (e.g. q = 16, n = 2 gives exactly 4096).
    """
    if n < 2:
        raise DomainError(f"kappa needs n >= 2 (ln n > 0), got {n}")
    with mpmath.workdps(len(str(n)) + _DPS):
        value = _constant_c_mp(q) * n / mpmath.log(n)
        nearest = int(mpmath.nint(value))
        if abs(value - nearest) < mpmath.mpf("1e-30"):
            return nearest
        return int(mpmath.ceil(value))


def palindrome_prefix_length(t: int, q: int) -> int:
    """``sum_{i=1}^t i q^ceil(i/2)``: total length of all palindromes of length <= t."""
    return sum(i * q ** ((i + 1) // 2) for i in range(1, t + 1))


def minimal_t(n: int, q: int) -> int:
    """Smallest ``t`` with ``sum_{i=1}^t i q^ceil(i/2) >= n``."""
    if n < 1 or q < 2:
        raise DomainError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    t, total = 0, 0
    while total < n:
        t += 1
        total += t * q ** ((t + 1) // 2)
    return t


def lemma_b_bound(n: int, q: int) -> int:
    """Number of palindromes of length at most ``minimal_t(n, q)``."""
    t = minimal_t(n, q)
    return sum(q ** ((i + 1) // 2) for i in range(1, t + 1))


def _verdict(lhs: Fraction, rhs: Fraction) -> Verdict:
    """Classify ``lhs <= rhs`` with a relative band of TOLERANCE around equality."""
    scale = max(abs(lhs), abs(rhs), Fraction(1))
    if abs(rhs - lhs) <= Fraction(TOLERANCE) * scale:
        return Verdict.MARGINAL
    return Verdict.PASS if lhs <= rhs else Verdict.FAIL


def lemma_c_terms(N: int, x: Real) -> tuple[Fraction, Fraction, Fraction]:
    """Exact ``(N x^N / (2(x-1)), sum_{i=1}^N i x^(i-1), N x^N / (x-1))``."""
    x = Fraction(x)
    if N < 1 or x <= 1:
        raise DomainError(f"need N >= 1 and x > 1, got N={N}, x={x}")
    if N * (x - 1) < 2:
        raise DomainError(f"need N(x-1) >= 2, got N={N}, x={x}")
    xn = x**N
    middle = sum(i * x ** (i - 1) for i in range(1, N + 1))
    upper = N * xn / (x - 1)
    return upper / 2, middle, upper


def lemma_c_verdict(N: int, x: Real) -> Verdict:
    lower, middle, upper = lemma_c_terms(N, x)
    left, right = _verdict(lower, middle), _verdict(middle, upper)
    if Verdict.FAIL in (left, right):
        return Verdict.FAIL
    if Verdict.MARGINAL in (left, right):
        return Verdict.MARGINAL
    return Verdict.PASS


def check_lemma_c(N: int, x: Real) -> bool:
    """Whether ``N x^N/(2(x-1)) <= sum i x^(i-1) <= N x^N/(x-1)`` holds exactly.

    ``x`` is converted with :class:`fractions.Fraction`, so ``"1.05"`` means
    21/20 while the float ``1.05`` means its binary value.
    """
    lower, middle, upper = lemma_c_terms(N, x)
    return lower <= middle <= upper


def lemma_c_grid(max_N: int = 50) -> list[tuple[int, Fraction]]:
    """The (N, x) grid with x in {1.05, 1.10, ..., 3.00} and N(x-1) >= 2."""
    grid = []
    for N in range(1, max_N + 1):
        for k in range(21, 61):
            x = Fraction(k, 20)
            if N * (x - 1) >= 2:
                grid.append((N, x))
    return grid


def composition_count(n: int, p: int) -> int:
    """Compositions of ``n`` into ``p`` positive parts: ``C(n-1, p-1)``."""
    if n < 1 or p < 1:
        raise DomainError(f"need n >= 1 and p >= 1, got n={n}, p={p}")
    if p > n:
        return 0
    return math.comb(n - 1, p - 1)


def binomial_tail(N: int, L: int) -> int:
    return sum(math.comb(N, k) for k in range(L + 1))


def binomial_tail_verdict(N: int, L: int) -> Verdict:
    """Compare ``ln sum_{k<=L} C(N,k)`` with ``L (1 + ln N - ln L)``."""
    if not 1 <= L <= N:
        raise DomainError(f"need 1 <= L <= N, got N={N}, L={L}")
    with mpmath.workdps(_DPS):
        lhs = mpmath.log(binomial_tail(N, L))
        rhs = L * (1 + mpmath.log(N) - mpmath.log(L))
        gap = rhs - lhs
    if abs(gap) <= TOLERANCE:
        return Verdict.MARGINAL
    return Verdict.PASS if gap > 0 else Verdict.FAIL


def binomial_tail_bound_check(N: int, L: int) -> bool:
    return binomial_tail_verdict(N, L) is not Verdict.FAIL


def _half_lengths(table: CountTable, n: int) -> list[int]:
    """``b_m = R_ceil(m/2)`` for ``m = 0..n`` (``b_0`` unused)."""
    need = (n + 1) // 2
    if table.n_max < need:
        raise InsufficientDataError(f"table needs R_0..R_{need}, has R_0..R_{table.n_max}")
    return [0] + [table[(m + 1) // 2] for m in range(1, n + 1)]


def theorem_d_rhs(n: int, q: int, table: CountTable) -> int:
    """``sum_{p=1}^{kappa_n} sum_{n_1+..+n_p=n} prod_i R_ceil(n_i/2)``, exactly.

    Computed by repeated convolution of ``b_m = R_ceil(m/2)``.  Terms with
    ``p > n`` are empty, so the outer sum stops at ``min(kappa_n, n)``.
    """
    if n < 2:
        raise DomainError(f"theorem D right-hand side needs n >= 2, got {n}")
    if table.q != q:
        raise InsufficientDataError(f"table is for q={table.q}, not q={q}")
    b = _half_lengths(table, n)
    p_limit = min(kappa(n, q), n)
    # ways[m] = weighted compositions of m into exactly p parts
    ways = b[:]
    total = ways[n]
    for _ in range(2, p_limit + 1):
        nxt = [0] * (n + 1)
        for m in range(1, n + 1):
            if ways[m]:
                wm = ways[m]
                for last in range(1, n - m + 1):
                    nxt[m + last] += wm * b[last]
        ways = nxt
        total += ways[n]
    return total


def compositions(n: int):
    """Every composition of ``n`` into positive parts, as tuples."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def theorem_d_rhs_bruteforce(n: int, table: CountTable, p_limit: Optional[int] = None) -> int:
    """Direct sum over all compositions; independent check of :func:`theorem_d_rhs`."""
    total = 0
    for comp in compositions(n):
        if p_limit is not None and len(comp) > p_limit:
            continue
        prod = 1
        for part in comp:
            prod *= table[math.ceil(part / 2)]
        total += prod
    return total


@dataclass(frozen=True)
class GrowthHypothesis:
    """Claim that ``R_n <= K h^n`` for every ``n``."""

    h: float
    K: float

    def __post_init__(self):
        if not self.h > 1:
            raise InvalidHypothesisError(f"h must be > 1, got {self.h}")
        if not self.K >= 1:
            raise InvalidHypothesisError(f"K must be >= 1, got {self.K}")

    def holds_on(self, table: CountTable, n_max: Optional[int] = None) -> bool:
        """Exact check of ``R_m <= K h^m`` for ``m = 0..n_max``."""
        n_max = table.n_max if n_max is None else n_max
        K, h = Fraction(self.K), Fraction(self.h)
        return all(table[m] <= K * h**m for m in range(n_max + 1))


@dataclass(frozen=True)
class PropEResult:
    holds: bool
    applicable: bool


def prop_e_chain_check(hyp: GrowthHypothesis, table: CountTable, n: int) -> PropEResult:
    """Check ``R_n <= K^k h^((n+k)/2) (e n / k)^k`` with ``k = kappa_n``.

    The binomial tail bound behind the last factor needs ``k <= n``; when
    that fails the result is reported as not applicable.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if table.n_max < n:
        raise InsufficientDataError(f"table stops at n={table.n_max}")
    if not hyp.holds_on(table, n):
        raise InvalidHypothesisError(f"R_m <= {hyp.K} * {hyp.h}^m fails on the table")
    k = kappa(n, table.q)
    if k > n:
        return PropEResult(holds=False, applicable=False)
    with mpmath.workdps(_DPS):
        rhs = (
            k * mpmath.log(hyp.K)
            + mpmath.mpf(n + k) / 2 * mpmath.log(hyp.h)
            + k * (1 + mpmath.log(n) - mpmath.log(k))
        )
        holds = mpmath.log(table[n]) <= rhs + TOLERANCE
    return PropEResult(holds=bool(holds), applicable=True)


def smallest_applicable_n(q: int) -> int:
    """Smallest ``n`` with ``kappa(n, q) <= n``.

    ``ceil(c n / ln n) <= n`` iff ``ln n >= c``, so this is ``ceil(e^c)``,
    a number with about 200 digits for every ``q <= 9``.
    """
    c = constant_c(q)
    with mpmath.workdps(int(c / math.log(10)) + _DPS):
        return int(mpmath.ceil(mpmath.exp(_constant_c_mp(q))))


@dataclass(frozen=True)
class GrowthRow:
    n: int
    root: float
    certificate: float


def growth_report(table: CountTable) -> list[GrowthRow]:
    """Roots ``R_n^(1/n)`` and the running minimum over ``1 <= m <= n``.

    By Fekete's lemma each root bounds the limit of ``R_n^(1/n)`` from above,
    so the running minimum is the best certificate available from the table.
    """
    if table.n_max < 1:
        raise InsufficientDataError("growth report needs R_1 at least")
    rows = []
    best = math.inf
    for n in range(1, table.n_max + 1):
        root = table.root(n)
        best = min(best, root)
        rows.append(GrowthRow(n, root, best))
    return rows


@dataclass(frozen=True)
class TheoremAResult:
    max_ratio: float
    all_within: bool
    lemma_b_ok: bool
    violations: tuple[str, ...] = ()


def verify_theorem_a(stats: EnumerationStats, q: int) -> TheoremAResult:
    """Compare observed maximum UPS part counts with ``c n / ln n`` and the palindrome-count bound."""
    c = constant_c(q)
    violations = []
    max_ratio = 0.0
    lemma_b_ok = True
    for n in range(1, len(stats.p_max)):
        p = stats.p_max[n]
        bound = lemma_b_bound(n, q)
        if p > bound:
            lemma_b_ok = False
            violations.append(f"n={n}: p_max={p} > lemma_b_bound={bound}")
        if n >= 2:
            max_ratio = max(max_ratio, p * math.log(n) / n)
            k = kappa(n, q)
            if p > k:
                violations.append(f"n={n}: p_max={p} > kappa_n={k}")
    return TheoremAResult(max_ratio, max_ratio <= c, lemma_b_ok, tuple(violations))


@dataclass(frozen=True)
class BoundReport:
    q: int
    n: int
    c: float
    kappa_n: Optional[int]
    t_min: Optional[int]
    lemma_b_bound: Optional[int]
    p_max_observed: int
    theorem_d_rhs: Optional[int]
    R_n: int
    root: Optional[float]
    certificate: Optional[float]

    def failures(self) -> list[str]:
        out = []
        if self.lemma_b_bound is not None and self.p_max_observed > self.lemma_b_bound:
            out.append(f"n={self.n}: p_max {self.p_max_observed} > lemma_b_bound {self.lemma_b_bound}")
        if self.kappa_n is not None and self.p_max_observed > self.kappa_n:
            out.append(f"n={self.n}: p_max {self.p_max_observed} > kappa_n {self.kappa_n}")
        if self.theorem_d_rhs is not None and self.R_n > self.theorem_d_rhs:
            out.append(f"n={self.n}: R_n {self.R_n} > theorem_d_rhs {self.theorem_d_rhs}")
        return out

    def csv_row(self) -> list[str]:
        def fmt(v):
            if v is None:
                return ""
            if isinstance(v, float):
                return f"{v:.6f}"
            return str(v)

        return [
            fmt(v)
            for v in (
                self.n,
                self.q,
                self.R_n,
                self.p_max_observed,
                self.t_min,
                self.lemma_b_bound,
                self.kappa_n,
                self.theorem_d_rhs,
                self.root,
                self.certificate,
            )
        ]


BOUND_CSV_HEADER = [
    "n", "q", "R_n", "p_max", "t_min", "lemma_b_bound", "kappa_n", "theorem_d_rhs", "root", "certificate",
]


def bound_reports(table: CountTable, stats: EnumerationStats) -> list[BoundReport]:
    q = table.q
    c = constant_c(q)
    growth = {row.n: row for row in growth_report(table)} if table.n_max >= 1 else {}
    reports = []
    for n in range(table.n_max + 1):
        g = growth.get(n)
        reports.append(
            BoundReport(
                q=q,
                n=n,
                c=c,
                kappa_n=kappa(n, q) if n >= 2 else None,
                t_min=minimal_t(n, q) if n >= 1 else None,
                lemma_b_bound=lemma_b_bound(n, q) if n >= 1 else None,
                p_max_observed=stats.p_max[n],
                theorem_d_rhs=theorem_d_rhs(n, q, table) if n >= 2 else None,
                R_n=table[n],
                root=g.root if g else None,
                certificate=g.certificate if g else None,
            )
        )
    return reports


def report_failures(reports: Sequence[BoundReport]) -> list[str]:
    out = [msg for r in reports for msg in r.failures()]
    certs = [r.certificate for r in reports if r.certificate is not None]
    for a, b in zip(certs, certs[1:]):
        if b > a:
            out.append("growth certificate increased")
    return out
