"""Exhaustive enumeration and counting of rich words.

Rich words are closed under prefixes, and a word is rich iff every append
to the eertree creates a new palindrome.  A depth-first search with
``push``/``undo`` therefore visits exactly the tree of rich words and prunes
a branch on the first append that creates nothing.

In ``reduced`` mode only canonical words are visited (distinct letters first
appear in increasing order) and each one stands for ``q*(q-1)*...*(q-k+1)``
words, ``k`` being the number of distinct letters it uses.

Work is split at a fixed prefix depth: the levels up to that depth are
expanded breadth-first, and every surviving prefix seeds an independent
depth-first task with a private eertree.  Per-length counts are merged by
addition in prefix order, so the totals do not depend on the worker count.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import product
from typing import Callable, Optional, Sequence

from .eertree import Eertree
from .errors import BudgetExceededError
from .words import Alphabet, Word

MODES = ("exact", "reduced")
DEFAULT_SPLIT_DEPTH = 8
_TIME_CHECK_MASK = 0xFFF


@dataclass(frozen=True)
class CountTable:
    q: int
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __len__(self) -> int:
        return len(self.counts)

    def root(self, n: int) -> Optional[float]:
        """``R_n ** (1/n)``, or None for ``n = 0``."""
        if n == 0:
            return None
        return math.exp(math.log(self.counts[n]) / n)

    def csv_rows(self) -> list[list[str]]:
        rows = []
        for n, r in enumerate(self.counts):
            root = self.root(n)
            rows.append([str(n), str(r), "" if root is None else f"{root:.6f}"])
        return rows


@dataclass
class EnumerationStats:
    """Per-length maximum UPS part count, with the lexicographically first witness."""

    q: int
    p_max: list[int]
    p_argmax: list[Word]
    nodes_visited: int = 0
    wall_time: float = 0.0


@dataclass
class Budget:
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None

    def __post_init__(self):
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node budget must be >= 0")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time budget must be >= 0")


class _Stop(Exception):
    pass


def falling_factorial(q: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= q - i
    return out


@dataclass
class _Partial:
    counts: list[int]
    p_max: list[int]
    p_argmax: list[Optional[tuple[int, ...]]]
    nodes: int = 0

    @classmethod
    def empty(cls, n_max: int) -> _Partial:
        return cls([0] * (n_max + 1), [0] * (n_max + 1), [None] * (n_max + 1))

    def merge(self, other: _Partial) -> None:
        # callers merge in lexicographic prefix order, so strict > keeps the first witness
        for n, c in enumerate(other.counts):
            self.counts[n] += c
            if other.p_argmax[n] is not None and (
                self.p_argmax[n] is None or other.p_max[n] > self.p_max[n]
            ):
                self.p_max[n] = other.p_max[n]
                self.p_argmax[n] = other.p_argmax[n]
        self.nodes += other.nodes


@dataclass(frozen=True)
class _Task:
    q: int
    n_max: int
    reduced: bool
    prefix: tuple[int, ...]
    parts: tuple[int, ...]  # UPS part count of every prefix of ``prefix``
    k: int
    node_budget: Optional[int]
    deadline: Optional[float]


def _run_task(task: _Task) -> _Partial:
    """Depth-first search below ``task.prefix``; the prefix itself is not counted."""
    q, n_max, reduced = task.q, task.n_max, task.reduced
    tree = Eertree(q, task.prefix)
    push, undo = tree.push, tree.undo
    lens = tree._len
    buf = tree._buf
    out = _Partial.empty(n_max)
    counts, p_max, p_argmax = out.counts, out.p_max, out.p_argmax
    parts = list(task.parts) + [0] * (n_max + 1 - len(task.parts))
    weights = [falling_factorial(q, k) if reduced else 1 for k in range(q + 1)]
    node_budget = task.node_budget
    deadline = task.deadline
    nodes = 0

    def dfs(d: int, k: int) -> None:
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise _Stop
        if deadline is not None and not nodes & _TIME_CHECK_MASK and time.monotonic() > deadline:
            raise _Stop
        counts[d] += weights[k]
        p = parts[d - lens[tree._last]] + 1
        parts[d] = p
        if p > p_max[d] or p_argmax[d] is None:
            p_max[d] = p
            p_argmax[d] = tuple(buf)
        if d == n_max:
            return
        limit = min(k + 1, q) if reduced else q
        for x in range(limit):
            if push(x):
                dfs(d + 1, k + 1 if x == k else k)
            undo()

    d0 = len(task.prefix)
    if d0 < n_max:
        limit = min(task.k + 1, q) if reduced else q
        for x in range(limit):
            if push(x):
                dfs(d0 + 1, task.k + 1 if x == task.k else task.k)
            undo()
    out.nodes = nodes
    return out


def _expand_levels(q: int, depth: int, reduced: bool, budget_nodes: Optional[int], deadline):
    """Breadth-first expansion of rich prefixes through ``depth``.

    Yields ``(level, frontier, nodes)`` after each completed level;
    frontier items are ``(letters, parts, k)`` in lexicographic order.
    """
    frontier = [((), (0,), 0)]
    nodes = 1
    yield 0, frontier, nodes
    for level in range(1, depth + 1):
        nxt = []
        for letters, parts, k in frontier:
            tree = Eertree(q, letters)
            limit = min(k + 1, q) if reduced else q
            for x in range(limit):
                if tree.push(x):
                    p = parts[level - tree.lps_length] + 1
                    nxt.append((letters + (x,), parts + (p,), k + 1 if x == k else k))
                    nodes += 1
                    if budget_nodes is not None and nodes > budget_nodes:
                        raise _Stop
                    if deadline is not None and time.monotonic() > deadline:
                        raise _Stop
                tree.undo()
        frontier = nxt
        yield level, frontier, nodes


def _level_partial(q: int, n_max: int, level: int, frontier, reduced: bool) -> _Partial:
    out = _Partial.empty(n_max)
    for letters, parts, k in frontier:
        out.counts[level] += falling_factorial(q, k) if reduced else 1
        p = parts[-1]
        if out.p_argmax[level] is None or p > out.p_max[level]:
            out.p_max[level] = p
            out.p_argmax[level] = letters
    return out


def default_workers() -> int:
    return max(1, int(os.environ.get("RICHLANG_WORKERS", "1")))


def enumerate_with_stats(
    q: int,
    n_max: int,
    mode: str = "exact",
    workers: Optional[int] = None,
    budget: Optional[Budget] = None,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> tuple[CountTable, EnumerationStats]:
    """Count rich words of every length ``0..n_max`` and collect UPS statistics.

    Raises :class:`BudgetExceededError` carrying the table of the lengths
    that were completed when a node or time cap is hit.
    """
    Alphabet(q)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if split_depth < 0:
        raise ValueError("split depth must be >= 0")
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    budget = budget or Budget()
    reduced = mode == "reduced"
    started = time.monotonic()
    deadline = None if budget.time_budget is None else started + budget.time_budget
    depth = min(split_depth, n_max)

    total = _Partial.empty(n_max)
    completed = -1
    frontier: list = []
    nodes = 0
    try:
        for level, frontier, nodes in _expand_levels(q, depth, reduced, budget.node_budget, deadline):
            total.merge(_level_partial(q, n_max, level, frontier, reduced))
            completed = level
        total.nodes = nodes
        remaining = None if budget.node_budget is None else budget.node_budget - nodes
        tasks = [
            _Task(q, n_max, reduced, letters, parts, k, remaining, deadline)
            for letters, parts, k in frontier
        ]
        if depth < n_max:
            if workers == 1:
                for task in tasks:
                    if remaining is not None:
                        task = replace(task, node_budget=remaining)
                    part = _run_task(task)
                    total.merge(part)
                    if remaining is not None:
                        remaining -= part.nodes
            else:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    for part in pool.map(_run_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))):
                        total.merge(part)
                if budget.node_budget is not None and total.nodes > budget.node_budget:
                    raise _Stop
        completed = n_max
    except _Stop:
        partial = CountTable(q, tuple(total.counts[: completed + 1]))
        raise BudgetExceededError(
            f"enumeration budget exceeded; lengths 0..{completed} are complete",
            partial,
            completed,
        ) from None

    table = CountTable(q, tuple(total.counts))
    stats = EnumerationStats(
        q,
        list(total.p_max),
        [Word(w, q) for w in total.p_argmax],
        nodes_visited=total.nodes,
        wall_time=time.monotonic() - started,
    )
    return table, stats


def count_rich(
    q: int,
    n_max: int,
    mode: str = "exact",
    workers: Optional[int] = None,
    budget: Optional[Budget] = None,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> CountTable:
    table, _ = enumerate_with_stats(q, n_max, mode, workers, budget, split_depth)
    return table


def enumerate_rich(
    q: int,
    n: int,
    visitor: Optional[Callable[[Word], None]] = None,
    budget: Optional[Budget] = None,
) -> int:
    """Call ``visitor`` once per rich word of length ``n``, lexicographically.

    Returns the number of words visited.
    """
    Alphabet(q)
    if n < 0:
        raise ValueError("n must be >= 0")
    budget = budget or Budget()
    deadline = None if budget.time_budget is None else time.monotonic() + budget.time_budget
    tree = Eertree(q)
    push, undo, buf = tree.push, tree.undo, tree._buf
    found = 0
    nodes = 0

    def dfs(d: int) -> None:
        nonlocal found, nodes
        nodes += 1
        if budget.node_budget is not None and nodes > budget.node_budget:
            raise _Stop
        if deadline is not None and not nodes & _TIME_CHECK_MASK and time.monotonic() > deadline:
            raise _Stop
        if d == n:
            found += 1
            if visitor is not None:
                visitor(Word(tuple(buf), q))
            return
        for x in range(q):
            if push(x):
                dfs(d + 1)
            undo()

    try:
        dfs(0)
    except _Stop:
        raise BudgetExceededError(
            f"enumeration budget exceeded after {found} words", CountTable(q, ()), -1
        ) from None
    return found


def max_ups_parts(q: int, n: int, budget: Optional[Budget] = None) -> tuple[int, Word]:
    """Maximum UPS part count over rich words of length ``n`` and its first witness."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _, stats = enumerate_with_stats(q, n, "reduced", workers=1, budget=budget)
    return stats.p_max[n], stats.p_argmax[n]


def rich_words(q: int, n: int) -> list[Word]:
    out: list[Word] = []
    enumerate_rich(q, n, out.append)
    return out


def census_bruteforce(q: int, n_max: int, is_rich_fn: Callable[[Sequence[int]], bool]) -> list[int]:
    """Count words of each length accepted by ``is_rich_fn`` over all ``q**n`` words."""
    return [sum(1 for w in product(range(q), repeat=n) if is_rich_fn(w)) for n in range(n_max + 1)]
