"""Palindromic tree (eertree) with an undo journal.

Node 0 is the imaginary root of length -1 and node 1 the empty palindrome;
every other node is one distinct non-empty palindromic factor of the buffer.
Each append pushes one journal record so that a depth-first search can walk
the tree of prefixes by ``push``/``undo`` without copying state.

For ``q <= DENSE_MAX_Q`` transitions live in one flat list indexed by
``node * q + letter`` (0 means absent, since node 0 is never a target);
larger alphabets use a dict per node.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import AlphabetError, EmptyWordError, UndoUnderflowError
from .words import Alphabet, Word

DENSE_MAX_Q = 8

IMAGINARY_ROOT = 0
EMPTY_ROOT = 1


class AppendOutcome(NamedTuple):
    created_new: bool
    lps_length: int


class Eertree:
    def __init__(self, q: int = 2, letters: Iterable[int] = ()):
        self.q = Alphabet(q).size
        self._dense = self.q <= DENSE_MAX_Q
        self._len = [-1, 0]
        self._link = [IMAGINARY_ROOT, IMAGINARY_ROOT]
        if self._dense:
            self._next: list = [0] * (2 * self.q)
        else:
            self._next = [{}, {}]
        self._buf: list[int] = []
        self._last = EMPTY_ROOT
        # (previous last, transition key of the created node or -1)
        self._journal: list[tuple[int, object]] = []
        for x in letters:
            self.append(x)

    @classmethod
    def from_word(cls, w: Word) -> Eertree:
        return cls(w.q, w.letters)

    def push(self, x: int) -> bool:
        """Append letter ``x``; return True iff a new palindrome was created."""
        buf = self._buf
        i = len(buf)
        buf.append(x)
        length = self._len
        link = self._link
        cur = self._last
        while True:
            j = i - 1 - length[cur]
            if j >= 0 and buf[j] == x:
                break
            cur = link[cur]

        if self._dense:
            key = cur * self.q + x
            node = self._next[key]
        else:
            key = (cur, x)
            node = self._next[cur].get(x, 0)
        if node:
            self._journal.append((self._last, -1))
            self._last = node
            return False

        new_len = length[cur] + 2
        if new_len == 1:
            suffix = EMPTY_ROOT
        else:
            w = link[cur]
            while True:
                j = i - 1 - length[w]
                if j >= 0 and buf[j] == x:
                    break
                w = link[w]
            suffix = self._next[w * self.q + x] if self._dense else self._next[w][x]

        node = len(length)
        length.append(new_len)
        link.append(suffix)
        if self._dense:
            self._next.extend([0] * self.q)
            self._next[key] = node
        else:
            self._next.append({})
            self._next[cur][x] = node
        self._journal.append((self._last, key))
        self._last = node
        return True

    def append(self, x: int) -> AppendOutcome:
        if not 0 <= x < self.q:
            raise AlphabetError(f"letter index {x} outside alphabet of size {self.q}")
        created = self.push(x)
        return AppendOutcome(created, self._len[self._last])

    def undo(self) -> None:
        if not self._journal:
            raise UndoUnderflowError("undo on an empty journal")
        prev_last, key = self._journal.pop()
        self._buf.pop()
        if key != -1:
            if self._dense:
                self._next[key] = 0
                del self._next[-self.q :]
            else:
                parent, x = key
                del self._next[parent][x]
                self._next.pop()
            self._len.pop()
            self._link.pop()
        self._last = prev_last

    @property
    def distinct_count(self) -> int:
        return len(self._len) - 2

    def distinct_palindromes(self) -> int:
        """Number of distinct non-empty palindromic factors of the buffer."""
        return len(self._len) - 2

    def longest_palindromic_suffix_length(self) -> int:
        if not self._buf:
            raise EmptyWordError("empty buffer has no longest palindromic suffix")
        return self._len[self._last]

    @property
    def lps_length(self) -> int:
        """Length of the longest palindromic suffix (0 for the empty buffer)."""
        return self._len[self._last]

    @property
    def node_count(self) -> int:
        return len(self._len)

    @property
    def journal_depth(self) -> int:
        return len(self._journal)

    def __len__(self) -> int:
        return len(self._buf)

    @property
    def buffer(self) -> tuple[int, ...]:
        return tuple(self._buf)

    def word(self) -> Word:
        return Word(tuple(self._buf), self.q)

    def palindromes(self) -> set[tuple[int, ...]]:
        """Materialize every node as a letter tuple (for tests and debugging)."""
        out: dict[int, tuple[int, ...]] = {EMPTY_ROOT: ()}
        if self._dense:
            edges = [
                (node // self.q, node % self.q, child)
                for node, child in enumerate(self._next)
                if child
            ]
        else:
            edges = [(p, x, c) for p, d in enumerate(self._next) for x, c in d.items()]
        # children always have larger ids than parents except from the imaginary root
        for parent, x, child in sorted(edges, key=lambda e: e[2]):
            if parent == IMAGINARY_ROOT:
                out[child] = (x,)
            else:
                out[child] = (x,) + out[parent] + (x,)
        del out[EMPTY_ROOT]
        return set(out.values())

    def state(self) -> tuple:
        """Full internal state, for comparing against a freshly built tree."""
        return (
            tuple(self._buf),
            self._last,
            tuple(self._len),
            tuple(self._link),
            tuple(self._next) if self._dense else tuple(tuple(sorted(d.items())) for d in self._next),
            len(self._journal),
        )
