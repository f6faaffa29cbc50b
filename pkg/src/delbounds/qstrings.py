"""Primitives for q-ary strings under insertions and deletions.

Strings over the alphabet {0, ..., q-1} are immutable values.  All
set-valued results are deduplicated and returned in canonical order
(sorted by (length, symbols)), so downstream indexing is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator


@dataclass(frozen=True)
class QaryString:
    """An immutable string over the alphabet {0, ..., q-1}."""

    q: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"alphabet size must be >= 2, got {self.q}")
        if any(not (0 <= c < self.q) for c in self.symbols):
            raise ValueError(f"symbols out of range for q={self.q}: {self.symbols}")

    @classmethod
    def from_digits(cls, digits: str, q: int) -> "QaryString":
        return cls(q, tuple(int(c) for c in digits))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        if self.q > 10:
            return ",".join(str(c) for c in self.symbols)
        return "".join(str(c) for c in self.symbols)

    @cached_property
    def runs(self) -> int:
        """Number of maximal blocks of identical adjacent symbols (0 if empty)."""
        return _run_count(self.symbols)

    def rank(self) -> int:
        """Lexicographic rank among the q^len strings of this length."""
        v = 0
        for c in self.symbols:
            v = v * self.q + c
        return v

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.symbols), self.symbols)


def _run_count(symbols: tuple[int, ...]) -> int:
    if not symbols:
        return 0
    r = 1
    prev = symbols[0]
    for c in symbols[1:]:
        if c != prev:
            r += 1
            prev = c
    return r


def run_count(x: QaryString) -> int:
    """r(x): the number of runs of x.  Defined as 0 for the empty string."""
    return x.runs


def all_strings(q: int, n: int) -> Iterator[QaryString]:
    """All strings of length n over {0,...,q-1} in lexicographic order."""
    for tup in itertools.product(range(q), repeat=n):
        yield QaryString(q, tup)


def canonical_set(strings: Iterable[QaryString]) -> tuple[QaryString, ...]:
    """Deduplicate and sort by (length, symbols)."""
    return tuple(sorted(set(strings), key=QaryString.sort_key))


@lru_cache(maxsize=1 << 18)
def _single_deletions(symbols: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    return frozenset(symbols[:i] + symbols[i + 1 :] for i in range(len(symbols)))


def _deletion_tuples(symbols: tuple[int, ...], s: int) -> set[tuple[int, ...]]:
    # s-fold single-deletion expansion; equals deletion of any s positions.
    current = {symbols}
    for _ in range(s):
        nxt: set[tuple[int, ...]] = set()
        for t in current:
            nxt.update(_single_deletions(t))
        current = nxt
    return current


def deletion_set(x: QaryString, s: int) -> tuple[QaryString, ...]:
    """D_s(x): all distinct subsequences of x of length len(x)-s, sorted."""
    if s < 0 or s > len(x):
        raise ValueError(f"deletion count s={s} out of range for |x|={len(x)}")
    tuples = _deletion_tuples(x.symbols, s)
    return tuple(QaryString(x.q, t) for t in sorted(tuples))


@lru_cache(maxsize=1 << 18)
def _deletion_count(q: int, symbols: tuple[int, ...], s: int) -> int:
    if s == 0:
        return 1
    if s == 1:
        return _run_count(symbols)
    return len(_deletion_tuples(symbols, s))


def deletion_set_size(x: QaryString, s: int) -> int:
    """|D_s(x)|.  Uses |D_1(x)| = r(x); larger s falls back to enumeration."""
    if s < 0 or s > len(x):
        raise ValueError(f"deletion count s={s} out of range for |x|={len(x)}")
    return _deletion_count(x.q, x.symbols, s)


def insertion_set(x: QaryString, s: int) -> tuple[QaryString, ...]:
    """I_s(x): all distinct supersequences of x of length len(x)+s, sorted."""
    if s < 0:
        raise ValueError(f"insertion count s={s} must be nonnegative")
    current = {x.symbols}
    for _ in range(s):
        nxt: set[tuple[int, ...]] = set()
        for t in current:
            for i in range(len(t) + 1):
                for c in range(x.q):
                    nxt.add(t[:i] + (c,) + t[i:])
        current = nxt
    return tuple(QaryString(x.q, t) for t in sorted(current))


def is_subsequence(y: QaryString, x: QaryString) -> bool:
    """True iff y can be obtained from x by deletions (greedy scan)."""
    it = iter(x.symbols)
    return all(c in it for c in y.symbols)


def _lcs_length(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        best = 0
        append = cur.append
        for j, cb in enumerate(b):
            best = prev[j] + 1 if ca == cb else max(prev[j + 1], cur[j])
            append(best)
        prev = cur
    return prev[-1]


def edit_distance(x: QaryString, y: QaryString) -> int:
    """Insert/delete edit distance: len(x)+len(y)-2*LCS(x,y).  No substitutions."""
    if x.q != y.q:
        raise ValueError("strings must share an alphabet")
    return len(x) + len(y) - 2 * _lcs_length(x.symbols, y.symbols)
