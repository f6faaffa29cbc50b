"""Independent brute-force reference implementations used by the tests.

Everything here recomputes results from first principles (position
subsets, breadth-first search, direct solution enumeration) without
touching the package's own shortcuts, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import deque

from delbounds.qstrings import QaryString


def deletion_tuples(x: QaryString, s: int) -> set[tuple[int, ...]]:
    """All subsequences of length len(x)-s, by choosing kept positions."""
    keep = len(x) - s
    return {
        tuple(x.symbols[i] for i in combo)
        for combo in itertools.combinations(range(len(x)), keep)
    }


def _contains_subsequence(haystack: tuple[int, ...], needle: tuple[int, ...]) -> bool:
    pos = 0
    for c in haystack:
        if pos < len(needle) and c == needle[pos]:
            pos += 1
    return pos == len(needle)


def insertion_tuples(x: QaryString, s: int) -> set[tuple[int, ...]]:
    """All length-(len(x)+s) supersequences, by filtering the full cube."""
    n = len(x) + s
    return {
        tup
        for tup in itertools.product(range(x.q), repeat=n)
        if _contains_subsequence(tup, x.symbols)
    }


def edit_distance_bfs(x: QaryString, y: QaryString) -> int:
    """Shortest insert/delete path from x to y (breadth-first, small strings only)."""
    target = y.symbols
    limit = len(x) + len(y)
    seen = {x.symbols}
    frontier = deque([(x.symbols, 0)])
    while frontier:
        cur, dist = frontier.popleft()
        if cur == target:
            return dist
        if dist == limit:
            continue
        moves = []
        for i in range(len(cur)):
            moves.append(cur[:i] + cur[i + 1 :])
        # inserting beyond the target length cannot lie on a shortest path
        if len(cur) <= len(target) + 1:
            for i in range(len(cur) + 1):
                for c in range(x.q):
                    moves.append(cur[:i] + (c,) + cur[i:])
        for nxt in moves:
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, dist + 1))
    raise AssertionError("strings over one alphabet are always connected")


def composition_count_bruteforce(n: int, k: int, d: int) -> int:
    """Count solutions of t_1 + ... + t_k = n with all t_i >= d."""
    if k == 0:
        return 1 if n == 0 else 0
    count = 0
    for head in range(d, n + 1):
        count += composition_count_bruteforce(n - head, k - 1, d)
    return count
