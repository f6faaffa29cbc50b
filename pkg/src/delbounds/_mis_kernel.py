"""Compiled branch-and-bound kernel for the independence-number search.

Same algorithm as the pure-Python path in `search`: iterative clique
expansion on the complement graph with greedy sequential coloring plus
threshold recoloring (move a conflicting vertex's single low-color
neighbor out of the way so the vertex drops below the pruning
threshold), bitsets packed into uint64 words.  Both paths explore the
same tree; this one just runs about two orders of magnitude faster.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a soft dependency
    HAVE_NUMBA = False

if HAVE_NUMBA:
    _M1 = np.uint64(0x5555555555555555)
    _M2 = np.uint64(0x3333333333333333)
    _M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    _H01 = np.uint64(0x0101010101010101)
    _ONE = np.uint64(1)
    _ZERO = np.uint64(0)

    @njit(cache=True)
    def _popcount(x):
        x = x - ((x >> _ONE) & _M1)
        x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
        x = (x + (x >> np.uint64(4))) & _M4
        return np.int64((x * _H01) >> np.uint64(56))

    @njit(cache=True)
    def _color_sort(p_row, adj, order_row, bound_row, scratch, words, kt):
        """Greedy coloring of the candidate set with threshold recoloring.

        Fills order_row/bound_row sorted by color ascending, returns the
        number of vertices.  scratch must hold (n + 3) * words uint64.
        """
        n_classes = 0
        unc = scratch[0]
        q = scratch[1]
        classes = scratch[3:]
        for w in range(words):
            unc[w] = p_row[w]
        k = 0
        while True:
            empty = True
            for w in range(words):
                if unc[w] != _ZERO:
                    empty = False
                    break
            if empty:
                break
            n_classes += 1
            cm = classes[n_classes - 1]
            for w in range(words):
                cm[w] = _ZERO
                q[w] = unc[w]
            while True:
                wv = -1
                for w in range(words):
                    if q[w] != _ZERO:
                        wv = w
                        break
                if wv < 0:
                    break
                x = q[wv]
                lsb = x & (~x + _ONE)
                v = (wv << 6) + _popcount(lsb - _ONE)
                q[wv] &= ~lsb
                for w in range(words):
                    q[w] &= ~adj[v, w]
                unc[v >> 6] &= ~(_ONE << np.uint64(v & 63))

                color = n_classes
                if color > kt and kt > 1:
                    # single low-color conflict u that can move to a free class
                    for c1 in range(kt - 1):
                        cnt = 0
                        uw = 0
                        ub = _ZERO
                        for w in range(words):
                            val = classes[c1][w] & adj[v, w]
                            if val != _ZERO:
                                cnt += _popcount(val)
                                if cnt > 1:
                                    break
                                uw = w
                                ub = val
                        if cnt != 1:
                            continue
                        u = (uw << 6) + _popcount((ub & (~ub + _ONE)) - _ONE)
                        for c2 in range(c1 + 1, kt):
                            free = True
                            for w in range(words):
                                if classes[c2][w] & adj[u, w] != _ZERO:
                                    free = False
                                    break
                            if free:
                                classes[c1][uw] &= ~ub
                                classes[c2][uw] |= ub
                                classes[c1][v >> 6] |= _ONE << np.uint64(v & 63)
                                color = c1 + 1
                                break
                        if color <= kt:
                            break
                if color == n_classes:
                    cm[v >> 6] |= _ONE << np.uint64(v & 63)
                order_row[k] = v
                bound_row[k] = color
                k += 1
        # stable counting sort by color
        if k > 0:
            counts = np.zeros(n_classes + 2, np.int32)
            for i in range(k):
                counts[bound_row[i]] += 1
            start = np.zeros(n_classes + 2, np.int32)
            for c in range(1, n_classes + 1):
                start[c] = start[c - 1] + counts[c - 1]
            tmp_v = order_row[:k].copy()
            tmp_b = bound_row[:k].copy()
            for i in range(k):
                c = tmp_b[i]
                pos = start[c]
                start[c] = pos + 1
                order_row[pos] = tmp_v[i]
                bound_row[pos] = c
        return k

    @njit(cache=True)
    def mis_kernel(adj, n, words, budget, best0, best_set0):
        """Returns (best, best_set, node_count, proven, root_bound)."""
        maxd = n + 2
        p = np.zeros((maxd, words), np.uint64)
        order = np.zeros((maxd, n), np.int32)
        bounds = np.zeros((maxd, n), np.int32)
        ptr = np.full(maxd, -1, np.int64)
        stack = np.zeros(maxd, np.int32)
        best_set = np.zeros(n, np.int32)
        scratch = np.zeros((n + 3, words), np.uint64)

        best = best0
        for i in range(best0):
            best_set[i] = best_set0[i]

        for v in range(n):
            p[0, v >> 6] |= _ONE << np.uint64(v & 63)
        k = _color_sort(p[0], adj, order[0], bounds[0], scratch, words, best)
        root_bound = bounds[0, k - 1] if k > 0 else 0
        ptr[0] = k - 1
        nodes = 1
        proven = True
        depth = 0

        while depth >= 0:
            if nodes > budget:
                proven = False
                break
            i = ptr[depth]
            if i < 0:
                depth -= 1
                continue
            v = order[depth, i]
            if depth + bounds[depth, i] <= best:
                ptr[depth] = -1
                depth -= 1
                continue
            ptr[depth] = i - 1
            stack[depth] = v
            nonzero = False
            for w in range(words):
                val = p[depth, w] & adj[v, w]
                p[depth + 1, w] = val
                if val != _ZERO:
                    nonzero = True
            p[depth, v >> 6] &= ~(_ONE << np.uint64(v & 63))
            if not nonzero:
                if depth + 1 > best:
                    best = depth + 1
                    for t in range(best):
                        best_set[t] = stack[t]
            else:
                nodes += 1
                kt = best - depth - 1
                if kt < 0:
                    kt = 0
                k = _color_sort(
                    p[depth + 1], adj, order[depth + 1], bounds[depth + 1], scratch, words, kt
                )
                ptr[depth + 1] = k - 1
                depth += 1

        return best, best_set[:best].copy(), nodes, proven, root_bound


def solve_packed(adjacency_masks, n, budget, best0, best_set0):
    """Adapt Python int bitmasks to the uint64-word kernel."""
    words = max(1, (n + 63) >> 6)
    adj = np.zeros((n, words), np.uint64)
    for v, mask in enumerate(adjacency_masks):
        m = mask
        w = 0
        while m:
            adj[v, w] = np.uint64(m & 0xFFFFFFFFFFFFFFFF)
            m >>= 64
            w += 1
    seed = np.asarray(list(best_set0), dtype=np.int32)
    best, best_set, nodes, proven, root_bound = mis_kernel(
        adj, n, words, budget, best0, seed
    )
    return int(best), [int(v) for v in best_set], int(nodes), bool(proven), int(root_bound)
