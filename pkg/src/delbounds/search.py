"""Exact maximum-codebook search via the line graph.

Hyperedges of a deletion hypergraph intersect exactly when the source
strings are within edit distance 2s, so codebooks are independent sets
of the line graph and the optimal codebook size is its independence
number.  The solver is a branch-and-bound maximum-clique search on the
complement graph with greedy-coloring bounds, bitset adjacency (Python
ints), deterministic ordering, and an explicit node budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ResourceLimitError
from .hypergraph import DeletionHypergraph
from .qstrings import QaryString

DEFAULT_EDGE_CAP = 1 << 14
DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class LineGraph:
    labels: tuple[QaryString, ...]  # hyperedge source strings
    adj: tuple[int, ...]  # bitmask adjacency, vertex i excluded from adj[i]
    provenance: str

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)


@dataclass(frozen=True)
class MisResult:
    size: int
    witness: tuple[int, ...]
    proven_optimal: bool
    upper_bound: int
    nodes: int

    def witness_strings(self, graph: LineGraph) -> tuple[QaryString, ...]:
        return tuple(graph.labels[v] for v in self.witness)


def line_graph(hg: DeletionHypergraph, *, max_edges: int = DEFAULT_EDGE_CAP) -> LineGraph:
    """Intersection graph of the hyperedges, built from shared vertices."""
    m = hg.num_edges
    if m > max_edges:
        raise ResourceLimitError(f"{m} hyperedges exceeds line-graph cap {max_edges}")
    adj = [0] * m
    for cover in hg.covering_edges():
        mask = 0
        for j in cover:
            mask |= 1 << j
        for j in cover:
            adj[j] |= mask
    for j in range(m):
        adj[j] &= ~(1 << j)
    tag = "constrained" if hg.constrained else "full"
    return LineGraph(hg.edges, tuple(adj), f"{tag}_q{hg.q}_s{hg.s}_n{hg.n}")


def is_independent(graph: LineGraph, vertices: Sequence[int]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(graph.adj[v] & mask == 0 for v in vertices)


def greedy_independent_set(graph: LineGraph) -> tuple[int, tuple[int, ...]]:
    """Minimum-degree greedy independent set; at least n / (max degree + 1)."""
    remaining = (1 << graph.n) - 1
    chosen: list[int] = []
    while remaining:
        best_v, best_deg = -1, graph.n + 1
        r = remaining
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            deg = (graph.adj[v] & remaining).bit_count()
            if deg < best_deg:
                best_v, best_deg = v, deg
        chosen.append(best_v)
        remaining &= ~(graph.adj[best_v] | (1 << best_v))
    return len(chosen), tuple(sorted(chosen))


class _BudgetExhausted(Exception):
    pass


class _CliqueSearch:
    """Max clique on a bitset graph: coloring bounds with threshold recoloring."""

    def __init__(self, adj: Sequence[int], budget: int):
        self.adj = adj
        self.budget = budget
        self.nodes = 0
        self.best = 0
        self.best_set: list[int] = []
        self.stack: list[int] = []

    def color_order(self, cand: int, kt: int) -> list[tuple[int, int]]:
        """Greedy sequential coloring, recoloring vertices that land above kt.

        When a vertex v would need a color above the pruning threshold,
        try to find a low color class where v conflicts with a single
        vertex u that can itself move to another low class; that keeps v
        below the threshold.  Output is sorted by color (stable), so
        bounds are nondecreasing along the returned list.
        """
        tagged: list[tuple[int, int]] = []
        classes: list[int] = []
        uncolored = cand
        while uncolored:
            classes.append(0)
            color = len(classes)
            q = uncolored
            while q:
                v = (q & -q).bit_length() - 1
                q &= ~(self.adj[v] | (1 << v))
                uncolored &= ~(1 << v)
                c = color
                if c > kt > 1:
                    av = self.adj[v]
                    for c1 in range(kt - 1):
                        conflicts = classes[c1] & av
                        if conflicts and conflicts & (conflicts - 1) == 0:
                            au = self.adj[conflicts.bit_length() - 1]
                            for c2 in range(c1 + 1, kt):
                                if classes[c2] & au == 0:
                                    classes[c1] = (classes[c1] & ~conflicts) | (1 << v)
                                    classes[c2] |= conflicts
                                    c = c1 + 1
                                    break
                            if c <= kt:
                                break
                if c == color:
                    classes[color - 1] |= 1 << v
                tagged.append((c, v))
        tagged.sort(key=lambda t: t[0])
        return [(v, c) for c, v in tagged]

    def expand(self, cand: int) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted
        depth = len(self.stack)
        order = self.color_order(cand, max(self.best - depth, 0))
        for v, bound in reversed(order):
            if depth + bound <= self.best:
                return
            self.stack.append(v)
            nxt = cand & self.adj[v]
            if nxt:
                self.expand(nxt)
            elif len(self.stack) > self.best:
                self.best = len(self.stack)
                self.best_set = list(self.stack)
            self.stack.pop()
            cand &= ~(1 << v)


def max_independent_set(
    graph: LineGraph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seed: Sequence[int] = (),
    upper_bound_hint: int | None = None,
    engine: str = "auto",
) -> MisResult:
    """Branch-and-bound independence number with witness and optimality flag.

    `seed` vertices (verified independent) prime the incumbent;
    `upper_bound_hint` (e.g. a fractional-matching floor) tightens the
    reported bound when the budget runs out.  `engine` picks the compiled
    or pure-Python implementation of the identical search ("auto" uses
    the compiled kernel on graphs big enough to warrant the JIT cost).
    """
    n = graph.n
    if n == 0:
        return MisResult(0, (), True, 0, 0)
    full = (1 << n) - 1
    comp = tuple(full ^ graph.adj[v] ^ (1 << v) for v in range(n))

    # relabel by descending complement degree for better coloring
    order = sorted(range(n), key=lambda v: (-comp[v].bit_count(), v))
    pos = {v: k for k, v in enumerate(order)}
    radj = [0] * n
    for new_v, old_v in enumerate(order):
        mask = 0
        a = comp[old_v]
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            mask |= 1 << pos[u]
        radj[new_v] = mask

    g_size, g_wit = greedy_independent_set(graph)
    incumbents = [(g_size, g_wit)]
    if seed:
        if not is_independent(graph, seed):
            raise ValueError("seed is not an independent set")
        incumbents.append((len(seed), tuple(seed)))
    best0, best_wit = max(incumbents)
    best_set0 = [pos[v] for v in best_wit]

    from . import _mis_kernel

    use_kernel = engine == "numba" or (
        engine == "auto" and _mis_kernel.HAVE_NUMBA and n > 128
    )
    if engine not in ("auto", "python", "numba"):
        raise ValueError(f"unknown engine {engine!r}")
    if use_kernel:
        if not _mis_kernel.HAVE_NUMBA:
            raise RuntimeError("numba engine requested but numba is unavailable")
        best, best_set, nodes, proven, root_bound = _mis_kernel.solve_packed(
            radj, n, node_budget, best0, best_set0
        )
    else:
        search = _CliqueSearch(radj, node_budget)
        search.best, search.best_set = best0, best_set0
        root_order = search.color_order(full, best0)
        root_bound = max(c for _, c in root_order)
        proven = True
        try:
            search.expand(full)
        except _BudgetExhausted:
            proven = False
        best, best_set, nodes = search.best, search.best_set, search.nodes

    if upper_bound_hint is not None:
        root_bound = min(root_bound, upper_bound_hint)
    witness = tuple(sorted(order[v] for v in best_set))
    assert is_independent(graph, witness)
    upper = best if proven else max(root_bound, best)
    return MisResult(best, witness, proven, upper, nodes)
