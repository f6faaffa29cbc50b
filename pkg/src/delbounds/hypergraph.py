"""Deletion hypergraphs and their matching/transversal machinery.

For alphabet size q, deletion count s, and length n, the hypergraph has
the length-(n-s) strings as vertices and one hyperedge per length-n
string y, covering exactly the vertices in D_s(y).  A matching is a
deletion-correcting codebook; a fractional transversal certifies an
upper bound on the codebook size.  Constrained variants restrict the
hyperedges to an arbitrary set of source strings.

Vertex and edge numbering is lexicographic, so exported artifacts are
stable across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .counting import iota
from .errors import ResourceLimitError
from .qstrings import QaryString, all_strings, canonical_set, deletion_set, deletion_set_size

DEFAULT_SIZE_CAP = 1 << 20


@dataclass
class DeletionHypergraph:
    q: int
    s: int
    n: int
    vertices: tuple[QaryString, ...]
    edges: tuple[QaryString, ...]
    incidence: tuple[tuple[int, ...], ...]  # per edge, sorted vertex indices
    constrained: bool = False
    _vertex_major: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def covering_edges(self) -> tuple[tuple[int, ...], ...]:
        """Vertex-major view: for each vertex, the sorted covering edge indices."""
        if self._vertex_major is None:
            lists: list[list[int]] = [[] for _ in self.vertices]
            for j, verts in enumerate(self.incidence):
                for i in verts:
                    lists[i].append(j)
            self._vertex_major = tuple(tuple(l) for l in lists)
        return self._vertex_major

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.covering_edges())


def build(q: int, s: int, n: int, *, max_size: int = DEFAULT_SIZE_CAP) -> DeletionHypergraph:
    """Full deletion hypergraph on all of F_q^n."""
    # s = n is allowed: the single vertex is the empty string and the
    # matching LP degenerates to one constraint (needed for n = 1 table rows)
    if not (q >= 2 and 1 <= s <= n):
        raise ValueError(f"need q >= 2 and 1 <= s <= n, got q={q}, s={s}, n={n}")
    if q**n > max_size:
        raise ResourceLimitError(f"{q}^{n} hyperedges exceeds cap {max_size}")
    vertices = tuple(all_strings(q, n - s))
    edges = tuple(all_strings(q, n))
    # vertex rank of a length-(n-s) string is its base-q value
    incidence = tuple(
        tuple(sorted(v.rank() for v in deletion_set(y, s))) for y in edges
    )
    return DeletionHypergraph(q, s, n, vertices, edges, incidence)


def build_constrained(
    source: Sequence[QaryString], s: int, *, max_size: int = DEFAULT_SIZE_CAP
) -> DeletionHypergraph:
    """Partial hypergraph whose hyperedges are the strings of `source` only."""
    if not source:
        raise ValueError("source set must be nonempty")
    edges = canonical_set(source)
    n = len(edges[0])
    q = edges[0].q
    if any(len(e) != n or e.q != q for e in edges):
        raise ValueError("source strings must share one length and alphabet")
    if s >= n:
        raise ValueError(f"need s < n, got s={s}, n={n}")
    if len(edges) > max_size:
        raise ResourceLimitError(f"{len(edges)} hyperedges exceeds cap {max_size}")
    dsets = [deletion_set(y, s) for y in edges]
    vertices = canonical_set(v for ds in dsets for v in ds)
    index = {v: i for i, v in enumerate(vertices)}
    incidence = tuple(tuple(sorted(index[v] for v in ds)) for ds in dsets)
    return DeletionHypergraph(q, s, n, vertices, edges, incidence, constrained=True)


def reciprocal_transversal(hg: DeletionHypergraph) -> list[Fraction]:
    """The fractional transversal giving vertex x weight 1/|D_s(x)|.

    Feasibility (every hyperedge collects total weight >= 1) is a
    consequence of deletion-set sizes being monotone under insertions;
    it is re-verified here rather than assumed.
    """
    if len(hg.vertices[0]) < hg.s:
        raise ValueError("vertices are shorter than the deletion count")
    weights = [Fraction(1, deletion_set_size(x, hg.s)) for x in hg.vertices]
    ok, violated = verify_transversal(hg, weights)
    assert ok, f"reciprocal transversal infeasible on edges {violated[:5]}"
    return weights


def weight(values: Iterable) -> Fraction | float:
    """Total weight of a matching or transversal vector."""
    return sum(values)


def _check_len(name: str, values: Sequence, expected: int) -> None:
    if len(values) != expected:
        raise ValueError(f"{name} has {len(values)} entries, expected {expected}")


def verify_transversal(
    hg: DeletionHypergraph, weights: Sequence, tol=0
) -> tuple[bool, list[int]]:
    """Check sum of w over D_s(y) >= 1 - tol for every hyperedge y.

    Exact when the weights are rationals.  Returns (ok, violated edge indices).
    """
    _check_len("weight vector", weights, hg.num_vertices)
    violated = [
        j
        for j, verts in enumerate(hg.incidence)
        if sum(weights[i] for i in verts) < 1 - tol
    ]
    return not violated, violated


def verify_matching(
    hg: DeletionHypergraph, values: Sequence, tol=0
) -> tuple[bool, list[int]]:
    """Check sum of z over edges covering x <= 1 + tol for every vertex x."""
    _check_len("matching vector", values, hg.num_edges)
    violated = [
        i
        for i, cover in enumerate(hg.covering_edges())
        if sum(values[j] for j in cover) > 1 + tol
    ]
    return not violated, violated


def is_regular(hg: DeletionHypergraph) -> bool:
    """Full deletion hypergraphs are regular: every vertex degree equals iota(q, s, n)."""
    expected = iota(hg.q, hg.s, hg.n)
    return all(d == expected for d in hg.degrees())


# ---------------------------------------------------------------------------
# Export formats
# ---------------------------------------------------------------------------


def _format_value(v) -> str:
    if isinstance(v, Rational):
        return str(int(v)) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return f"{v:.9g}"


def to_mps(hg: DeletionHypergraph, problem: str = "matching") -> str:
    """Serialize the matching or transversal LP in MPS format.

    Matching: maximize 1'z subject to (per vertex V{i}) sum of covering
    E{j} at most 1.  Transversal: minimize 1'w subject to (per edge E{j})
    sum of covered V{i} at least 1.  Uses the OBJSENSE extension.
    """
    if problem == "matching":
        sense = "MAX"
        rows = [f"V{i}" for i in range(hg.num_vertices)]
        row_type = "L"
        cols = [f"E{j}" for j in range(hg.num_edges)]
        col_rows = [[f"V{i}" for i in verts] for verts in hg.incidence]
    elif problem == "transversal":
        sense = "MIN"
        rows = [f"E{j}" for j in range(hg.num_edges)]
        row_type = "G"
        cols = [f"V{i}" for i in range(hg.num_vertices)]
        col_rows = [[f"E{j}" for j in cover] for cover in hg.covering_edges()]
    else:
        raise ValueError(f"unknown problem {problem!r}")

    tag = "S" if hg.constrained else f"N{hg.n}"
    lines = [f"NAME          DEL_Q{hg.q}_S{hg.s}_{tag}_{problem.upper()}"]
    lines.append("OBJSENSE")
    lines.append(f"    {sense}")
    lines.append("ROWS")
    lines.append(" N  OBJ")
    for r in rows:
        lines.append(f" {row_type}  {r}")
    lines.append("COLUMNS")
    for name, rlist in zip(cols, col_rows):
        lines.append(f"    {name}  OBJ  1")
        for k in range(0, len(rlist), 2):
            pair = rlist[k : k + 2]
            entry = "  ".join(f"{r}  1" for r in pair)
            lines.append(f"    {name}  {entry}")
    lines.append("RHS")
    for k in range(0, len(rows), 2):
        pair = rows[k : k + 2]
        entry = "  ".join(f"{r}  1" for r in pair)
        lines.append(f"    RHS  {entry}")
    lines.append("BOUNDS")
    lines.append("ENDATA")
    return "\n".join(lines) + "\n"


def incidence_json(hg: DeletionHypergraph) -> str:
    """JSON dump of the incidence structure.

    Schema: {"kind": "deletion_hypergraph", "q", "s", "n", "constrained",
    "vertices": [digit strings], "edges": [digit strings],
    "incidence": [[vertex indices of D_s(edge)] per edge]}.
    """
    payload = {
        "kind": "deletion_hypergraph",
        "q": hg.q,
        "s": hg.s,
        "n": hg.n,
        "constrained": hg.constrained,
        "vertices": [str(v) for v in hg.vertices],
        "edges": [str(e) for e in hg.edges],
        "incidence": [list(verts) for verts in hg.incidence],
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def solution_json(values: Sequence, *, kind: str) -> str:
    """Index -> value map for a matching or transversal vector."""
    payload = {
        "kind": kind,
        "values": {str(i): _format_value(v) for i, v in enumerate(values) if v},
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"
