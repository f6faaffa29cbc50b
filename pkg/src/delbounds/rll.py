"""Run-length limited sources and bounds for their deletion codebooks.

A (d, infinity)-RLL string has isolated 1s and every 0-run (including
the first and last runs, which must be 0-runs) of length at least d.
Deleting one symbol from such a string lands either back in the RLL set
one symbol shorter, or in the companion set where exactly one 0-run is
one symbol short of d; that decomposition drives the closed-form bound.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bounds import BoundReport
from .counting import binomial, iota
from .qstrings import QaryString, all_strings, canonical_set, deletion_set, deletion_set_size


def _zero_run_profile(x: QaryString) -> tuple[list[int], list[int]] | None:
    """(zero-run lengths, one-run lengths) if runs alternate 0.. .0, else None."""
    if len(x) == 0 or x.symbols[0] != 0 or x.symbols[-1] != 0:
        return None
    zeros: list[int] = []
    ones: list[int] = []
    sym = x.symbols[0]
    length = 0
    for c in x.symbols:
        if c == sym:
            length += 1
        else:
            (zeros if sym == 0 else ones).append(length)
            sym, length = c, 1
    (zeros if sym == 0 else ones).append(length)
    return zeros, ones


def rll_set(n: int, d: int) -> tuple[QaryString, ...]:
    """All (d, infinity)-RLL strings of length n (empty for n < d)."""
    if d <= 1:
        raise ValueError(f"minimum 0-run length must exceed 1, got d={d}")
    out = []
    for x in all_strings(2, n):
        profile = _zero_run_profile(x)
        if profile is None:
            continue
        zeros, ones = profile
        if all(l == 1 for l in ones) and all(l >= d for l in zeros):
            out.append(x)
    return tuple(out)


def rll_deficient_set(m: int, d: int) -> tuple[QaryString, ...]:
    """Companion set: exactly one 0-run of length d-1, all other 0-runs >= d.

    The deficient run may sit anywhere, including as the first, last, or
    only run; 1-runs still have unit length and the ends are 0-runs.
    """
    if d <= 1:
        raise ValueError(f"minimum 0-run length must exceed 1, got d={d}")
    out = []
    for x in all_strings(2, m):
        profile = _zero_run_profile(x)
        if profile is None:
            continue
        zeros, ones = profile
        if not all(l == 1 for l in ones):
            continue
        if sum(1 for l in zeros if l == d - 1) == 1 and all(
            l >= d for l in zeros if l != d - 1
        ):
            out.append(x)
    return tuple(out)


def deletion_decomposition_check(n: int, d: int) -> bool:
    """Does D_1 of the length-n RLL set equal the shorter RLL set plus its companion?"""
    if not 1 < d <= n:
        raise ValueError(f"need 1 < d <= n, got d={d}, n={n}")
    derived = {y.symbols for x in rll_set(n, d) for y in deletion_set(x, 1)}
    expected = {x.symbols for x in rll_set(n - 1, d)} | {
        x.symbols for x in rll_deficient_set(n - 1, d)
    }
    return derived == expected


def rll_bound(n: int, d: int) -> Fraction:
    """Closed-form bound on single-deletion codebooks inside the RLL set.

    Counts both halves of the deletion decomposition by run profile
    (strings with 2r+1 runs contribute weight 1/(2r+1) each) and sums
    exactly.  Degenerate at n = d, where the companion set collapses to
    the single all-zeros string that the composition counts miss.
    """
    if not 1 < d <= n:
        raise ValueError(f"need 1 < d <= n, got d={d}, n={n}")
    r_bar = (n - 1 - d) // (d + 1)
    r_bar_prime = (n - d) // (d + 1)
    total = Fraction(0)
    for r in range(0, r_bar + 1):
        total += Fraction(binomial(n - 2 - r - (d - 1) * (r + 1), r), 2 * r + 1)
    for r in range(1, r_bar_prime + 1):
        total += Fraction((r + 1) * binomial(n - 2 - r - (d - 1) * (r + 1), r - 1), 2 * r + 1)
    return total


def decomposition_reciprocal_sum(n: int, d: int) -> Fraction:
    """Direct evaluation of sum(1/r(x)) over the deletion decomposition."""
    members = list(rll_set(n - 1, d)) + list(rll_deficient_set(n - 1, d))
    return sum((Fraction(1, x.runs) for x in members), Fraction(0))


def constrained_bounds(
    source: Sequence[QaryString],
    s: int,
    *,
    with_lp: bool = False,
    with_exact: bool = False,
    node_budget: int | None = None,
) -> BoundReport:
    """Counting lower bound and reciprocal-transversal upper bound for a source set.

    Optionally adds the fractional matching value (as its certified
    rational upper bound) and the exact matching number.
    """
    members = canonical_set(source)
    if not members:
        raise ValueError("source set must be nonempty")
    n = len(members[0])
    q = members[0].q
    entries: dict[str, Fraction] = {}
    denominator = binomial(n + s - 1, s) * iota(q, s, n)
    entries["counting_lower"] = Fraction(len(members), denominator)
    targets = canonical_set(v for x in members for v in deletion_set(x, s))
    entries["transversal_sum"] = sum(
        (Fraction(1, deletion_set_size(v, s)) for v in targets), Fraction(0)
    )
    if with_lp or with_exact:
        from .hypergraph import build_constrained
        from .lp import solve_fractional_matching

        hg = build_constrained(members, s)
        if with_lp:
            sol = solve_fractional_matching(hg)
            entries["fractional_matching"] = sol.certified_upper
        if with_exact:
            from .search import line_graph, max_independent_set

            kwargs = {} if node_budget is None else {"node_budget": node_budget}
            res = max_independent_set(line_graph(hg), **kwargs)
            if res.proven_optimal:
                entries["exact_matching"] = Fraction(res.size)
    report = BoundReport(q, s, n, entries)
    return report
