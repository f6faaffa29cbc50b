"""Exact combinatorial counts used by the code-size bounds.

Everything here is big-integer arithmetic; nothing is ever rounded.
Out-of-range binomials evaluate to 0, which makes the empty-sum
conventions of the bound formulas fall out automatically.
"""

from __future__ import annotations

import math


def binomial(n: int, k: int) -> int:
    """C(n, k), with value 0 whenever k < 0, k > n, or n < 0."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def composition_count(n: int, k: int, d: int) -> int:
    """Number of (t_1,...,t_k) with sum n and every t_i >= d: C(n-k(d-1)-1, k-1)."""
    return binomial(n - k * (d - 1) - 1, k - 1)


def delta(r: int, s: int) -> int:
    """Three-case partial binomial sum from the Liron-Langberg deletion-set bound.

    sum_{i=0..s} C(r-s, i) when r > s >= 0, 1 when s = r >= 0, 0 otherwise.
    """
    if s < 0 or s > r:
        return 0
    if s == r:
        return 1
    return sum(binomial(r - s, i) for i in range(s + 1))


def iota(q: int, s: int, n: int) -> int:
    """|I_s(x)| for any x of length n-s: sum_{j=0..s} C(n, j) (q-1)^j."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n, got s={s}, n={n}")
    return sum(binomial(n, j) * (q - 1) ** j for j in range(s + 1))


def deletion_set_size_lower(r: int, s: int, n: int) -> int:
    """Liron-Langberg lower bound on |D_s(x)| for x of length n with r(x) = r.

    Valid for 2 < r <= n and s < n.  The base-plus-correction formula can
    degenerate to 0 once s >= r; deletion sets are nonempty, so the result
    is clamped to at least 1.  Callers must treat r <= 2 separately.
    """
    if not 2 < r <= n:
        raise ValueError(f"run count r={r} outside (2, n={n}]")
    if s >= n:
        raise ValueError(f"need s < n, got s={s}, n={n}")
    correction = sum(delta(r - 2, i) for i in range(s + r - n - 1, min(s - 2, r - 3) + 1))
    return max(1, delta(r, s) + correction)


def deletion_set_size_upper(r: int, s: int) -> int:
    """Levenshtein upper bound on |D_s(x)| for any x with r(x) = r: C(r+s-1, s)."""
    if r < 1 or s < 0:
        raise ValueError(f"need r >= 1 and s >= 0, got r={r}, s={s}")
    return binomial(r + s - 1, s)


def count_strings_with_runs(q: int, m: int, r: int) -> int:
    """Number of strings in F_q^m with exactly r runs: q (q-1)^(r-1) C(m-1, r-1)."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not 1 <= r <= m:
        raise ValueError(f"need 1 <= r <= m, got r={r}, m={m}")
    return q * (q - 1) ** (r - 1) * binomial(m - 1, r - 1)
