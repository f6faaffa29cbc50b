"""Upper bounds on the size of s-deletion-correcting codes.

All bounds except the asymptotic rate function are exact rationals
(`fractions.Fraction`); flooring happens only at reporting time.
The rate-function bound is a continuous optimization and is the one
place floating point is used (documented accuracy about 1e-5).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .counting import binomial, count_strings_with_runs, delta
from .errors import ResourceLimitError
from .qstrings import all_strings, deletion_set_size

DEFAULT_ENUM_CAP = 1 << 20


@dataclass(frozen=True)
class BoundReport:
    """Named exact bound values for one (q, s, n) instance."""

    q: int
    s: int
    n: int
    entries: dict[str, Fraction] = field(default_factory=dict)

    def floored(self) -> dict[str, int]:
        return {name: math.floor(value) for name, value in self.entries.items()}


@dataclass(frozen=True)
class RateCurve:
    """Upper bound on the asymptotic rate function sampled on a grid of deletion fractions."""

    q: int
    points: tuple[tuple[float, float], ...]


def single_deletion_bound(q: int, n: int) -> Fraction:
    """Closed-form bound for single deletions: (q^n - q) / ((q-1)(n-1))."""
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if n < 2:
        raise ValueError(f"closed-form single-deletion bound needs n >= 2, got {n}")
    return Fraction(q**n - q, (q - 1) * (n - 1))


def transversal_sum_bound(
    q: int, s: int, n: int, *, max_strings: int = DEFAULT_ENUM_CAP
) -> Fraction:
    """Sum of 1/|D_s(x)| over all x of length n-s, computed by enumeration.

    This is the weight of the fractional transversal that assigns each
    length-(n-s) string the reciprocal of its own s-deletion-set size.
    """
    if not (q >= 2 and 1 <= s < n):
        raise ValueError(f"need q >= 2 and 1 <= s < n, got q={q}, s={s}, n={n}")
    if q ** (n - s) > max_strings:
        raise ResourceLimitError(
            f"enumerating {q}^{n - s} strings exceeds cap {max_strings}"
        )
    total = Fraction(0)
    for x in all_strings(q, n - s):
        total += Fraction(1, deletion_set_size(x, s))
    return total


def _run_class_denominator(r: int, s: int, m: int) -> int:
    """Lower bound on |D_s(x)| for strings of length m with r runs.

    Uses the Liron-Langberg bound (base term plus boundary correction);
    for r <= 2, where that bound is not available, falls back to what the
    delta term still guarantees (|D_1| = r for r <= 2, and at least 1).
    """
    correction = sum(delta(r - 2, i) for i in range(s + r - m - 1, min(s - 2, r - 3) + 1))
    return max(1, delta(r, s) + correction)


def multi_deletion_bound(q: int, s: int, n: int) -> Fraction:
    """Explicit bound for s deletions built from run-count statistics.

    Groups length-(n-s) strings by run count and divides each class by a
    proven lower bound on its deletion-set sizes.  For s = 1 this equals
    the closed-form single-deletion bound exactly.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not n > 2 * s >= 2:
        raise ValueError(f"need n > 2s >= 2, got q={q}, s={s}, n={n}")
    m = n - s
    total = Fraction(0)
    for r in range(1, m + 1):
        total += Fraction(count_strings_with_runs(q, m, r), _run_class_denominator(r, s, m))
    return total


def transversal_sum_lower(q: int, s: int, n: int) -> Fraction:
    """Lower bound on the reciprocal-weight transversal sum (and so on the bound above).

    (q^n - q * sum_{r<s} (q-1)^r C(n-1, r)) / ((q-1)^s C(n-1, s)).
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not n > 2 * s:
        raise ValueError(f"need n > 2s, got s={s}, n={n}")
    head = q * sum((q - 1) ** r * binomial(n - 1, r) for r in range(s))
    return Fraction(q**n - head, (q - 1) ** s * binomial(n - 1, s))


def levenshtein_bound(q: int, s: int, n: int) -> tuple[Fraction, int]:
    """Levenshtein's run-threshold bound, minimized over the threshold r.

    Returns (value, argmin r).  The threshold sweep starts at r = 1
    (matching how the bound is used in published tables); r = s - 1 is
    used only when no larger threshold is admissible.
    """
    if not (q >= 2 and 1 <= s <= n):
        raise ValueError(f"need q >= 2 and 1 <= s <= n, got q={q}, s={s}, n={n}")

    def value(r: int) -> Fraction:
        denom = sum(binomial(r - s + 1, i) for i in range(s + 1))
        tail = q * sum(binomial(n - 1, i) * (q - 1) ** i for i in range(r))
        return Fraction(q ** (n - s), denom) + tail

    lo = max(1, s - 1)
    candidates = range(lo, n) if lo <= n - 1 else [s - 1]
    best_r = min(candidates, key=lambda r: (value(r), r))
    return value(best_r), best_r


def levenshtein92_bound(q: int, n: int) -> Fraction:
    """Levenshtein's 1992 single-deletion bound: (q^(n-1) + (n-2) q^(n-2) + q) / n."""
    if not (q >= 2 and n >= 2):
        raise ValueError(f"need q >= 2 and n >= 2, got q={q}, n={n}")
    return Fraction(q ** (n - 1) + (n - 2) * q ** (n - 2) + q, n)


def trivial_bound(q: int, s: int, n: int) -> int:
    """q^(n-s): no codebook can exceed the number of channel outputs."""
    if not (q >= 2 and 0 <= s <= n):
        raise ValueError(f"need q >= 2 and 0 <= s <= n, got q={q}, s={s}, n={n}")
    return q ** (n - s)


# ---------------------------------------------------------------------------
# Asymptotic rate function
# ---------------------------------------------------------------------------


def _binary_entropy(x: np.ndarray) -> np.ndarray:
    x = np.clip(x, 0.0, 1.0)
    out = np.zeros_like(x)
    inner = (x > 0) & (x < 1)
    xi = x[inner]
    out[inner] = -xi * np.log2(xi) - (1 - xi) * np.log2(1 - xi)
    return out


def _q_entropy(x: np.ndarray, q: int) -> np.ndarray:
    logq = math.log2(q)
    x = np.clip(x, 0.0, 1.0)
    out = np.zeros_like(x)
    inner = (x > 0) & (x < 1)
    xi = x[inner]
    out[inner] = (-xi * np.log2(xi) - (1 - xi) * np.log2(1 - xi)) / logq + xi * (
        math.log2(q - 1) / logq
    )
    edge = x == 1.0
    out[edge] = math.log2(q - 1) / logq
    return out


def _gap_entropy_max(rho: np.ndarray, tau: float) -> np.ndarray:
    """max over mu in [max(2*tau+rho-1, 0), min(tau, rho)] of (rho-mu) h(min(mu/(rho-mu), 1/2)).

    The objective is the exponent of the boundary-correction term in the
    deletion-set size bound; it is unimodal in mu, so a grid scan with two
    zoom rounds is reliable.
    """
    lo = np.maximum(2 * tau + rho - 1.0, 0.0)
    hi = np.minimum(tau, rho)
    lo = np.minimum(lo, hi)

    def scan(lo_v: np.ndarray, hi_v: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
        mu = np.linspace(lo_v, hi_v, k, axis=-1)
        gap = rho[..., None] - mu
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(gap > 0, mu / np.where(gap > 0, gap, 1.0), 1.0)
        vals = gap * _binary_entropy(np.minimum(ratio, 0.5))
        vals = np.where(gap >= 0, vals, 0.0)
        idx = np.argmax(vals, axis=-1)
        return np.take_along_axis(vals, idx[..., None], axis=-1)[..., 0], np.take_along_axis(
            mu, idx[..., None], axis=-1
        )[..., 0]

    best, mu_star = scan(lo, hi, 257)
    width = (hi - lo) / 256
    for _ in range(2):
        w_lo = np.maximum(mu_star - width, lo)
        w_hi = np.minimum(mu_star + width, hi)
        cand, mu_star = scan(w_lo, w_hi, 65)
        best = np.maximum(best, cand)
        width = (w_hi - w_lo) / 64
    return best


def _rate_objective(rho: np.ndarray, tau: float, q: int) -> np.ndarray:
    span = 1.0 - tau
    numerator = span * _q_entropy(np.clip(rho / span, 0.0, 1.0), q)
    denominator = _gap_entropy_max(rho, tau) / math.log2(q)
    return numerator - denominator


def rate_bound(q: int, tau: float, *, coarse_step: float = 1e-3) -> float:
    """Upper bound on the asymptotic rate when a fraction tau of symbols is deleted.

    Exactly 1 - tau for tau >= 1/2; otherwise a nested grid search
    (coarse step 1e-3, zoomed to about 1e-6 around the incumbent) over the
    exponent expression.  Results are accurate to about 1e-5.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be >= 2, got {q}")
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"deletion fraction must lie in [0, 1], got {tau}")
    if tau >= 0.5:
        return 1.0 - tau

    span = 1.0 - tau
    k = max(2, int(math.ceil(span / coarse_step)) + 1)
    rho = np.linspace(0.0, span, k)
    vals = _rate_objective(rho, tau, q)
    best_idx = int(np.argmax(vals))
    best_rho = float(rho[best_idx])
    best = float(vals[best_idx])

    width = span / (k - 1)
    while width > 1e-6:
        lo = max(0.0, best_rho - width)
        hi = min(span, best_rho + width)
        rho = np.linspace(lo, hi, 81)
        vals = _rate_objective(rho, tau, q)
        idx = int(np.argmax(vals))
        if vals[idx] > best:
            best = float(vals[idx])
            best_rho = float(rho[idx])
        width = (hi - lo) / 80
    return best


def rate_curve(q: int, grid: Sequence[float]) -> RateCurve:
    """Evaluate the rate bound on a sorted grid of deletion fractions."""
    taus = list(grid)
    if any(b <= a for a, b in zip(taus, taus[1:])):
        raise ValueError("grid must be strictly increasing")
    if taus and not (0.0 <= taus[0] and taus[-1] <= 1.0):
        raise ValueError("grid must lie within [0, 1]")
    return RateCurve(q, tuple((t, rate_bound(q, t)) for t in taus))


def standard_bounds(
    q: int, s: int, n: int, *, max_strings: int = DEFAULT_ENUM_CAP
) -> BoundReport:
    """Collect every applicable exact bound for one (q, s, n) instance."""
    entries: dict[str, Fraction] = {}
    lev, _ = levenshtein_bound(q, s, n)
    entries["levenshtein"] = lev
    entries["trivial"] = Fraction(trivial_bound(q, s, n))
    if s == 1 and n >= 2:
        entries["closed_form"] = single_deletion_bound(q, n)
        entries["levenshtein92"] = levenshtein92_bound(q, n)
    if n > 2 * s >= 2:
        entries["multi_deletion"] = multi_deletion_bound(q, s, n)
        entries["transversal_sum_lower"] = transversal_sum_lower(q, s, n)
    if q ** (n - s) <= max_strings:
        entries["transversal_sum"] = transversal_sum_bound(q, s, n, max_strings=max_strings)
    return BoundReport(q, s, n, entries)
