"""Known single-deletion code constructions and codebook verification.

Varshamov-Tenengolts codes VT_a(n) partition the binary strings by the
weighted checksum sum(i * x_i) mod (n+1); every residue class corrects
one deletion.  Tenengolts' q-ary family cuts F_q^n by a digit-sum
congruence mod q together with a VT-style checksum on the binary
ascent-indicator sequence, giving a two-parameter family of
single-deletion codes.  Constructions are never trusted: anything
returned from here has passed `verify_codebook`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConstructionError
from .qstrings import QaryString, _lcs_length, all_strings, canonical_set, deletion_set


@dataclass(frozen=True)
class Codebook:
    q: int
    n: int
    s: int
    members: tuple[QaryString, ...]
    provenance: str

    @property
    def size(self) -> int:
        return len(self.members)


def _checked(q: int, n: int, s: int, members, provenance: str, verify: bool) -> Codebook:
    book = Codebook(q, n, s, canonical_set(members), provenance)
    if verify:
        ok, pair = verify_codebook(book, s)
        if not ok:
            raise ConstructionError(f"{provenance}: pair {pair} violates the distance condition")
    return book


def vt_code(n: int, a: int, *, verify: bool = False) -> Codebook:
    """VT_a(n): binary strings with sum(i * x_i) = a (mod n+1)."""
    if n < 1 or not 0 <= a <= n:
        raise ValueError(f"need n >= 1 and 0 <= a <= n, got n={n}, a={a}")
    members = [
        x
        for x in all_strings(2, n)
        if sum(i * c for i, c in enumerate(x.symbols, start=1)) % (n + 1) == a
    ]
    return _checked(2, n, 1, members, f"vt(a={a})", verify)


def _ascent_checksum(symbols: tuple[int, ...]) -> int:
    # sum of (i-1) over positions i >= 2 where the string does not descend
    return sum(i for i in range(1, len(symbols)) if symbols[i] >= symbols[i - 1])


def tenengolts_code(q: int, n: int, beta: int, gamma: int, *, verify: bool = True) -> Codebook:
    """Tenengolts' q-ary single-deletion code with residues (beta mod q, gamma mod n)."""
    if q < 2 or n < 1:
        raise ValueError(f"need q >= 2 and n >= 1, got q={q}, n={n}")
    if not (0 <= beta < q and 0 <= gamma < n):
        raise ValueError(f"residues out of range: beta={beta}, gamma={gamma}")
    members = [
        x
        for x in all_strings(q, n)
        if sum(x.symbols) % q == beta and _ascent_checksum(x.symbols) % n == gamma
    ]
    return _checked(q, n, 1, members, f"tenengolts(beta={beta},gamma={gamma})", verify)


def verify_codebook(book: Codebook, s: int) -> tuple[bool, tuple[QaryString, QaryString] | None]:
    """Check pairwise edit distance > 2s; returns the first violating pair if any."""
    members = book.members
    if any(len(x) != book.n or x.q != book.q for x in members):
        raise ValueError("codebook members must share the declared length and alphabet")
    threshold = len(members[0]) - s if members else 0
    for x, y in itertools.combinations(members, 2):
        # d(x, y) <= 2s iff LCS(x, y) >= n - s for equal-length strings
        if _lcs_length(x.symbols, y.symbols) >= threshold:
            return False, (x, y)
    return True, None


def deletion_sets_disjoint(members: Sequence[QaryString], s: int) -> bool:
    """Direct route for small instances: the D_s balls must not overlap."""
    seen: set[tuple[int, ...]] = set()
    for x in members:
        ball = {y.symbols for y in deletion_set(x, s)}
        if seen & ball:
            return False
        seen |= ball
    return True


def tenengolts_family_sizes(q: int, n: int) -> dict[tuple[int, int], int]:
    """Class sizes of the whole (beta, gamma) family, by one pass over F_q^n."""
    counts: Counter[tuple[int, int]] = Counter()
    for tup in itertools.product(range(q), repeat=n):
        counts[(sum(tup) % q, _ascent_checksum(tup) % n)] += 1
    return dict(counts)


def best_known_size(q: int, n: int) -> tuple[int, str]:
    """Size of the best known single-deletion code: VT_0(n) for binary,
    otherwise the largest Tenengolts class (smallest residues win ties)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got n={n}")
    if q == 2:
        return vt_code(n, 0).size, "vt(a=0)"
    sizes = tenengolts_family_sizes(q, n)
    best = max(sizes.values())
    beta, gamma = min(k for k, v in sizes.items() if v == best)
    return best, f"tenengolts(beta={beta},gamma={gamma})"


def to_text(book: Codebook) -> str:
    return "".join(f"{x}\n" for x in book.members)


def from_text(text: str, q: int, *, s: int = 1, provenance: str = "user") -> Codebook:
    """Parse newline-delimited digit strings (q <= 10)."""
    if q > 10:
        raise ValueError("text interchange only supports digit alphabets (q <= 10)")
    members = [
        QaryString.from_digits(line.strip(), q)
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not members:
        raise ValueError("no codewords found")
    n = len(members[0])
    if any(len(x) != n for x in members):
        raise ValueError("codewords must share one length")
    return Codebook(q, n, s, canonical_set(members), provenance)
