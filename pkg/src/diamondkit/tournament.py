"""Tournaments as row bitsets: diamond detection, counting and arc flips.

A tournament on n vertices (3 <= n <= 512) stores one bitmask per vertex;
bit j of row i is set iff i dominates j.  Vertices are dense 0-based ints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

MAX_N = 512

# in-subset out-degree multisets of the two diamond types are (1,1,1,3) and
# (0,2,2,2); both have sum of squares 12, the other two 4-tournaments give
# 14 (transitive) and 10 (strong non-diamond)
_DIAMOND_SQ = 12


class TrnFormatError(ValueError):
    """Raised on malformed .trn input; carries (line, column) when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Tournament:
    n: int
    rows: tuple  # rows[i] bitmask of vertices dominated by i

    def dom(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def out_degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j in range(self.n):
                if (row >> j) & 1:
                    a[i, j] = 1
        return a


@dataclass(frozen=True)
class ArcFlip:
    i: int
    j: int


def from_dominance(n, dom) -> Tournament:
    """Build a tournament from a callable dom(i, j) -> bool (no validation)."""
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if i != j and dom(i, j):
                r |= 1 << j
        rows.append(r)
    return Tournament(n, tuple(rows))


def from_arcs(n, arcs) -> Tournament:
    rows = [0] * n
    for i, j in arcs:
        rows[i] |= 1 << j
    return Tournament(n, tuple(rows))


def validate(t: Tournament):
    """Return None if all tournament invariants hold, else the first bad pair.

    The report is a tuple (i, j, reason); pairs are scanned in row-major
    order with i <= j, so the first violation is deterministic.
    """
    for i in range(t.n):
        if t.dom(i, i):
            return (i, i, "diagonal entry set")
        if t.rows[i] >> t.n:
            return (i, i, "bit set beyond vertex range")
        for j in range(i + 1, t.n):
            ij, ji = t.dom(i, j), t.dom(j, i)
            if ij and ji:
                return (i, j, "both orientations present")
            if not ij and not ji:
                return (i, j, "missing orientation")
    return None


def reverse(t: Tournament) -> Tournament:
    full = (1 << t.n) - 1
    return Tournament(t.n, tuple((full ^ r) & ~(1 << i) for i, r in enumerate(t.rows)))


def _subset_degree_squares(rows, a, b, c, d):
    mask = (1 << a) | (1 << b) | (1 << c) | (1 << d)
    s = 0
    for v in (a, b, c, d):
        k = (rows[v] & mask).bit_count()
        s += k * k
    return s


def is_diamond(t: Tournament, quad) -> bool:
    """True iff the 4 vertices induce a 3-cycle dominated by / dominating a vertex.

    Decided from the in-subset score multiset: the two diamond 4-tournaments
    are exactly those with out-degrees {3,1,1,1} or {2,2,2,0} (a determinant
    oracle backs this up in the tests).
    """
    quad = tuple(quad)
    if len(set(quad)) != 4 or any(not (0 <= v < t.n) for v in quad):
        raise ValueError(f"need 4 distinct vertices below n={t.n}, got {quad!r}")
    return _subset_degree_squares(t.rows, *quad) == _DIAMOND_SQ


@lru_cache(maxsize=64)
def _comb4(n):
    return np.array(list(combinations(range(n), 4)), dtype=np.int64)


def count_diamonds_naive(t: Tournament) -> int:
    """Exact diamond count by scanning all C(n,4) vertex subsets."""
    if t.n < 4:
        return 0
    a = t.adjacency()
    c = _comb4(t.n)
    score = np.zeros(len(c), dtype=np.int64)
    for i in range(4):
        deg = np.zeros(len(c), dtype=np.int64)
        for j in range(4):
            if j != i:
                deg += a[c[:, i], c[:, j]]
        score += deg * deg
    return int(np.count_nonzero(score == _DIAMOND_SQ))


def flip_arc(t: Tournament, i: int, j: int) -> Tournament:
    """Reverse the arc i -> j (precondition: i dominates j)."""
    if not t.dom(i, j):
        raise ValueError(f"arc ({i},{j}) not present")
    rows = list(t.rows)
    rows[i] &= ~(1 << j)
    rows[j] |= 1 << i
    return Tournament(t.n, tuple(rows))


def diamond_delta_on_flip(t: Tournament, flip: ArcFlip) -> int:
    """Change in diamond count if arc (i,j) is reversed.

    Only the C(n-2,2) 4-sets containing both endpoints can change.
    """
    i, j = flip.i, flip.j
    if not t.dom(i, j):
        raise ValueError(f"arc ({i},{j}) not present")
    flipped = flip_arc(t, i, j)
    others = [v for v in range(t.n) if v != i and v != j]
    delta = 0
    for k, l in combinations(others, 2):
        delta += (_subset_degree_squares(flipped.rows, i, j, k, l) == _DIAMOND_SQ)
        delta -= (_subset_degree_squares(t.rows, i, j, k, l) == _DIAMOND_SQ)
    return delta


def random_tournament(n: int, seed: int) -> Tournament:
    """Uniformly random tournament, one fair bit per unordered pair.

    Deterministic: bits come from random.Random(seed) (Mersenne Twister),
    consumed pair-by-pair in row-major upper-triangle order.
    """
    if not 3 <= n <= MAX_N:
        raise ValueError(f"n must be in [3, {MAX_N}], got {n}")
    rng = random.Random(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.getrandbits(1):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament(n, tuple(rows))


def parse_trn(text: str) -> Tournament:
    """Parse the .trn format: first line n, then n rows of {0,1} characters."""
    lines = text.splitlines()
    if not lines:
        raise TrnFormatError("empty input", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise TrnFormatError(f"bad vertex count {lines[0]!r}", line=1) from None
    if not 3 <= n <= MAX_N:
        raise TrnFormatError(f"n={n} out of range [3, {MAX_N}]", line=1)
    if len(lines) < n + 1:
        raise TrnFormatError(f"expected {n} matrix rows, got {len(lines) - 1}", line=len(lines))
    rows = []
    for i in range(n):
        line = lines[i + 1].strip()
        if len(line) != n:
            raise TrnFormatError(f"row {i} has length {len(line)}, expected {n}", line=i + 2)
        r = 0
        for j, ch in enumerate(line):
            if ch not in "01":
                raise TrnFormatError(f"bad character {ch!r}", line=i + 2, column=j + 1)
            if ch == "1":
                r |= 1 << j
        rows.append(r)
    t = Tournament(n, tuple(rows))
    bad = validate(t)
    if bad is not None:
        i, j, reason = bad
        raise TrnFormatError(f"not a tournament at ({i},{j}): {reason}", line=i + 2, column=j + 1)
    return t


def format_trn(t: Tournament) -> str:
    out = [str(t.n)]
    for i in range(t.n):
        out.append("".join("1" if t.dom(i, j) else "0" for j in range(t.n)))
    return "\n".join(out) + "\n"


def load_trn(path) -> Tournament:
    with open(path) as fh:
        return parse_trn(fh.read())


def save_trn(t: Tournament, path):
    with open(path, "w") as fh:
        fh.write(format_trn(t))
