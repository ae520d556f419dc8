"""FF4-hypergraphs: Baber's diamond hypergraph, the 0-or-2 five-vertex law,
3-design verification, per-residue edge bounds, block-count formulas,
vertex-deletion counting and the min-sum-of-squares oracle.

An FF4-hypergraph is a 4-uniform hypergraph in which every 5 vertices span
0 or exactly 2 hyperedges; an FF4-design additionally has every triple in
exactly n/4 hyperedges.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .tournament import Tournament, is_diamond

PROVEN = "proven"
CONJECTURAL = "conjectural"


class HypFormatError(ValueError):
    """Raised on malformed .hyp input."""


@dataclass(frozen=True)
class Hypergraph4:
    n: int
    edges: frozenset  # frozenset of sorted 4-tuples

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 4 or len(set(e)) != 4 or tuple(sorted(e)) != e:
                raise ValueError(f"bad edge {e!r}")
            if e[0] < 0 or e[3] >= self.n:
                raise ValueError(f"edge {e!r} out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)


def hypergraph(n, edges) -> Hypergraph4:
    return Hypergraph4(n, frozenset(tuple(sorted(e)) for e in edges))


def baber(t: Tournament) -> Hypergraph4:
    """Hypergraph whose hyperedges are exactly the diamond 4-sets of t."""
    edges = [q for q in combinations(range(t.n), 4) if is_diamond(t, q)]
    return Hypergraph4(t.n, frozenset(edges))


def verify_ff4(h: Hypergraph4):
    """None if every 5-subset spans 0 or 2 edges, else (first bad 5-set, count).

    5-subsets are scanned in lexicographic order, so the returned
    counterexample is the least one.
    """
    if h.n < 5:
        raise ValueError("property defined for n >= 5")
    for five in combinations(range(h.n), 5):
        c = sum(1 for quad in combinations(five, 4) if quad in h.edges)
        if c not in (0, 2):
            return five, c
    return None


def triple_profile(h: Hypergraph4) -> dict:
    """Edge count through every 3-subset (zeros included)."""
    counts = {t: 0 for t in combinations(range(h.n), 3)}
    for e in h.edges:
        for t in combinations(e, 3):
            counts[t] += 1
    return counts


def is_ff4_design(h: Hypergraph4) -> bool:
    """FF4 plus every triple in exactly n/4 edges (requires n = 0 mod 4)."""
    if h.n % 4 != 0:
        raise ValueError(f"n={h.n} is not divisible by 4")
    # the 5-vertex condition is vacuous at n=4 (single-block design case)
    if h.n >= 5 and verify_ff4(h) is not None:
        return False
    lam = h.n // 4
    return all(c == lam for c in triple_profile(h).values())


def edge_count_bound(n: int):
    """(bound, status) for the maximum FF4 edge count in residue class n mod 4.

    The n = 0 and n = 3 bounds are proven; n = 1 and n = 2 are conjectural
    and must never be asserted, only reported.
    """
    if n < 5:
        raise ValueError("bound defined for n >= 5")
    r = n % 4
    if r == 0:
        return Fraction(n * n * (n - 1) * (n - 2), 96), PROVEN
    if r == 3:
        return Fraction(n * (n - 1) * (n - 3) * (n + 1), 96), PROVEN
    if r == 2:
        return Fraction(n * (n - 3) * (n + 2) * (n - 2), 96), CONJECTURAL
    return Fraction((n - 1) * (n - 2) * (n - 3) * (n + 3), 96), CONJECTURAL


def design_block_counts(n: int, k: int, t: int, lam: int, s: int) -> Fraction:
    """Blocks of a t-(n,k,lam) design through a fixed s-subset: lam*C(n-s,t-s)/C(k-s,t-s)."""
    if not 0 <= s <= t <= k <= n:
        raise ValueError(f"need 0 <= s <= t <= k <= n, got {(n, k, t, lam, s)}")
    if lam < 1:
        raise ValueError("lambda must be >= 1")
    return Fraction(lam * comb(n - s, t - s), comb(k - s, t - s))


def delete_vertices_count(h: Hypergraph4, drop):
    """(observed, predicted) edge counts after deleting the given vertices.

    observed counts edges avoiding the dropped set; predicted is the
    inclusion-exclusion value from the 3-(n,4,n/4) design parameters alone
    (None unless h is an FF4-design), so the two sides are independent.
    """
    drop = set(drop)
    if len(drop) > 3:
        raise ValueError("at most 3 vertices may be dropped")
    if any(not (0 <= v < h.n) for v in drop):
        raise ValueError("vertex out of range")
    observed = sum(1 for e in h.edges if not drop & set(e))
    predicted = None
    if h.n % 4 == 0 and is_ff4_design(h):
        lam = h.n // 4
        d = len(drop)
        predicted = sum(
            (-1) ** j * comb(d, j) * design_block_counts(h.n, 4, 3, lam, j)
            for j in range(d + 1)
        )
    return observed, predicted


def min_sum_squares(s: int, p: int):
    """Minimum of sum(x_i^2) over nondecreasing p-part compositions of s.

    With s = p*k + h (0 <= h < p) the minimum is h*(k+1)^2 + (p-h)*k^2,
    attained exactly by parts in {k, k+1}.
    """
    if s < 0 or p < 1:
        raise ValueError("need s >= 0 and p >= 1")
    k, h = divmod(s, p)
    minimum = h * (k + 1) ** 2 + (p - h) * k * k
    witness = (k,) * (p - h) + (k + 1,) * h
    return minimum, witness


def is_min_sum_squares_witness(parts, s: int, p: int) -> bool:
    """Equality characterization: p parts summing to s, each in {k, k+1}."""
    k = s // p
    return (
        len(parts) == p
        and sum(parts) == s
        and all(x in (k, k + 1) for x in parts)
    )


def parse_hyp(text: str) -> Hypergraph4:
    """Parse the .hyp format: 'n m' then m lines of 4 increasing indices."""
    lines = [ln for ln in text.splitlines()]
    if not lines:
        raise HypFormatError("empty input")
    head = lines[0].split()
    if len(head) != 2:
        raise HypFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise HypFormatError(f"bad header {lines[0]!r}") from None
    if len(lines) < m + 1:
        raise HypFormatError(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for i in range(m):
        parts = lines[i + 1].split()
        if len(parts) != 4:
            raise HypFormatError(f"edge line {i + 1} must have 4 indices")
        try:
            e = tuple(int(x) for x in parts)
        except ValueError:
            raise HypFormatError(f"bad index on edge line {i + 1}") from None
        if list(e) != sorted(set(e)):
            raise HypFormatError(f"edge line {i + 1} must be strictly increasing")
        edges.append(e)
    if len(set(edges)) != m:
        raise HypFormatError("duplicate edges")
    return Hypergraph4(n, frozenset(edges))


def format_hyp(h: Hypergraph4) -> str:
    out = [f"{h.n} {h.m}"]
    for e in sorted(h.edges):
        out.append(" ".join(map(str, e)))
    return "\n".join(out) + "\n"


def load_hyp(path) -> Hypergraph4:
    with open(path) as fh:
        return parse_hyp(fh.read())


def save_hyp(h: Hypergraph4, path):
    with open(path, "w") as fh:
        fh.write(format_hyp(h))
