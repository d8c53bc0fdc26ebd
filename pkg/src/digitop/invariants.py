"""Clique counts, Euler characteristic, and mod-2 homology of the clique complex.

These are computed directly from clique enumeration and GF(2) boundary
matrix ranks, with no reference to the deformation machinery, so they
serve as an independent check on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, DomainError
from .graph import Graph

DEFAULT_CLIQUE_BUDGET = 2_000_000


def _clique_lists(g: Graph, budget: int) -> list[list[tuple[int, ...]]]:
    """All cliques as index tuples, grouped by size, lexicographic within a size."""
    verts = g.sorted_vertices()
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    nbr = [0] * n
    for u, v in g.edges:
        iu, iv = index[u], index[v]
        nbr[iu] |= 1 << iv
        nbr[iv] |= 1 << iu

    by_size: list[list[tuple[int, ...]]] = []
    total = 0

    def grow(base: tuple[int, ...], cand: int) -> None:
        nonlocal total
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            cur = base + (i,)
            total += 1
            if total > budget:
                raise CapacityError(f"clique enumeration exceeded budget of {budget}")
            if len(cur) > len(by_size):
                by_size.append([])
            by_size[len(cur) - 1].append(cur)
            # candidates after i that are adjacent to everything in cur
            grow(cur, cand & nbr[i])

    grow((), (1 << n) - 1)
    return by_size


def clique_counts(g: Graph, *, budget: int = DEFAULT_CLIQUE_BUDGET) -> list[int]:
    """Number of cliques of each size, starting at single vertices."""
    return [len(level) for level in _clique_lists(g, budget)]


def euler_characteristic(g: Graph, *, budget: int = DEFAULT_CLIQUE_BUDGET) -> int:
    """Alternating sum of clique counts."""
    total = 0
    sign = 1
    for count in clique_counts(g, budget=budget):
        total += sign * count
        sign = -sign
    return total


def _boundary_rank(rows: dict[tuple[int, ...], int], cols: list[tuple[int, ...]]) -> int:
    """Rank over GF(2) of the boundary matrix with the given simplex columns.

    Each column is the XOR of its facet rows, held as a Python int
    bitmask and reduced against a pivot table keyed by leading bit.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for simplex in cols:
        col = 0
        for k in range(len(simplex)):
            facet = simplex[:k] + simplex[k + 1 :]
            col ^= 1 << rows[facet]
        while col:
            lead = col.bit_length() - 1
            other = pivots.get(lead)
            if other is None:
                pivots[lead] = col
                rank += 1
                break
            col ^= other
    return rank


def betti_numbers(g: Graph, *, budget: int = DEFAULT_CLIQUE_BUDGET) -> list[int]:
    """Mod-2 Betti numbers of the clique complex, trailing zeros trimmed."""
    levels = _clique_lists(g, budget)
    if not levels:
        return []
    counts = [len(level) for level in levels]
    ranks = [0]  # rank of the boundary map out of dimension k, k >= 1
    for k in range(1, len(levels)):
        rows = {s: i for i, s in enumerate(levels[k - 1])}
        ranks.append(_boundary_rank(rows, levels[k]))
    ranks.append(0)
    betti = [counts[k] - ranks[k] - ranks[k + 1] for k in range(len(levels))]
    while len(betti) > 1 and betti[-1] == 0:
        betti.pop()
    return betti


@dataclass(frozen=True)
class InvariantReport:
    clique_counts: tuple[int, ...]
    euler: int
    betti: tuple[int, ...]


def invariant_report(g: Graph, *, budget: int = DEFAULT_CLIQUE_BUDGET) -> InvariantReport:
    """Cliques, Euler characteristic, and Betti numbers, cross-checked.

    The Euler characteristic is computed both as the alternating clique
    sum and as the alternating Betti sum; a mismatch would mean a bug in
    one of the two pipelines, so it is treated as an internal error.
    """
    levels = _clique_lists(g, budget)
    counts = [len(level) for level in levels]
    euler = sum(c if k % 2 == 0 else -c for k, c in enumerate(counts))
    betti = betti_numbers(g, budget=budget)
    if sum(b if k % 2 == 0 else -b for k, b in enumerate(betti)) != euler:
        raise AssertionError("Euler characteristic disagrees between cliques and homology")
    return InvariantReport(tuple(counts), euler, tuple(betti))


def format_report(report: InvariantReport) -> str:
    def row(key: str, values) -> str:
        body = " ".join(str(x) for x in values)
        return f"{key}: {body}".rstrip()

    return "\n".join(
        [row("cliques", report.clique_counts), f"euler: {report.euler}", row("betti", report.betti)]
    ) + "\n"


def parse_report(text: str) -> InvariantReport:
    fields: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        fields[key.strip()] = rest.strip()
    try:
        counts = tuple(int(t) for t in fields["cliques"].split())
        euler = int(fields["euler"])
        betti = tuple(int(t) for t in fields["betti"].split())
    except (KeyError, ValueError) as exc:
        raise DomainError(f"bad invariant report: {exc}") from None
    return InvariantReport(counts, euler, betti)
