"""Exhaustive isomorph-reduced graph corpora and reference oracles.

The corpora are built by orderly extension: every graph on n vertices
arises from some graph on n-1 vertices by attaching one new vertex to a
subset of the old ones, so extending every representative by every
subset and deduplicating on canonical form enumerates each isomorphism
class exactly once.

The oracles here deliberately share no caching or pruning with the
library; they restate the definitions as plainly as possible.
"""

from functools import cache
from itertools import combinations, permutations

from digitop.graph import Graph

LABELS = tuple("abcdefgh")


@cache
def all_graphs(max_vertices: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class, 1..max_vertices vertices."""
    if not 1 <= max_vertices <= len(LABELS):
        raise ValueError(f"max_vertices must be in 1..{len(LABELS)}")
    layer: list[Graph] = [Graph((LABELS[0],), ())]
    out = list(layer)
    for n in range(2, max_vertices + 1):
        new = LABELS[n - 1]
        seen: set[bytes] = set()
        grown: list[Graph] = []
        for base in layer:
            old = base.sorted_vertices()
            for k in range(n):
                for subset in combinations(old, k):
                    g = Graph(
                        base.vertices | {new},
                        list(base.edges) + [(new, v) for v in subset],
                    )
                    key = g.canonical_form()
                    if key not in seen:
                        seen.add(key)
                        grown.append(g)
        layer = grown
        out.extend(layer)
    return tuple(out)


@cache
def connected_graphs(max_vertices: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(max_vertices) if g.is_connected())


def brute_contractible(g: Graph) -> bool:
    """Reference reducibility test: try every deletion order outright.

    A graph reduces to one point when some permutation of its vertices
    can be deleted front to back with every deleted vertex simple at the
    time of its deletion (rim contractible, checked by this same brute
    recursion).
    """
    if g.vertex_count == 1:
        return True
    for order in permutations(g.sorted_vertices()):
        cur = g
        for v in order[:-1]:
            rim = cur.rim(v)
            if rim.vertex_count == 0 or not brute_contractible(rim):
                break
            cur = cur.remove((v,))
        else:
            return True
    return False


def has_induced_c4_through(g: Graph, x: str, y: str) -> bool:
    """Is edge (x, y) a chord-free side of some induced 4-cycle?"""
    for a in g.neighbors(x) - {y}:
        if g.has_edge(a, y):
            continue
        for b in g.neighbors(y) - {x, a}:
            if g.has_edge(b, x) or not g.has_edge(a, b):
                continue
            return True
    return False
