"""Contractibility and simple points.

A point is simple when its rim (the induced subgraph on its neighbors)
is contractible; an edge is simple when the joint rim of its endpoints
is contractible.  A graph is contractible when some sequence of simple
point deletions reduces it to a single vertex.  The decision procedure
is a depth-first search over deletion orders: the smallest-labeled
simple point is tried first, and on failure the search backtracks over
every other simple point, so a negative answer is exhaustive, not an
artifact of greedy ordering.

Verdicts are memoized process-wide, keyed by canonical form.
Contractibility is isomorphism-invariant and the table is append-only,
so sharing it across queries is sound; it is what makes repeated
negative searches over large families affordable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError, DomainError
from .graph import Graph

SIZE_CAP = 25

# canonical form -> contractible?  Shared across queries.
_VERDICTS: dict[bytes, bool] = {}


def clear_caches() -> None:
    _VERDICTS.clear()


def _check_cap(g: Graph, size_cap: int) -> None:
    if g.vertex_count > size_cap:
        raise CapacityError(
            f"graph has {g.vertex_count} vertices, above the cap of {size_cap};"
            " raise size_cap or compress first"
        )


def is_contractible(g: Graph, *, size_cap: int = SIZE_CAP) -> bool:
    """True iff some sequence of simple point deletions reaches a single vertex."""
    _check_cap(g, size_cap)
    return _contractible(g)


def _contractible(g: Graph) -> bool:
    n = g.vertex_count
    if n == 0:
        return False
    if n == 1:
        return True
    if not g.is_connected():
        return False
    key = g.canonical_form()
    hit = _VERDICTS.get(key)
    if hit is not None:
        return hit
    result = False
    for v in g.sorted_vertices():
        if _contractible(g.rim(v)) and _contractible(g.remove((v,))):
            result = True
            break
    _VERDICTS[key] = result
    return result


def is_simple_point(g: Graph, v: str, *, size_cap: int = SIZE_CAP) -> bool:
    """True iff the rim of v is contractible, so deleting v preserves homotopy."""
    rim = g.rim(v)
    _check_cap(rim, size_cap)
    return _contractible(rim)


def is_simple_edge(g: Graph, u: str, v: str, *, size_cap: int = SIZE_CAP) -> bool:
    """True iff the joint rim of the edge (u, v) is contractible."""
    if not g.has_edge(u, v):
        raise DomainError(f"no edge between {u!r} and {v!r}")
    joint = g.induced(g.common_neighbors(u, v))
    _check_cap(joint, size_cap)
    return _contractible(joint)


# -- certificates ----------------------------------------------------------


@dataclass(frozen=True)
class CertStep:
    """One replayable deformation step: 'dp' deletes a point, 'de' an edge."""

    kind: str
    labels: tuple[str, ...]

    def __post_init__(self):
        if self.kind == "dp":
            if len(self.labels) != 1:
                raise DomainError("dp step takes exactly one label")
        elif self.kind == "de":
            if len(self.labels) != 2:
                raise DomainError("de step takes exactly two labels")
        else:
            raise DomainError(f"unknown certificate step kind {self.kind!r}")


@dataclass(frozen=True)
class ReductionCertificate:
    """A checked sequence of simple deletions from a source graph.

    Replay validates each step against the current graph, so a stale or
    forged certificate fails loudly rather than producing a wrong graph.
    """

    steps: tuple[CertStep, ...]

    def replay(self, g: Graph, *, size_cap: int = SIZE_CAP) -> Graph:
        cur = g
        for step in self.steps:
            if step.kind == "dp":
                (v,) = step.labels
                if not is_simple_point(cur, v, size_cap=size_cap):
                    raise DomainError(f"certificate step deletes non-simple point {v!r}")
                cur = cur.remove((v,))
            else:
                u, v = step.labels
                if not is_simple_edge(cur, u, v, size_cap=size_cap):
                    raise DomainError(f"certificate step deletes non-simple edge {u!r} {v!r}")
                cur = cur.without_edge(u, v)
        return cur


def format_certificate(cert: ReductionCertificate) -> str:
    return "".join(f"{s.kind} {' '.join(s.labels)}\n" for s in cert.steps)


def parse_certificate(text: str) -> ReductionCertificate:
    steps: list[CertStep] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "dp" and len(fields) == 2:
            steps.append(CertStep("dp", (fields[1],)))
        elif fields[0] == "de" and len(fields) == 3:
            steps.append(CertStep("de", (fields[1], fields[2])))
        else:
            raise DomainError(f"line {lineno}: expected 'dp <v>' or 'de <a> <b>', got {raw!r}")
    return ReductionCertificate(tuple(steps))


def contractibility_certificate(g: Graph, *, size_cap: int = SIZE_CAP) -> ReductionCertificate | None:
    """A deletion order reaching a single vertex, or None when not contractible.

    Deterministic: the search always branches over simple points in
    ascending label order, so equal inputs give equal certificates.
    """
    _check_cap(g, size_cap)
    if g.vertex_count == 0 or not g.is_connected():
        return None
    order = _deletion_order(g)
    if order is None:
        return None
    return ReductionCertificate(tuple(CertStep("dp", (v,)) for v in order))


def _deletion_order(g: Graph) -> list[str] | None:
    if g.vertex_count == 1:
        return []
    key = g.canonical_form()
    if _VERDICTS.get(key) is False:
        return None
    for v in g.sorted_vertices():
        if _contractible(g.rim(v)):
            rest = _deletion_order(g.remove((v,)))
            if rest is not None:
                _VERDICTS[key] = True
                return [v] + rest
    _VERDICTS[key] = False
    return None


def reduce_to_subgraph(
    g: Graph, keep, *, size_cap: int = SIZE_CAP
) -> ReductionCertificate | None:
    """A deletion order from g down to the induced subgraph on `keep`.

    Requires that `keep` induces a contractible subgraph.  Returns None
    when no order of simple point deletions reaches it.
    """
    _check_cap(g, size_cap)
    keep = frozenset(keep)
    target = g.induced(keep)  # validates membership
    if not _contractible(target):
        raise DomainError("target subgraph is not contractible")
    dead: set[frozenset[str]] = set()

    def search(cur: Graph) -> list[str] | None:
        if cur.vertices == keep:
            return []
        state = cur.vertices
        if state in dead:
            return None
        for v in cur.sorted_vertices():
            if v in keep:
                continue
            if _contractible(cur.rim(v)):
                rest = search(cur.remove((v,)))
                if rest is not None:
                    return [v] + rest
        dead.add(state)
        return None

    order = search(g)
    if order is None:
        return None
    return ReductionCertificate(tuple(CertStep("dp", (v,)) for v in order))
