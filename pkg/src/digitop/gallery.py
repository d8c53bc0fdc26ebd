"""Named reference graphs used by tests, demos, and the command line.

The torus is the 4x4 periodic grid whose points also see their two
"step up-right / step down-left" diagonal neighbors, which makes every
rim a 6-cycle.  The projective plane is an 11-point graph with every
rim an induced cycle of length at least 4, Euler characteristic 1, and
mod-2 Betti numbers (1, 1, 1); it was obtained by compressing (via
simple-pair contractions) the barycentric subdivision of the 6-point
antipodal-quotient triangulation, and the resulting adjacency is
frozen here as a fixture.  Both compress to themselves: neither has a
simple pair.
"""

from __future__ import annotations

from .errors import DomainError
from .graph import Graph
from .manifold import minimal_sphere

_PROJECTIVE11_EDGES = [
    ("p0", "p1"), ("p0", "p5"), ("p0", "p6"), ("p0", "p7"), ("p0", "p8"),
    ("p0", "p9"), ("p1", "p10"), ("p1", "p2"), ("p1", "p5"), ("p1", "p8"),
    ("p10", "p2"), ("p10", "p4"), ("p10", "p6"), ("p10", "p8"), ("p2", "p3"),
    ("p2", "p5"), ("p2", "p6"), ("p2", "p9"), ("p3", "p4"), ("p3", "p5"),
    ("p3", "p7"), ("p3", "p8"), ("p3", "p9"), ("p4", "p6"), ("p4", "p7"),
    ("p4", "p8"), ("p5", "p7"), ("p6", "p7"), ("p6", "p9"), ("p8", "p9"),
]


def _cycle(labels: list[str]) -> Graph:
    pairs = [(labels[i], labels[(i + 1) % len(labels)]) for i in range(len(labels))]
    return Graph(labels, pairs)


def _torus16() -> Graph:
    offsets = [(1, 0), (0, 1), (1, 1)]
    verts = [f"t{i}{j}" for i in range(4) for j in range(4)]
    edges = []
    for i in range(4):
        for j in range(4):
            for di, dj in offsets:
                edges.append((f"t{i}{j}", f"t{(i + di) % 4}{(j + dj) % 4}"))
    return Graph(verts, edges)


def _projective11() -> Graph:
    return Graph([f"p{k}" for k in range(11)], _PROJECTIVE11_EDGES)


def _disk1() -> Graph:
    return Graph("abc", [("a", "b"), ("b", "c")])


def _disk2() -> Graph:
    base = ["b0", "b1", "b2", "b3"]
    g = _cycle(base)
    return Graph(list(g.vertices) + ["t"], list(g.edges) + [("t", b) for b in base])


_BUILDERS = {
    "s0": lambda: minimal_sphere(0),
    "s1-min": lambda: minimal_sphere(1),
    "s1-5": lambda: _cycle([f"v{i}" for i in range(5)]),
    "s2-min": lambda: minimal_sphere(2),
    "s3-min": lambda: minimal_sphere(3),
    "disk1": _disk1,
    "disk2": _disk2,
    "torus16": _torus16,
    "projective11": _projective11,
}


def gallery_names() -> list[str]:
    return sorted(_BUILDERS)


def gallery(name: str) -> Graph:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise DomainError(
            f"unknown gallery name {name!r}; available: {', '.join(gallery_names())}"
        ) from None
    return builder()
