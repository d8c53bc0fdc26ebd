"""Build digital spheres and watch the recognizer name them.

A digital n-sphere is a connected graph in which every vertex rim (the
induced subgraph on its neighbors) is an (n-1)-sphere and deleting some
vertex leaves a contractible graph.  The base case is two isolated
points.  Joins raise dimension: S^m join S^n = S^(m+n+1).
"""

from digitop import (
    Graph,
    classify,
    is_sphere,
    minimal_sphere,
    sphere_dimension,
    suspend,
)


def cycle(n: int) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def main() -> None:
    print("minimal spheres: the join of n+1 copies of the two-point sphere")
    for n in range(4):
        s = minimal_sphere(n)
        ok, dim = is_sphere(s)
        print(f"  n={n}: {s.vertex_count} points, {s.edge_count} edges,"
              f" recognized: {ok}, dim={dim}")

    print("\ncycles: every cycle of length >= 4 is a 1-sphere")
    for n in (3, 4, 5, 6, 7):
        print(f"  C{n}: sphere_dimension = {sphere_dimension(cycle(n))}")
    print("  (C3 is a filled triangle, hence contractible, hence None)")

    print("\nsuspension: joining a graph with two new poles raises dimension")
    s = minimal_sphere(0)
    for _ in range(3):
        s = suspend(s)
        print(f"  {s.vertex_count} points -> sphere_dimension = {sphere_dimension(s)}")

    print("\nclassify gives the most specific verdict it can prove:")
    for g, label in [
        (minimal_sphere(2), "octahedron"),
        (cycle(3), "triangle"),
        (Graph("ab", ()), "two isolated points"),
        (cycle(30), "a 30-cycle (above the size cap, compressed first)"),
    ]:
        print(f"  {label}: {classify(g).describe()}")


if __name__ == "__main__":
    main()
