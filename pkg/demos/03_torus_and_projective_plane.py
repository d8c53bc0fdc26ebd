"""Two closed surfaces that are manifolds but not spheres.

torus16 is a 16-point digital torus; projective11 is an 11-point
digital projective plane.  Both are compressed: no simple pair remains,
so no contraction can shrink them.  Their clique-complex homology tells
them apart from each other and from the 2-sphere.
"""

from digitop import (
    find_simple_pairs,
    gallery,
    invariant_report,
    is_manifold,
    is_sphere,
    minimal_sphere,
    sphere_by_complement,
    sphere_dimension,
)


def inspect(name: str) -> None:
    g = gallery(name)
    print(f"{name}: {g.vertex_count} points, {g.edge_count} edges")
    print("  manifold:", is_manifold(g))
    print("  sphere:  ", is_sphere(g))
    print("  simple pairs:", find_simple_pairs(g))
    rims = sorted({sphere_dimension(g.rim(v)) for v in g.vertices})
    print("  rim sphere dimensions:", rims)
    r = invariant_report(g)
    print(f"  cliques={list(r.clique_counts)} euler={r.euler} betti={list(r.betti)}")
    # a sphere loses contractibility on deleting any contractible piece;
    # these two fail that test at every single vertex
    complements = [sphere_by_complement(g, {v}) for v in g.sorted_vertices()]
    print("  complement criterion at any vertex:", any(complements))
    print()


def main() -> None:
    inspect("torus16")
    inspect("projective11")

    s = minimal_sphere(2)
    print("contrast with the octahedron (minimal 2-sphere):")
    r = invariant_report(s)
    print(f"  cliques={list(r.clique_counts)} euler={r.euler} betti={list(r.betti)}")
    print("  complement criterion at any vertex:",
          all(sphere_by_complement(s, {v}) for v in s.vertices))


if __name__ == "__main__":
    main()
