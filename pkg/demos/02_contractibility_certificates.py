"""Contractibility with receipts.

A graph is contractible when deleting simple points one at a time can
shrink it to a single vertex.  The search returns a certificate: the
exact deletion order, replayable and independently checkable step by
step.
"""

from digitop import (
    Graph,
    contractibility_certificate,
    format_certificate,
    is_contractible,
    is_simple_point,
    parse_certificate,
    reduce_to_subgraph,
)


def main() -> None:
    # a triangulated square sharing a corner with a triangle:
    # contractible despite its cycles
    wedge = Graph(
        "abcdef",
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"),
         ("a", "c"), ("d", "e"), ("e", "f"), ("f", "d")],
    )
    print("graph:", wedge.vertex_count, "points,", wedge.edge_count, "edges")
    print("contractible:", is_contractible(wedge))

    cert = contractibility_certificate(wedge)
    print("\ncertificate (dp = delete point):")
    print(format_certificate(cert), end="")
    final = cert.replay(wedge)
    print("replay leaves:", final.sorted_vertices())

    print("\nthe text form parses back and replays identically:")
    again = parse_certificate(format_certificate(cert))
    print("same final vertex:", again.replay(wedge) == final)

    c4 = Graph("wxyz", [("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")])
    print("\na 4-cycle has no simple point at all:")
    for v in c4.sorted_vertices():
        print(f"  {v} simple: {is_simple_point(c4, v)}")
    print("contractible:", is_contractible(c4))
    print("certificate:", contractibility_certificate(c4))

    print("\nreduction can also stop at a chosen contractible subgraph:")
    cert = reduce_to_subgraph(wedge, {"d", "e", "f"})
    print(format_certificate(cert), end="")
    print("kept:", cert.replay(wedge).sorted_vertices())


if __name__ == "__main__":
    main()
