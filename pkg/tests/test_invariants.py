import pytest

from corpus import connected_graphs
from digitop.errors import CapacityError, DomainError
from digitop.gallery import gallery
from digitop.graph import Graph
from digitop.invariants import (
    betti_numbers,
    clique_counts,
    euler_characteristic,
    format_report,
    invariant_report,
    parse_report,
)
from digitop.manifold import minimal_sphere


def cycle(n: int) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    return Graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def complete(n: int) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    return Graph(labels, [(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]])


def test_clique_counts_known():
    assert clique_counts(complete(4)) == [4, 6, 4, 1]
    assert clique_counts(cycle(5)) == [5, 5]
    assert clique_counts(Graph("ab", ())) == [2]
    assert clique_counts(Graph((), ())) == []


def test_euler_known_values():
    assert euler_characteristic(Graph(("a",), ())) == 1
    assert euler_characteristic(complete(5)) == 1  # cliques are cones
    assert euler_characteristic(cycle(6)) == 0
    assert euler_characteristic(minimal_sphere(2)) == 2
    assert euler_characteristic(minimal_sphere(3)) == 0
    assert euler_characteristic(gallery("torus16")) == 0
    assert euler_characteristic(gallery("projective11")) == 1


def test_betti_known_values():
    assert betti_numbers(Graph(("a",), ())) == [1]
    assert betti_numbers(Graph("ab", ())) == [2]
    assert betti_numbers(cycle(4)) == [1, 1]
    assert betti_numbers(complete(4)) == [1]
    assert betti_numbers(minimal_sphere(2)) == [1, 0, 1]
    assert betti_numbers(minimal_sphere(3)) == [1, 0, 0, 1]
    assert betti_numbers(gallery("torus16")) == [1, 2, 1]
    assert betti_numbers(gallery("projective11")) == [1, 1, 1]


def test_two_disjoint_cycles():
    g = cycle(4).join(Graph((), ()))
    h = Graph(
        [f"w{i}" for i in range(4)],
        [(f"w{i}", f"w{(i + 1) % 4}") for i in range(4)],
    )
    both = Graph(g.vertices | h.vertices, list(g.edges) + list(h.edges))
    assert betti_numbers(both) == [2, 2]
    assert euler_characteristic(both) == 0


def test_euler_poincare_agreement_on_corpus():
    """Alternating clique sum equals alternating Betti sum, graph by graph."""
    for g in connected_graphs(6):
        r = invariant_report(g)
        assert r.euler == sum((-1) ** k * b for k, b in enumerate(r.betti))


def test_report_round_trip():
    r = invariant_report(gallery("torus16"))
    assert r.clique_counts == (16, 48, 32)
    text = format_report(r)
    assert parse_report(text) == r
    assert text == "cliques: 16 48 32\neuler: 0\nbetti: 1 2 1\n"


def test_parse_report_rejects_garbage():
    with pytest.raises(DomainError):
        parse_report("euler: x\n")
    with pytest.raises(DomainError):
        parse_report("cliques: 3\n")  # missing rows


def test_clique_budget():
    with pytest.raises(CapacityError):
        clique_counts(complete(16), budget=1000)
