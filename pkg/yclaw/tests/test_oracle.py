# yclaw/tests/test_oracle.py
from itertools import product

import pytest

from yclaw.canon import GraphTooLargeError, connected_graphs, trees
from yclaw.config import settings
from yclaw.generator import random_graph
from yclaw.graph import Graph, is_caterpillar
from yclaw.oracle import YWitness, find_y_subgraph, has_y, has_y_minor_bruteforce

Y = Graph.subdivided_claw()


# ---------- helpers ----------


def spider(legs: list[int]) -> Graph:
    """Centre 0 with paths of the given lengths hanging off it."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


# ---------- tests ----------


def test_y_contains_itself() -> None:
    w = find_y_subgraph(Y)
    assert w == YWitness(center=0, mids=(1, 3, 5), ends=(2, 4, 6))
    assert w.holds_in(Y)
    assert len(w.edges()) == 6


@pytest.mark.parametrize(
    "g",
    [Graph.path(10), Graph.cycle(9), Graph.complete(6), Graph.star(8), spider([2, 2, 1])],
)
def test_y_free_graphs(g: Graph) -> None:
    assert find_y_subgraph(g) is None
    assert not has_y(g.adj)


def test_longer_spider_contains_y() -> None:
    g = spider([3, 2, 4])
    w = find_y_subgraph(g)
    assert w is not None and w.holds_in(g)
    assert w.center == 0


def test_witness_is_lowest_in_search_order() -> None:
    """Two disjoint copies of Y: the witness uses the first copy."""
    g = Graph.from_edges(14, [*Y.edges, *((u + 7, v + 7) for u, v in Y.edges)])
    w = find_y_subgraph(g)
    assert w is not None and w.center == 0


def test_witness_validation_rejects_bad_witness() -> None:
    bad = YWitness(center=0, mids=(1, 3, 5), ends=(2, 4, 4))
    assert not bad.holds_in(Y)
    assert not YWitness(center=0, mids=(1, 3, 5), ends=(2, 4, 9)).holds_in(Y)


def test_monotone_under_edge_addition() -> None:
    """Adding edges to a graph with a Y keeps a Y."""
    base = Y.with_edges([], n=9)
    for u, v in [(2, 4), (7, 8), (0, 7), (6, 8)]:
        base = base.with_edges([(u, v)])
        assert find_y_subgraph(base) is not None


def test_trees_are_y_free_iff_caterpillars() -> None:
    """Every tree on at most ten vertices."""
    for n in range(1, 11):
        for t in trees(n):
            assert (find_y_subgraph(t) is None) == is_caterpillar(t)


def test_minor_search_on_named_graphs() -> None:
    assert has_y_minor_bruteforce(Y)
    assert not has_y_minor_bruteforce(Graph.cycle(8))
    assert not has_y_minor_bruteforce(Graph.complete(5))
    # subdividing a leg keeps Y as a minor
    assert has_y_minor_bruteforce(spider([3, 2, 2]))


def test_minor_search_matches_subgraph_search_on_order_seven() -> None:
    """Y has maximum degree three, so minor and subgraph containment coincide."""
    for g in connected_graphs(7)[::7]:
        assert has_y_minor_bruteforce(g) == (find_y_subgraph(g) is not None)


def test_minor_search_matches_on_random_graphs() -> None:
    for seed, n in product(range(30), (8, 9)):
        g = random_graph(seed, n, 0.25)
        assert has_y_minor_bruteforce(g) == (find_y_subgraph(g) is not None)


def test_minor_search_bound() -> None:
    with pytest.raises(GraphTooLargeError):
        has_y_minor_bruteforce(Graph.path(settings.minor_max_n + 1))


@pytest.mark.slow
def test_minor_search_matches_exhaustively_on_order_seven() -> None:
    for g in connected_graphs(7):
        assert has_y_minor_bruteforce(g) == (find_y_subgraph(g) is not None)


@pytest.mark.slow
def test_minor_search_matches_on_many_random_graphs() -> None:
    for seed, n in product(range(5000), (8, 9)):
        g = random_graph(seed, n, 0.3)
        assert has_y_minor_bruteforce(g) == (find_y_subgraph(g) is not None)
