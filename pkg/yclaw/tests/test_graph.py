# yclaw/tests/test_graph.py
import networkx as nx
import pytest

from yclaw.canon import connected_graphs
from yclaw.graph import (
    DisconnectedGraphError,
    Graph,
    GraphValueError,
    blocks_and_cutvertices,
    connected_components,
    is_caterpillar,
    is_tree,
)


# ---------- tests ----------


@pytest.mark.parametrize(
    "edges",
    [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)], [(-1, 0)]],
)
def test_from_edges_rejects_bad_edges(edges: list[tuple[int, int]]) -> None:
    """Loops, parallel edges and out-of-range ids are rejected."""
    with pytest.raises(GraphValueError):
        Graph.from_edges(3, edges)


def test_named_graphs_have_expected_sizes() -> None:
    assert Graph.path(5).m == 4
    assert Graph.cycle(6).m == 6
    assert Graph.complete(5).m == 10
    assert Graph.star(4).degrees() == [4, 1, 1, 1, 1]
    y = Graph.subdivided_claw()
    assert (y.n, y.m) == (7, 6)
    assert sorted(y.degrees()) == [1, 1, 1, 2, 2, 2, 3]


def test_edges_are_sorted_pairs() -> None:
    g = Graph.from_edges(4, [(3, 1), (2, 0), (0, 1)])
    assert g.edges == ((0, 1), (0, 2), (1, 3))
    assert g.neighbors(1) == [0, 3]
    assert g.leaves() == [2, 3]


def test_connectivity() -> None:
    assert Graph.empty(1).is_connected()
    assert not Graph.empty(0).is_connected()
    assert not Graph.empty(2).is_connected()
    assert Graph.cycle(5).is_connected()


def test_relabel_puts_order_first() -> None:
    """Vertex i of the relabelled graph is order[i] of the original."""
    g = Graph.path(3)  # 0-1-2
    h = g.relabel([1, 0, 2])
    assert h.degree(0) == 2
    assert h.edges == ((0, 1), (0, 2))


def test_induced_returns_id_map() -> None:
    g = Graph.cycle(5)
    sub, keep = g.induced([4, 0, 2])
    assert keep == [0, 2, 4]
    assert sub.edges == ((0, 2),)


def test_contract_merges_neighbourhoods() -> None:
    """Contracting an edge of C5 gives C4; contracting a triangle edge gives K2."""
    c4 = Graph.cycle(5).contract(0, 1)
    assert (c4.n, c4.m) == (4, 4)
    assert sorted(c4.degrees()) == [2, 2, 2, 2]
    assert Graph.complete(3).contract(0, 2).edges == ((0, 1),)
    with pytest.raises(GraphValueError):
        Graph.path(3).contract(0, 2)


def test_delete_vertex() -> None:
    g = Graph.star(3).delete_vertex(0)
    assert (g.n, g.m) == (3, 0)


def test_networkx_round_trip() -> None:
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)])
    h = g.to_networkx()
    assert sorted(h.nodes) == list(range(5))
    assert sorted(tuple(sorted(e)) for e in h.edges) == list(g.edges)


def test_connected_components_ordered_by_min() -> None:
    g = Graph.from_edges(6, [(4, 5), (0, 3), (1, 2)])
    assert connected_components(g) == [
        frozenset({0, 3}),
        frozenset({1, 2}),
        frozenset({4, 5}),
    ]


def test_blocks_of_two_triangles_with_tail() -> None:
    """Bowtie with a pendant edge: two triangles, one bridge, two cut vertices."""
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)])
    bd = blocks_and_cutvertices(g)
    assert set(bd.blocks) == {frozenset({0, 1, 2}), frozenset({2, 3, 4}), frozenset({4, 5})}
    assert bd.cut_vertices == frozenset({2, 4})
    assert len(bd.blocks_at(2)) == 2
    nx_blocks = {frozenset(b) for b in nx.biconnected_components(g.to_networkx())}
    assert set(bd.blocks) == nx_blocks


def test_blocks_need_connected_graph() -> None:
    with pytest.raises(DisconnectedGraphError):
        blocks_and_cutvertices(Graph.empty(2))


def test_trees_and_caterpillars() -> None:
    assert is_tree(Graph.path(4))
    assert not is_tree(Graph.cycle(4))
    assert is_caterpillar(Graph.star(5))
    assert is_caterpillar(Graph.path(6))
    assert not is_caterpillar(Graph.subdivided_claw())
    assert not is_caterpillar(Graph.cycle(4))


def test_blocks_partition_the_edges_and_form_a_tree() -> None:
    for n in range(1, 7):
        for g in connected_graphs(n):
            bd = blocks_and_cutvertices(g)
            assert sum(g.induced(b)[0].m for b in bd.blocks) == g.m
            tree = nx.Graph()
            tree.add_nodes_from(("block", i) for i in range(len(bd.blocks)))
            tree.add_edges_from((("block", i), ("cut", c)) for i, c in bd.block_cut_tree)
            assert nx.is_tree(tree)
            assert {c for _, c in bd.block_cut_tree} == bd.cut_vertices
