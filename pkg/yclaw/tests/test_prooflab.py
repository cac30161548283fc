# yclaw/tests/test_prooflab.py
import pytest

from yclaw.canon import GraphTooLargeError
from yclaw.config import settings
from yclaw.enumerator import enumerate_yfree
from yclaw.formats import parse_graph6
from yclaw.graph import DisconnectedGraphError, Graph
from yclaw.prooflab import (
    ALWAYS,
    LONG_ONLY,
    LemmaHypothesisError,
    _check_path,
    check_structural_lemmas,
    longest_paths_bruteforce,
    max_edge_dominating_cycle,
)


# ---------- helpers ----------


def statuses(g: Graph) -> dict[str, str]:
    return {c.tag: c.status for c in check_structural_lemmas(g).checks}


# ---------- search ----------


@pytest.mark.parametrize(
    ("g", "count", "length"),
    [
        (Graph.path(4), 2, 3),
        (Graph.cycle(5), 10, 4),
        (Graph.complete(4), 24, 3),
        (Graph.star(3), 6, 2),
    ],
)
def test_longest_paths(g: Graph, count: int, length: int) -> None:
    paths = longest_paths_bruteforce(g)
    assert len(paths) == count
    assert {p.length for p in paths} == {length}


def test_minimal_paths_have_least_end_degrees() -> None:
    # a triangle with a pendant path: 3-0-1-2 and 3-0-2-1 both end at degree 1 and 2
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    paths = longest_paths_bruteforce(g)
    low = min(p.degree_sum for p in paths)
    assert all(p.minimal == (p.degree_sum == low) for p in paths)
    assert low == 3


def test_edge_dominating_cycles() -> None:
    cycle = max_edge_dominating_cycle(Graph.cycle(6))
    assert cycle is not None and len(cycle) == 6
    assert max_edge_dominating_cycle(Graph.path(5)) is None
    spiked = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    cycle = max_edge_dominating_cycle(spiked)
    assert cycle is not None and sorted(cycle) == [0, 1, 2, 3]


def test_cycle_must_dominate_every_edge() -> None:
    # two triangles joined by an edge: neither triangle meets the far triangle's edges
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    assert max_edge_dominating_cycle(g) is None


# ---------- reports ----------


def test_short_paths_skip_long_statements() -> None:
    report = check_structural_lemmas(Graph.complete(4))
    assert report.length == 3
    assert report.all_pass
    got = {c.tag: c.status for c in report.checks}
    assert all(got[t] == "pass" for t in ALWAYS)
    assert all(got[t] == "skipped" for t in LONG_ONLY)


def test_cycle_eight_passes_everything() -> None:
    report = check_structural_lemmas(Graph.cycle(8))
    assert report.length == 7
    assert report.paths == 16
    assert set(statuses(Graph.cycle(8)).values()) == {"pass"}


def test_spiked_path_passes_everything() -> None:
    g = Graph.from_edges(7, [*Graph.path(6).edges, (2, 6)])
    report = check_structural_lemmas(g)
    assert report.length == 5
    assert report.paths == 2
    assert report.all_pass
    assert "skipped" not in statuses(g).values()


def test_y_breaks_the_hypothesis() -> None:
    with pytest.raises(LemmaHypothesisError):
        check_structural_lemmas(Graph.subdivided_claw())


def test_disconnected_input() -> None:
    with pytest.raises(DisconnectedGraphError):
        check_structural_lemmas(Graph.empty(3))


def test_size_bound() -> None:
    with pytest.raises(GraphTooLargeError):
        check_structural_lemmas(Graph.path(settings.prooflab_max_n + 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_every_small_y_free_graph(n: int) -> None:
    for cf in enumerate_yfree(n):
        assert check_structural_lemmas(parse_graph6(cf)).all_pass, cf


@pytest.mark.slow
def test_every_y_free_graph_of_order_eight() -> None:
    for cf in enumerate_yfree(8):
        assert check_structural_lemmas(parse_graph6(cf)).all_pass, cf


def test_vees_sharing_their_middle_vertex_cross() -> None:
    """v_1 w v_3 and v_2 w v_4 are distinct vees even though w is shared."""
    g = Graph.from_edges(7, [*Graph.path(6).edges, (1, 6), (2, 6), (3, 6), (4, 6)])
    out = _check_path(g, list(range(6)), None)
    assert out["vees-cross"] is not None
    assert out["adjacent-disjoint"] is not None
