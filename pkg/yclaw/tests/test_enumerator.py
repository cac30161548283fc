# yclaw/tests/test_enumerator.py
import csv
import io
import json
import math

import pytest

from yclaw.canon import GraphTooLargeError, canonical_form, connected_graphs
from yclaw.certificates import allocate
from yclaw.config import settings
from yclaw.enumerator import (
    CensusRow,
    census_csv,
    census_json,
    census_rows,
    enumerate_yfree,
    growth_estimate,
    kernels,
    labeled_count,
    labeled_oracle_counts,
    necklace_programs,
    oracle_census,
    oracle_yfree,
    solve_delta,
    strand_programs,
)
from yclaw.formats import parse_graph6
from yclaw.graph import Graph
from yclaw.oracle import find_y_subgraph

LABELED_CONNECTED = [1, 1, 4, 38, 728, 26704]


# ---------- tests ----------


def test_kernel_table_has_143_graphs() -> None:
    assert len(kernels()) == 143
    assert max(k.n for k in kernels()) == 6


@pytest.mark.parametrize("n", range(1, 7))
def test_small_orders_are_all_connected_graphs(n: int) -> None:
    """Below seven vertices every connected graph is Y-free."""
    assert enumerate_yfree(n) == {canonical_form(g) for g in connected_graphs(n)}


def test_order_four_has_six_graphs() -> None:
    assert len(enumerate_yfree(4)) == 6
    assert enumerate_yfree(1) == {b"@"}


@pytest.mark.parametrize("n", range(1, 7))
def test_labeled_counts_small(n: int) -> None:
    assert labeled_count(n) == LABELED_CONNECTED[n - 1]


def test_labeled_oracle_counts_small() -> None:
    for n, want in enumerate(LABELED_CONNECTED[:5], 1):
        assert labeled_oracle_counts(n, jobs=1) == (want, want)


def test_oracle_census_row() -> None:
    row = oracle_census(3, jobs=1)
    assert (row.unlabeled_connected, row.unlabeled_yfree, row.labeled_yfree) == (2, 2, 4)
    assert row.source == "oracle"
    assert row.growth_point == pytest.approx((4 / 6) ** (1 / 3))


def test_order_seven_matches_oracle() -> None:
    """Certificate enumeration and the oracle agree class by class."""
    forms = enumerate_yfree(7)
    assert forms == oracle_yfree(7)
    assert len(forms) < len(connected_graphs(7))
    assert canonical_form(Graph.subdivided_claw()) not in forms


def assert_all_y_free(n: int) -> None:
    for cf in enumerate_yfree(n):
        g = parse_graph6(cf)
        assert g.n == n
        assert g.is_connected()
        assert find_y_subgraph(g) is None


def test_order_seven_graphs_are_y_free() -> None:
    assert_all_y_free(7)


@pytest.mark.slow
def test_order_eight_graphs_are_y_free() -> None:
    assert_all_y_free(8)


def test_programs_have_requested_order() -> None:
    for n in (7, 9):
        for program in strand_programs(n):
            assert allocate(program).n == n
        for program in necklace_programs(n):
            assert allocate(program).n == n


def test_growth_points() -> None:
    table = growth_estimate(4)
    assert [n for n, _ in table] == [1, 2, 3, 4]
    assert table[0][1] == pytest.approx(1.0)
    assert table[2][1] == pytest.approx(0.8736, abs=1e-4)
    assert all(x > 0 and math.isfinite(x) for _, x in table)


def test_delta() -> None:
    delta = solve_delta()
    assert delta == pytest.approx(2.25159, abs=1e-4)
    z = 1 / delta
    assert abs((z + z * z) * math.exp(z) - 1) <= 1e-10


def test_bounds() -> None:
    with pytest.raises(GraphTooLargeError):
        enumerate_yfree(settings.enum_max_n + 1)
    with pytest.raises(GraphTooLargeError):
        oracle_census(settings.census_max_n + 1)


def test_census_reports() -> None:
    rows = census_rows(3)
    assert [r.labeled_yfree for r in rows] == [1, 1, 4]
    parsed = list(csv.DictReader(io.StringIO(census_csv(rows))))
    assert list(parsed[0]) == ["n", "connected", "yfree_unlabeled", "g_n", "growth_point"]
    assert parsed[2]["g_n"] == "4"
    data = json.loads(census_json(rows))
    assert data[2]["yfree_unlabeled"] == 2
    assert data[0]["connected"] is None


def test_census_row_model() -> None:
    row = CensusRow(n=2, unlabeled_yfree=1, labeled_yfree=1, growth_point=0.7071)
    assert row.source == "certificates"
    assert row.unlabeled_connected is None


@pytest.mark.slow
def test_order_seven_labeled_counts_agree() -> None:
    """Raw mask census and automorphism weighting give the same g_7."""
    connected, yfree = labeled_oracle_counts(7, jobs=2)
    assert yfree == labeled_count(7)
    assert yfree < connected


@pytest.mark.slow
def test_order_ten_growth_table() -> None:
    table = growth_estimate(10)
    assert len(table) == 10
    assert all(x > 0 for _, x in table)
