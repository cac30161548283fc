# yclaw/canon.py
"""Canonical forms and automorphism counts for small graphs.

Individualization-refinement: the vertex set is kept as an ordered partition
that is refined until equitable; the first non-singleton cell is split by
trying each of its vertices in turn. Every discrete leaf yields a relabelled
adjacency, and the largest one is the canonical form. Twins in the target cell
lead to isomorphic subtrees, so only one representative per twin class is
searched.
"""
from __future__ import annotations

import logging
from functools import lru_cache

from yclaw.config import settings
from yclaw.formats import emit_graph6, parse_graph6
from yclaw.graph import Graph, bits

logger = logging.getLogger(__name__)

Cells = list[list[int]]
# (individualized positions, relabelled adjacency rows)
LeafKey = tuple[tuple[int, ...], tuple[int, ...]]


class GraphTooLargeError(ValueError):
    """Raised when a graph exceeds the configured bound of an exhaustive routine."""


def check_bound(g: Graph, bound: int, what: str) -> None:
    if g.n > bound:
        raise GraphTooLargeError(f"{what} supports n <= {bound}, got n={g.n}")


# ------------------------- refinement -------------------------


def _refine(adj: tuple[int, ...], cells: Cells) -> Cells:
    """Split cells by neighbour counts until the partition is equitable."""
    cells = [list(c) for c in cells]
    stable = False
    while not stable:
        stable = True
        for splitter in range(len(cells)):
            smask = 0
            for v in cells[splitter]:
                smask |= 1 << v
            out: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[k] for k in sorted(groups))
                    stable = False
            cells = out
            if not stable:
                break
    return cells


def _twins(adj: tuple[int, ...], u: int, w: int) -> bool:
    return (adj[u] & ~(1 << w)) == (adj[w] & ~(1 << u))


def _leaf_rows(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _search(
    adj: tuple[int, ...], cells: Cells, positions: tuple[int, ...]
) -> tuple[LeafKey, list[int], int]:
    """Best leaf key, its vertex order, and |Aut| of the pointed graph at this node."""
    cells = _refine(adj, cells)
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        return (positions, _leaf_rows(adj, order)), order, 1

    cell = cells[target]
    offset = sum(len(c) for c in cells[:target])
    reps: list[list[int]] = []  # [representative, twin class size]
    for u in sorted(cell):
        for rep in reps:
            if _twins(adj, u, rep[0]):
                rep[1] += 1
                break
        else:
            reps.append([u, 1])

    results = []
    for w, size in reps:
        child = cells[:target] + [[w], [x for x in cell if x != w]] + cells[target + 1 :]
        key, order, aut = _search(adj, child, positions + (offset,))
        results.append((key, order, aut, size))

    best_key, best_order = max(((r[0], r[1]) for r in results), key=lambda r: r[0])
    first_key, _, first_aut, _ = results[0]
    orbit = sum(size for key, _, _, size in results if key == first_key)
    return best_key, best_order, orbit * first_aut


@lru_cache(maxsize=1 << 16)
def _canonical(g: Graph) -> tuple[bytes, int]:
    if g.n == 0:
        return emit_graph6(g), 1
    _, order, aut = _search(g.adj, [list(range(g.n))], ())
    return emit_graph6(g.relabel(order)), aut


def canonical_form(g: Graph) -> bytes:
    """graph6 of the canonically relabelled graph; equal iff isomorphic."""
    check_bound(g, settings.canon_max_n, "canonical_form")
    return _canonical(g)[0]


def automorphism_count(g: Graph) -> int:
    check_bound(g, settings.canon_max_n, "automorphism_count")
    return _canonical(g)[1]


def canonical_graph(g: Graph) -> Graph:
    return parse_graph6(canonical_form(g))


# ------------------------- augmentation -------------------------


def _augment(g: Graph, nbrs: int) -> Graph:
    rows = list(g.adj)
    for u in bits(nbrs):
        rows[u] |= 1 << g.n
    rows.append(nbrs)
    return Graph(g.n + 1, tuple(rows))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs of order n up to isomorphism, in canonical form.

    Every connected graph has a vertex whose removal keeps it connected, so
    adding one vertex with every nonempty neighbourhood to each graph of order
    n-1 reaches every class.
    """
    if n <= 0:
        return ()
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[bytes, Graph] = {}
    for g in connected_graphs(n - 1):
        for nbrs in range(1, 1 << g.n):
            cf = canonical_form(_augment(g, nbrs))
            if cf not in seen:
                seen[cf] = parse_graph6(cf)
    logger.info("connected_graphs n=%d classes=%d", n, len(seen))
    return tuple(seen[k] for k in sorted(seen))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees of order n up to isomorphism, grown one leaf at a time."""
    if n <= 0:
        return ()
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[bytes, Graph] = {}
    for t in trees(n - 1):
        for v in range(t.n):
            cf = canonical_form(_augment(t, 1 << v))
            if cf not in seen:
                seen[cf] = parse_graph6(cf)
    return tuple(seen[k] for k in sorted(seen))
