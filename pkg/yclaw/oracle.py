# yclaw/oracle.py
"""Brute-force ground truth for the subdivided claw Y.

``find_y_subgraph`` searches for Y as a subgraph and returns a witness;
``has_y_minor_bruteforce`` searches the minor order directly and never calls
the subgraph search, so the two can be cross-checked.
"""
from __future__ import annotations

import logging
from itertools import combinations, permutations

from pydantic import BaseModel, ConfigDict

from yclaw.canon import canonical_form, check_bound
from yclaw.config import settings
from yclaw.graph import Graph, bits

logger = logging.getLogger(__name__)


class YWitness(BaseModel):
    """An embedded Y: legs ``center - mids[i] - ends[i]``."""

    model_config = ConfigDict(frozen=True)

    center: int
    mids: tuple[int, int, int]
    ends: tuple[int, int, int]

    def vertices(self) -> list[int]:
        return [self.center, *self.mids, *self.ends]

    def edges(self) -> list[tuple[int, int]]:
        legs = zip(self.mids, self.ends)
        return [e for m, x in legs for e in ((self.center, m), (m, x))]

    def holds_in(self, g: Graph) -> bool:
        vs = self.vertices()
        if len(set(vs)) != 7 or not all(0 <= v < g.n for v in vs):
            return False
        return all(g.has_edge(u, v) for u, v in self.edges())


def _find_y(adj: tuple[int, ...]) -> tuple[int, tuple[int, ...], tuple[int, ...]] | None:
    deg = [row.bit_count() for row in adj]
    for v, row in enumerate(adj):
        if deg[v] < 3:
            continue
        # a mid whose only neighbour is v cannot carry a leg
        mids = [u for u in bits(row) if deg[u] >= 2]
        for a, b, c in combinations(mids, 3):
            used = 1 << v | 1 << a | 1 << b | 1 << c
            for x in bits(adj[a] & ~used):
                for y in bits(adj[b] & ~used & ~(1 << x)):
                    rest = adj[c] & ~used & ~(1 << x) & ~(1 << y)
                    if rest:
                        return v, (a, b, c), (x, y, (rest & -rest).bit_length() - 1)
    return None


def has_y(adj: tuple[int, ...]) -> bool:
    """Raw-row variant used by the census hot loop."""
    return _find_y(adj) is not None


def find_y_subgraph(g: Graph) -> YWitness | None:
    """Lowest witness in (center, mids, ends) order, or None if g is Y-free."""
    found = _find_y(g.adj)
    if found is None:
        return None
    center, mids, ends = found
    witness = YWitness(center=center, mids=mids, ends=ends)  # type: ignore[arg-type]
    if not witness.holds_in(g):
        raise RuntimeError(f"subgraph search produced an invalid witness {witness}")
    return witness


# ------------------------- minors -------------------------


def _spans_y(g: Graph) -> bool:
    """True iff the 7-vertex graph g has Y as a spanning subgraph."""
    for v in range(7):
        if g.degree(v) < 3:
            continue
        for mids in combinations(g.neighbors(v), 3):
            others = [u for u in range(7) if u != v and u not in mids]
            for ends in permutations(others):
                if all(g.has_edge(m, x) for m, x in zip(mids, ends)):
                    return True
    return False


def _strip_isolated(g: Graph) -> Graph:
    if all(g.adj):
        return g
    return g.induced(v for v in range(g.n) if g.adj[v])[0]


def has_y_minor_bruteforce(g: Graph) -> bool:
    """Search contractions and vertex deletions for a 7-vertex minor spanning Y.

    Any minor is a subgraph of a graph reached by contracting edges and then
    deleting vertices, so edge deletions are folded into the final spanning
    check. States are memoized on their canonical form.
    """
    check_bound(g, settings.minor_max_n, "has_y_minor_bruteforce")
    seen: set[bytes] = set()
    stack = [_strip_isolated(g)]
    while stack:
        h = stack.pop()
        if h.n < 7 or h.m < 6 or max(h.degrees()) <= 2:
            continue
        key = canonical_form(h)
        if key in seen:
            continue
        seen.add(key)
        if h.n == 7:
            if _spans_y(h):
                logger.debug("minor search hit after %d states", len(seen))
                return True
            continue
        for v in range(h.n):
            stack.append(_strip_isolated(h.delete_vertex(v)))
        for u, v in h.edges:
            stack.append(_strip_isolated(h.contract(u, v)))
    logger.debug("minor search exhausted %d states", len(seen))
    return False
