# yclaw/graph.py
"""Simple undirected graphs on dense vertex ids 0..n-1.

Adjacency is stored as one neighbour bitmask per vertex, which keeps the hot
loops of the census and the canonical-form search cheap. Values are immutable
and hashable, so they can be shared between workers and used as cache keys.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field

import networkx as nx


class GraphValueError(ValueError):
    """Raised when a vertex id, loop or duplicate edge makes a graph invalid."""


class DisconnectedGraphError(ValueError):
    """Raised when an operation that needs a connected graph gets another one."""


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the bitmask of neighbours of v."""

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise GraphValueError(f"vertex {v} has a loop or an out-of-range neighbour")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphValueError(f"edge {u}-{v} is not symmetric")

    # ------------------------- construction -------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting loops, parallel edges and out-of-range ids."""
        if n < 0:
            raise GraphValueError(f"vertex count must be nonnegative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphValueError(f"loop at vertex {u}")
            if rows[u] >> v & 1:
                raise GraphValueError(f"duplicate edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def subdivided_claw(cls) -> Graph:
        """The 7-vertex tree with centre 0 and legs 0-1-2, 0-3-4, 0-5-6."""
        return cls.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])

    # ------------------------- queries -------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def leaves(self) -> list[int]:
        return [v for v, row in enumerate(self.adj) if row.bit_count() == 1]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= self.adj[v]
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    # ------------------------- derived graphs -------------------------

    def relabel(self, order: Sequence[int]) -> Graph:
        """Return the graph whose vertex i is ``order[i]`` of this graph."""
        pos = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(len(order), ((pos[u], pos[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``vertices`` relabelled in increasing id order.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        sub = Graph.from_edges(
            len(keep), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        )
        return sub, keep

    def delete_vertex(self, v: int) -> Graph:
        return self.induced(u for u in range(self.n) if u != v)[0]

    def contract(self, u: int, v: int) -> Graph:
        """Contract edge uv into u, dropping the loop and parallel edges."""
        if not self.has_edge(u, v):
            raise GraphValueError(f"{u}-{v} is not an edge")
        merged = (self.adj[u] | self.adj[v]) & ~(1 << u) & ~(1 << v)
        edges = [(a, b) for a, b in self.edges if v not in (a, b)]
        edges += [(u, w) for w in _bits(merged) if not self.adj[u] >> w & 1]
        g = Graph.from_edges(self.n, edges)
        return g.delete_vertex(v)

    def with_edges(self, extra: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
        return Graph.from_edges(self.n if n is None else n, [*self.edges, *extra])

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(_bits(mask))


# ------------------------- components and blocks -------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (bridges as 2-vertex blocks), cut vertices and block-cut incidences."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    # (block index, cut vertex) pairs of the block-cut tree
    block_cut_tree: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the components, ordered by smallest vertex."""
    parts = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(parts, key=min)


def blocks_and_cutvertices(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition of a connected graph."""
    if not g.is_connected():
        raise DisconnectedGraphError("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), ())
    h = g.to_networkx()
    blocks = sorted(
        (frozenset(b) for b in nx.biconnected_components(h)), key=lambda b: sorted(b)
    )
    cuts = frozenset(nx.articulation_points(h))
    tree = tuple((i, c) for i, b in enumerate(blocks) for c in sorted(b & cuts))
    return BlockDecomposition(tuple(blocks), cuts, tree)


# ------------------------- trees -------------------------


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and g.is_connected()


def is_caterpillar(g: Graph) -> bool:
    """True iff g is a tree whose non-leaf vertices induce a (possibly empty) path."""
    if not is_tree(g):
        return False
    spine = [v for v in range(g.n) if g.degree(v) != 1]
    if g.n <= 2:
        return True
    inner, _ = g.induced(spine)
    # a subtree with maximum degree 2 is a path
    return all(d <= 2 for d in inner.degrees())
