# yclaw/prooflab.py
"""Brute-force checks of the longest-path structure of small Y-free graphs.

For a longest path P = v_0 .. v_l, ``L_i`` is the set of neighbours of v_i
off the path. A vee is a path v_i w v_{i+2} with w off the path. Each check
below evaluates one structural statement literally on every longest path
that minimizes deg(v_0) + deg(v_l).
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Literal

from pydantic import BaseModel

from yclaw.canon import check_bound
from yclaw.config import settings
from yclaw.graph import DisconnectedGraphError, Graph, bits
from yclaw.oracle import find_y_subgraph

logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "skipped"]

# statements that assume a longest path with at least five edges
LONG_ONLY = (
    "intersection-span",
    "triple-intersection",
    "vee-enclosed",
    "vees-cross",
    "chords",
    "long-cycle",
)
ALWAYS = ("ends-empty", "adjacent-disjoint", "offpath-independent", "dominating")


class LemmaHypothesisError(ValueError):
    """Raised when the input graph contains Y."""


class LongestPath(BaseModel):
    vertices: list[int]
    degree_sum: int
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


class LemmaCheck(BaseModel):
    tag: str
    status: Status
    paths: int = 0
    witness: str | None = None


class LemmaReport(BaseModel):
    n: int
    length: int
    paths: int
    checks: list[LemmaCheck]

    @property
    def all_pass(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


# ------------------------- search -------------------------


def _longest_from(g: Graph, start: int, best: list[list[int]]) -> None:
    path = [start]

    def extend(used: int) -> None:
        tip = path[-1]
        grew = False
        for w in bits(g.adj[tip] & ~used):
            grew = True
            path.append(w)
            extend(used | 1 << w)
            path.pop()
        if not grew:
            if not best or len(path) > len(best[0]):
                best[:] = [list(path)]
            elif len(path) == len(best[0]):
                best.append(list(path))

    extend(1 << start)


def longest_paths_bruteforce(g: Graph) -> list[LongestPath]:
    """Every longest simple path in both directions; ``minimal`` marks least end-degree sum."""
    check_bound(g, settings.prooflab_max_n, "longest_paths_bruteforce")
    best: list[list[int]] = []
    for v in range(g.n):
        _longest_from(g, v, best)
    paths = [LongestPath(vertices=p, degree_sum=g.degree(p[0]) + g.degree(p[-1])) for p in best]
    low = min((p.degree_sum for p in paths), default=0)
    for p in paths:
        p.minimal = p.degree_sum == low
    return paths


def _dominates_edges(g: Graph, cycle_mask: int) -> bool:
    return all(cycle_mask >> u & 1 or cycle_mask >> v & 1 for u, v in g.edges)


def max_edge_dominating_cycle(g: Graph) -> list[int] | None:
    """A longest cycle meeting every edge of g, or None if there is no such cycle."""
    check_bound(g, settings.prooflab_max_n, "max_edge_dominating_cycle")
    best: list[int] | None = None
    for start in range(g.n):
        path = [start]

        def extend(used: int) -> None:
            nonlocal best
            tip = path[-1]
            if len(path) >= 3 and g.has_edge(tip, start) and _dominates_edges(g, used):
                # each cycle is seen from its least vertex, in one direction
                if path[1] < path[-1] and (best is None or len(path) > len(best)):
                    best = list(path)
            for w in bits(g.adj[tip] & ~used):
                if w > start:
                    path.append(w)
                    extend(used | 1 << w)
                    path.pop()

        extend(1 << start)
    return best


# ------------------------- statements -------------------------


def _offpath(g: Graph, path: list[int]) -> list[set[int]]:
    on = sum(1 << v for v in path)
    return [set(bits(g.adj[v] & ~on)) for v in path]


def _vees(g: Graph, path: list[int]) -> list[tuple[int, int]]:
    """(i, w) for each vee v_i w v_{i+2}."""
    ls = _offpath(g, path)
    return [(i, w) for i in range(len(path) - 2) for w in sorted(ls[i] & ls[i + 2])]


def _allowed_chord(i: int, j: int, ell: int) -> bool:
    return (
        j == i + 2
        or (i, j) in {(0, 3), (ell - 3, ell), (0, ell - 1), (0, ell), (1, ell - 1), (1, ell)}
    )


def _check_path(g: Graph, path: list[int], cycle_len: int | None) -> dict[str, str | None]:
    """Failure witness per tag (None means the statement holds on this path)."""
    ell = len(path) - 1
    ls = _offpath(g, path)
    pos = {v: i for i, v in enumerate(path)}
    on = set(path)
    out: dict[str, str | None] = dict.fromkeys(ALWAYS + LONG_ONLY)

    if ls[0] or ls[-1]:
        out["ends-empty"] = f"L_0={sorted(ls[0])} L_{ell}={sorted(ls[-1])}"
    for i in range(ell):
        if ls[i] & ls[i + 1]:
            out["adjacent-disjoint"] = f"i={i} common={sorted(ls[i] & ls[i + 1])}"
            break
    for u, v in g.edges:
        if u not in on and v not in on:
            out["offpath-independent"] = f"edge {u}-{v}"
            break
    covered = set().union(*ls)
    missing = [v for v in range(g.n) if v not in on and v not in covered]
    if missing:
        out["dominating"] = f"vertices {missing}"

    if ell < 5:
        return out

    for i, j in combinations(range(ell + 1), 2):
        if ls[i] & ls[j] and not (j == i + 2 or (i == 1 and j == ell - 1)):
            out["intersection-span"] = f"L_{i} & L_{j} = {sorted(ls[i] & ls[j])}"
            break
    for i, j, k in combinations(range(ell + 1), 3):
        if ls[i] & ls[j] & ls[k]:
            out["triple-intersection"] = f"i={i} j={j} k={k}"
            break
    for i in range(1, ell):
        if ls[i] and ls[i - 1] & ls[i + 1]:
            out["vee-enclosed"] = f"i={i} L_i={sorted(ls[i])}"
            break
    vees = _vees(g, path)
    for (i, w), (j, x) in combinations(vees, 2):
        # distinct vees one step apart
        if abs(i - j) == 1:
            out["vees-cross"] = f"v_{i} {w} v_{i + 2} and v_{j} {x} v_{j + 2}"
            break
    for u, v in g.edges:
        if u in on and v in on:
            i, j = sorted((pos[u], pos[v]))
            if j > i + 1 and not _allowed_chord(i, j, ell):
                out["chords"] = f"v_{i} v_{j}"
                break
    crossing = any(
        g.has_edge(path[a], path[b]) for a in (0, 1) for b in (ell - 1, ell) if b > a + 1
    )
    if crossing or ls[1] & ls[ell - 1]:
        need = max(ell - 1, 4)
        if cycle_len is None or cycle_len < need:
            out["long-cycle"] = f"cycle length {cycle_len} < {need}"
    return out


def check_structural_lemmas(g: Graph) -> LemmaReport:
    """Run every check on every degree-sum-minimal longest path of a connected Y-free graph."""
    check_bound(g, settings.prooflab_max_n, "check_structural_lemmas")
    if not g.is_connected():
        raise DisconnectedGraphError("check_structural_lemmas needs a connected graph")
    witness = find_y_subgraph(g)
    if witness is not None:
        raise LemmaHypothesisError(f"graph contains Y at {witness.vertices()}")

    paths = [p for p in longest_paths_bruteforce(g) if p.minimal]
    ell = paths[0].length if paths else 0
    cycle = max_edge_dominating_cycle(g) if ell >= 5 else None
    cycle_len = len(cycle) if cycle is not None else None

    failures: dict[str, str] = {}
    for p in paths:
        for tag, found in _check_path(g, p.vertices, cycle_len).items():
            if found is not None and tag not in failures:
                failures[tag] = f"path {p.vertices}: {found}"

    checks = []
    for tag in ALWAYS + LONG_ONLY:
        if tag in LONG_ONLY and ell < 5:
            checks.append(LemmaCheck(tag=tag, status="skipped"))
        elif tag in failures:
            checks.append(LemmaCheck(tag=tag, status="fail", paths=len(paths), witness=failures[tag]))
        else:
            checks.append(LemmaCheck(tag=tag, status="pass", paths=len(paths)))
    if failures:
        logger.warning("prooflab n=%d failures=%s", g.n, ",".join(sorted(failures)))
    logger.info("prooflab n=%d length=%d paths=%d", g.n, ell, len(paths))
    return LemmaReport(n=g.n, length=ell, paths=len(paths), checks=checks)
