# yclaw/enumerator.py
"""Censuses of connected Y-free graphs and the labelled growth data built on them.

Two independent routes to the same numbers:

* the oracle census walks every labelled graph (one adjacency mask per
  graph) and asks the subgraph oracle;
* ``enumerate_yfree`` builds every kernel-with-clones and every bead program
  of the requested order and deduplicates canonical forms.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
import multiprocessing
from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Literal

from pydantic import BaseModel
from scipy.optimize import bisect

from yclaw.canon import (
    GraphTooLargeError,
    automorphism_count,
    canonical_form,
    connected_graphs,
)
from yclaw.certificates import (
    BeadProgram,
    BeadSpec,
    KernelCertificate,
    KernelSpec,
    allocate,
    realize,
    validate_program,
)
from yclaw.config import settings
from yclaw.formats import parse_graph6
from yclaw.graph import Graph
from yclaw.oracle import find_y_subgraph, has_y

logger = logging.getLogger(__name__)


class CensusRow(BaseModel):
    n: int
    unlabeled_connected: int | None = None
    unlabeled_yfree: int
    labeled_yfree: int
    growth_point: float
    source: Literal["oracle", "certificates"] = "certificates"


def _bound(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise GraphTooLargeError(f"{what} supports n <= {limit}, got n={n}")


def growth_point(n: int, g_n: int) -> float:
    """(g_n / n!) ** (1/n), from exact integers."""
    return float((g_n / math.factorial(n)) ** (1.0 / n)) if n else 1.0


# ------------------------- oracle census -------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(n) for u in range(v)]


def _census_shard(n: int, lo: int, hi: int) -> tuple[int, int]:
    """(connected, connected Y-free) counts over masks lo..hi-1."""
    pairs = _pairs(n)
    full = (1 << n) - 1
    connected = yfree = 0
    for mask in range(lo, hi):
        rows = [0] * n
        bit = 0
        m = mask
        while m:
            if m & 1:
                u, v = pairs[bit]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            bit += 1
        seen = frontier = 1
        while frontier:
            reach = 0
            for v in range(n):
                if frontier >> v & 1:
                    reach |= rows[v]
            frontier = reach & ~seen
            seen |= frontier
        if seen != full:
            continue
        connected += 1
        if n < 7 or not has_y(tuple(rows)):
            yfree += 1
    return connected, yfree


def _census_shard_args(args: tuple[int, int, int]) -> tuple[int, int]:
    return _census_shard(*args)


def labeled_oracle_counts(n: int, jobs: int | None = None) -> tuple[int, int]:
    """Labelled (connected, Y-free connected) counts by brute force over all masks."""
    _bound(n, settings.census_max_n, "oracle_census")
    if n == 0:
        return 0, 0
    total = 1 << len(_pairs(n))
    jobs = max(1, jobs or settings.jobs)
    if jobs == 1 or total < 1 << 12:
        return _census_shard(n, 0, total)
    step = -(-total // (jobs * 4))
    shards = [(n, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with multiprocessing.get_context("spawn").Pool(jobs) as pool:
        parts = pool.map(_census_shard_args, shards)
    return sum(p[0] for p in parts), sum(p[1] for p in parts)


def oracle_yfree(n: int) -> set[bytes]:
    """Canonical forms of the connected Y-free graphs of order n, filtered by the oracle."""
    _bound(n, settings.census_max_n, "oracle_census")
    return {canonical_form(g) for g in connected_graphs(n) if find_y_subgraph(g) is None}


def oracle_census(n: int, jobs: int | None = None) -> CensusRow:
    connected, yfree = labeled_oracle_counts(n, jobs)
    forms = oracle_yfree(n)
    row = CensusRow(
        n=n,
        unlabeled_connected=len(connected_graphs(n)),
        unlabeled_yfree=len(forms),
        labeled_yfree=yfree,
        growth_point=growth_point(n, yfree),
        source="oracle",
    )
    logger.info(
        "census n=%d connected=%d yfree=%d labeled_connected=%d labeled_yfree=%d",
        n, row.unlabeled_connected, row.unlabeled_yfree, connected, yfree,
    )
    return row


# ------------------------- kernels with clones -------------------------


@lru_cache(maxsize=None)
def kernels() -> tuple[Graph, ...]:
    """The 143 connected graphs on at most six vertices."""
    return tuple(g for k in range(1, 7) for g in connected_graphs(k))


def _cloneable(kernel: Graph) -> list[int]:
    leaves = kernel.leaves()
    # cloning one end of K2 makes the other end a non-leaf
    return leaves[:1] if kernel.n == 2 else leaves


def kernel_certificates(n: int) -> Iterator[KernelCertificate]:
    for kernel in kernels():
        extra = n - kernel.n
        if extra < 0:
            continue
        leaves = _cloneable(kernel)
        if extra and not leaves:
            continue
        choices = combinations_with_replacement(leaves, extra) if extra else [()]
        for picks in choices:
            clones: dict[int, list[int]] = {}
            nxt = kernel.n
            for leaf in picks:
                clones.setdefault(leaf, []).append(nxt)
                nxt += 1
            spec = KernelSpec(
                n=kernel.n, edges=list(kernel.edges), map=list(range(kernel.n)), clones=clones
            )
            yield KernelCertificate(n=n, kernel=spec)


# ------------------------- bead programs -------------------------


def _bead_menu(max_cost: int) -> list[tuple[BeadSpec, int]]:
    """(bead, new vertices) for beads other than K4 costing at most max_cost."""
    menu = [(BeadSpec(kind="K11t", t=t), 1 + t) for t in range(max_cost)]
    menu += [(BeadSpec(kind="K2t", t=t), 1 + t) for t in range(2, max_cost)]
    if max_cost >= 3:
        menu.append((BeadSpec(kind="K211"), 3))
    return sorted(menu, key=lambda bc: (bc[1], bc[0].kind, bc[0].t))


def _sequences(budget: int, exact: bool) -> Iterator[list[BeadSpec]]:
    """Nonempty bead sequences costing ``budget`` (or at most it, unless exact)."""

    def grow(prefix: list[BeadSpec], left: int) -> Iterator[list[BeadSpec]]:
        if prefix and (left == 0 or not exact):
            yield prefix
        for bead, cost in _bead_menu(left):
            if cost <= left:
                yield from grow(prefix + [bead], left - cost)

    yield from grow([], budget)


def _spread(total: int, slots: list[int]) -> Iterator[dict[int, int]]:
    if total == 0:
        yield {}
        return
    for picks in combinations_with_replacement(slots, total):
        out: dict[int, int] = {}
        for p in picks:
            out[p] = out.get(p, 0) + 1
        yield out


def _key(beads: list[BeadSpec]) -> list[tuple[str, int]]:
    return [(b.kind, b.t) for b in beads]


def strand_programs(n: int) -> Iterator[BeadProgram]:
    """Valid strand programs of order n, skipping reversed duplicates of the bead sequence."""
    k4 = BeadSpec(kind="K4")
    for spikes in range(0, max(n - 2, 0)):
        budget = n - 1 - spikes
        if budget < 1:
            continue
        bodies: list[list[BeadSpec]] = list(_sequences(budget, exact=True))
        if budget >= 3:
            bodies += [[k4]] if budget == 3 else []
            bodies += [[k4] + s for s in _sequences(budget - 3, exact=True)]
            bodies += [s + [k4] for s in _sequences(budget - 3, exact=True)]
        if budget >= 6:
            bodies += [[k4, k4]] if budget == 6 else []
            bodies += [[k4] + s + [k4] for s in _sequences(budget - 6, exact=True)]
        for beads in bodies:
            if _key(beads) > _key(beads[::-1]):
                continue
            base = BeadProgram(family="strand", beads=tuple(beads))
            hosts = base.shared_primaries()
            if spikes and not hosts:
                continue
            for spread in _spread(spikes, hosts):
                yield BeadProgram(family="strand", beads=tuple(beads), spikes=spread)


def _rotation_minimal(beads: list[BeadSpec]) -> bool:
    key = _key(beads)
    r = len(beads)
    rotations = [key[i:] + key[:i] for i in range(r)]
    mirrored = key[::-1]
    rotations += [mirrored[i:] + mirrored[:i] for i in range(r)]
    return key == min(rotations)


def necklace_programs(n: int) -> Iterator[BeadProgram]:
    """Valid necklace programs of order n, one bead sequence per rotation/reflection class."""
    for spikes in range(0, max(n - 2, 0)):
        budget = n - spikes
        for beads in _sequences(budget, exact=True):
            if len(beads) < 2 or not _rotation_minimal(beads):
                continue
            if len(beads) == 2 and all(b.kind == "K11t" for b in beads):
                continue
            base = BeadProgram(family="necklace", beads=tuple(beads))
            for spread in _spread(spikes, list(range(len(beads)))):
                yield BeadProgram(family="necklace", beads=base.beads, spikes=spread)


# ------------------------- certificate census -------------------------


@lru_cache(maxsize=None)
def _yfree_forms(n: int) -> frozenset[bytes]:
    if n <= 0:
        return frozenset()
    forms = {canonical_form(realize(c)) for c in kernel_certificates(n)}
    if n >= 7:
        for program in (*strand_programs(n), *necklace_programs(n)):
            cert = allocate(program)
            if validate_program(cert):
                continue
            forms.add(canonical_form(realize(cert)))
    logger.info("enumerate_yfree n=%d classes=%d", n, len(forms))
    return frozenset(forms)


def enumerate_yfree(n: int) -> set[bytes]:
    """Canonical forms of every connected Y-free graph of order n, built from certificates.

    Orders up to six are covered by the kernels alone, since every connected
    graph that small is its own kernel.
    """
    _bound(n, settings.enum_max_n, "enumerate_yfree")
    return set(_yfree_forms(n))


def labeled_count(n: int) -> int:
    """g_n = sum of n!/|Aut(G)| over the unlabelled Y-free connected graphs G."""
    fact = math.factorial(n)
    total = 0
    for cf in sorted(enumerate_yfree(n)):
        aut = automorphism_count(parse_graph6(cf))
        total += fact // aut
    return total


def growth_estimate(n_max: int) -> list[tuple[int, float]]:
    _bound(n_max, settings.enum_max_n, "growth_estimate")
    return [(n, growth_point(n, labeled_count(n))) for n in range(1, n_max + 1)]


def census_rows(max_n: int, oracle: bool = False, jobs: int | None = None) -> list[CensusRow]:
    if oracle:
        return [oracle_census(n, jobs) for n in range(1, max_n + 1)]
    rows = []
    for n in range(1, max_n + 1):
        g_n = labeled_count(n)
        rows.append(
            CensusRow(
                n=n,
                unlabeled_yfree=len(enumerate_yfree(n)),
                labeled_yfree=g_n,
                growth_point=growth_point(n, g_n),
            )
        )
    return rows


def solve_delta() -> float:
    """1/z for the positive root z of (z + z^2) e^z = 1."""
    z = bisect(lambda x: (x + x * x) * math.exp(x) - 1.0, 0.0, 1.0, xtol=1e-12)
    return 1.0 / float(z)


# ------------------------- reports -------------------------

CSV_COLUMNS = ["n", "connected", "yfree_unlabeled", "g_n", "growth_point"]


def _report_row(row: CensusRow) -> dict[str, object]:
    return {
        "n": row.n,
        "connected": row.unlabeled_connected,
        "yfree_unlabeled": row.unlabeled_yfree,
        "g_n": row.labeled_yfree,
        "growth_point": row.growth_point,
    }


def census_csv(rows: list[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(_report_row(row))
    return buf.getvalue()


def census_json(rows: list[CensusRow]) -> str:
    return json.dumps([_report_row(r) for r in rows], sort_keys=True)
