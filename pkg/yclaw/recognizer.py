# yclaw/recognizer.py
"""Certifying recognition of Y-free graphs.

``recognize`` either finds a Y or returns a certificate that verifies against
the input: first the leaf-clone kernel (at most six vertices), then a spiked
strand read off the block structure, then a spiked necklace read off the
despiked 2-connected core.
"""
from __future__ import annotations

import logging
from collections.abc import Iterable
from itertools import combinations, product
from math import prod
from typing import Literal, TypeVar

import networkx as nx
from pydantic import BaseModel

from yclaw.certificates import (
    Bead,
    Certificate,
    KernelCertificate,
    KernelSpec,
    NecklaceCertificate,
    StrandCertificate,
    verify_certificate,
)
from yclaw.config import settings
from yclaw.graph import (
    DisconnectedGraphError,
    Graph,
    blocks_and_cutvertices,
    connected_components,
)
from yclaw.oracle import YWitness, find_y_subgraph

logger = logging.getLogger(__name__)

C = TypeVar("C", KernelCertificate, StrandCertificate, NecklaceCertificate)


class RecognitionError(RuntimeError):
    """Raised when a connected Y-free graph receives no certificate."""


class RecognitionResult(BaseModel):
    verdict: Literal["contains-Y", "Y-free"]
    witness: YWitness | None = None
    certificate: Certificate | None = None

    @property
    def y_free(self) -> bool:
        return self.verdict == "Y-free"


class ComponentResult(RecognitionResult):
    """Result for one component; ids are local to the component."""

    component: list[int]


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(f"{what} needs a connected graph; run it per component")


# ------------------------- kernels -------------------------


def contract_leaf_clones(g: Graph) -> tuple[Graph, dict[int, list[int]]]:
    """Keep one leaf per neighbour; classes map each kept leaf to its whole class.

    Kernel vertex i is the i-th smallest surviving host vertex.
    """
    _require_connected(g, "contract_leaf_clones")
    by_anchor: dict[int, list[int]] = {}
    for leaf in g.leaves():
        by_anchor.setdefault(g.neighbors(leaf)[0], []).append(leaf)
    classes = {min(ls): sorted(ls) for ls in by_anchor.values()}
    dropped = {x for ls in classes.values() for x in ls[1:]}
    kernel, _ = g.induced(v for v in range(g.n) if v not in dropped)
    return kernel, classes


def kernel_certificate(g: Graph) -> KernelCertificate | None:
    kernel, classes = contract_leaf_clones(g)
    if kernel.n > 6:
        return None
    keep = [v for v in range(g.n) if v not in {x for ls in classes.values() for x in ls[1:]}]
    local = {v: i for i, v in enumerate(keep)}
    clones = {local[rep]: ls[1:] for rep, ls in classes.items() if len(ls) > 1}
    spec = KernelSpec(n=kernel.n, edges=list(kernel.edges), map=keep, clones=clones)
    return KernelCertificate(n=g.n, kernel=spec)


# ------------------------- beads -------------------------


def classify_block(h: Graph, attach: Iterable[int]) -> Bead | None:
    """Read block h as a bead whose primaries include every attachment vertex.

    Ids are local to h; two primaries are returned in increasing order.
    """
    attach = set(attach)
    nb, mb = h.n, h.m
    if len(attach) > 2 or nb < 2:
        return None
    if nb == 2:
        return Bead(kind="K11t", t=0, primaries=[0, 1]) if mb == 1 else None
    if nb == 4 and mb == 6:
        if len(attach) > 1:
            return None
        p = min(attach, default=0)
        return Bead(kind="K4", primaries=[p], secondaries=[v for v in range(4) if v != p])

    candidates = [v for v in range(nb) if h.degree(v) >= nb - 2]
    for p, q in combinations(candidates, 2):
        if not attach <= {p, q}:
            continue
        secs = [v for v in range(nb) if v not in (p, q)]
        if not all(h.has_edge(s, p) and h.has_edge(s, q) for s in secs):
            continue
        joined = h.has_edge(p, q)
        inner = mb - 2 * len(secs) - joined
        if joined and inner == 0:
            return Bead(kind="K11t", t=len(secs), primaries=[p, q], secondaries=secs)
        if not joined and inner == 0 and len(secs) >= 2:
            return Bead(kind="K2t", t=len(secs), primaries=[p, q], secondaries=secs)
        if not joined and inner == 1 and len(secs) == 2:
            return Bead(kind="K211", primaries=[p, q], secondaries=secs)
    return None


def _edge_bead(u: int, v: int) -> Bead:
    return Bead(kind="K11t", t=0, primaries=[u, v])


def _host_bead(bead: Bead, keep: list[int], left: int | None) -> Bead:
    """Map a local bead to host ids, putting ``left`` first when given."""
    ps = [keep[p] for p in bead.primaries]
    if left is not None and len(ps) == 2 and ps[0] != left:
        ps.reverse()
    return bead.model_copy(
        update={"primaries": ps, "secondaries": [keep[s] for s in bead.secondaries]}
    )


# ------------------------- strands -------------------------


def _chain(core: list[frozenset[int]]) -> list[frozenset[int]] | None:
    """Order the core blocks as a path, or None if they do not form one."""
    if len(core) == 1:
        return core
    seen: dict[int, int] = {}
    for b in core:
        for v in b:
            seen[v] = seen.get(v, 0) + 1
    if any(c > 2 for c in seen.values()):
        return None
    bg = nx.Graph()
    bg.add_nodes_from(range(len(core)))
    bg.add_edges_from((i, j) for i, j in combinations(range(len(core)), 2) if core[i] & core[j])
    if not nx.is_tree(bg) or max(d for _, d in bg.degree) > 2:
        return None
    ends = [i for i, d in bg.degree if d == 1]
    start = min(ends, key=lambda i: sorted(core[i]))
    order = list(nx.dfs_preorder_nodes(bg, start))
    return [core[i] for i in order]


def parse_strand(g: Graph) -> StrandCertificate | None:
    """Read g as a spiked strand from its blocks; None if it is not one."""
    _require_connected(g, "parse_strand")
    if g.n == 1:
        return None
    if g.n == 2:
        return StrandCertificate(n=2, beads=[_edge_bead(0, 1)])

    deg = g.degrees()
    dec = blocks_and_cutvertices(g)
    leaves_at: dict[int, list[int]] = {}
    core: list[frozenset[int]] = []
    for block in dec.blocks:
        if len(block) == 2 and any(deg[v] == 1 for v in block):
            leaf, anchor = sorted(block, key=lambda v: deg[v])
            leaves_at.setdefault(anchor, []).append(leaf)
        else:
            core.append(block)
    for ls in leaves_at.values():
        ls.sort()

    if not core:
        # a star: two leaves become end beads, the rest are spikes
        (center,) = leaves_at
        ls = leaves_at[center]
        spikes = {center: ls[2:]} if ls[2:] else {}
        beads = [_edge_bead(ls[0], center), _edge_bead(center, ls[1])]
        return _checked(StrandCertificate(n=g.n, beads=beads, spikes=spikes), g)

    chain = _chain(core)
    if chain is None:
        return None
    k = len(chain)
    shared = [next(iter(chain[i] & chain[i + 1])) for i in range(k - 1)]
    ends: dict[int, list[int]] = {i: [] for i in range(k)}
    for anchor in leaves_at:
        if anchor in shared:
            continue
        home = [i for i in range(k) if anchor in chain[i]]
        if not home or (0 < home[0] < k - 1):
            return None
        ends[home[0]].append(anchor)
    if k > 1 and (len(ends[0]) > 1 or len(ends[k - 1]) > 1):
        return None

    beads: list[Bead] = []
    for i, block in enumerate(chain):
        sub, keep = g.induced(block)
        local = {v: j for j, v in enumerate(keep)}
        attach = ends[i] + ([shared[i - 1]] if i else []) + ([shared[i]] if i < k - 1 else [])
        bead = classify_block(sub, (local[v] for v in attach))
        if bead is None:
            return None
        if i:
            left: int | None = shared[i - 1]
        elif k > 1:
            left = next((keep[p] for p in bead.primaries if keep[p] != shared[0]), None)
        else:
            # single core block: a lone anchor goes on the right
            anchors = sorted(ends[0])
            others = [keep[p] for p in bead.primaries if keep[p] not in anchors]
            left = anchors[0] if len(anchors) == 2 else (others[0] if others else None)
        beads.append(_host_bead(bead, keep, left))

    # an anchor at a free end primary: its first leaf extends the strand
    left_anchor: int | None = None
    right_anchor: int | None = None
    if k > 1:
        left_anchor = ends[0][0] if ends[0] else None
        right_anchor = ends[k - 1][0] if ends[k - 1] else None
    elif len(ends[0]) == 2:
        left_anchor, right_anchor = sorted(ends[0])
    elif ends[0]:
        right_anchor = ends[0][0]

    spikes: dict[int, list[int]] = {s: leaves_at[s] for s in shared if s in leaves_at}
    if left_anchor is not None:
        beads.insert(0, _edge_bead(leaves_at[left_anchor][0], left_anchor))
        spikes[left_anchor] = leaves_at[left_anchor][1:]
    if right_anchor is not None:
        beads.append(_edge_bead(right_anchor, leaves_at[right_anchor][0]))
        spikes[right_anchor] = leaves_at[right_anchor][1:]
    spikes = {p: xs for p, xs in spikes.items() if xs}
    return _checked(StrandCertificate(n=g.n, beads=beads, spikes=spikes), g)


def _checked(cert: C, g: Graph) -> C | None:
    if verify_certificate(cert, g):
        return cert
    logger.debug("candidate %s certificate did not verify", cert.type)
    return None


# ------------------------- necklaces -------------------------


def _default_primaries(h: Graph, forced: set[int]) -> set[int]:
    """Primary set implied by local degree patterns in the despiked core."""
    deg = h.degrees()
    primaries = set(forced)
    for v in range(h.n):
        if v in forced:
            continue
        if deg[v] == 2:
            a, b = h.neighbors(v)
            twin = any(
                w != v and w not in forced and h.adj[w] == h.adj[v] for w in range(h.n)
            )
            if not (h.has_edge(a, b) or twin):
                primaries.add(v)
        elif deg[v] == 3:
            partner = any(
                deg[y] == 3
                and y not in forced
                and h.adj[y] & ~(1 << v) == h.adj[v] & ~(1 << y)
                for y in h.neighbors(v)
            )
            if not partner:
                primaries.add(v)
        else:
            primaries.add(v)
    return primaries


def _beads_from_primaries(h: Graph, primaries: set[int]) -> list[Bead] | None:
    """Group secondaries by their primary pair and order the beads around the ring."""
    singles: dict[tuple[int, int], list[int]] = {}
    pairs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for s in range(h.n):
        if s in primaries:
            continue
        pn = [u for u in h.neighbors(s) if u in primaries]
        sn = [u for u in h.neighbors(s) if u not in primaries]
        if len(pn) != 2 or len(sn) > 1:
            return None
        key = (pn[0], pn[1])
        if not sn:
            singles.setdefault(key, []).append(s)
            continue
        c = sn[0]
        if [u for u in h.neighbors(c) if u in primaries] != list(key):
            return None
        if s < c:
            pairs.setdefault(key, []).append((s, c))

    beads: list[Bead] = []
    consumed: set[tuple[int, int]] = set()
    for key in sorted(set(singles) | set(pairs)):
        a, b = key
        for c, d in pairs.get(key, []):
            beads.append(Bead(kind="K211", primaries=[a, b], secondaries=[c, d]))
        ts = singles.get(key, [])
        if ts and h.has_edge(a, b):
            beads.append(Bead(kind="K11t", t=len(ts), primaries=[a, b], secondaries=ts))
            consumed.add(key)
        elif len(ts) >= 2:
            beads.append(Bead(kind="K2t", t=len(ts), primaries=[a, b], secondaries=ts))
        elif ts:
            return None
    for a, b in h.edges:
        if a in primaries and b in primaries and (a, b) not in consumed:
            beads.append(_edge_bead(a, b))

    if len(beads) == 1:
        (only,) = beads
        a, b = only.primaries
        ss = only.secondaries
        if only.kind == "K2t" and only.t >= 4:
            beads = [
                Bead(kind="K2t", t=2, primaries=[a, b], secondaries=ss[:2]),
                Bead(kind="K2t", t=only.t - 2, primaries=[a, b], secondaries=ss[2:]),
            ]
        elif only.kind == "K11t" and only.t >= 2:
            beads = [_edge_bead(a, b), Bead(kind="K2t", t=only.t, primaries=[a, b], secondaries=ss)]
        else:
            return None
    return _ring(beads, primaries)


def _ring(beads: list[Bead], primaries: set[int]) -> list[Bead] | None:
    """Cyclic order starting at the smallest primary, each bead oriented along the ring."""
    at: dict[int, list[int]] = {p: [] for p in primaries}
    for i, bead in enumerate(beads):
        for p in bead.primaries:
            at[p].append(i)
    if len(beads) < 2 or any(len(ix) != 2 for ix in at.values()):
        return None

    def flip(bead: Bead, left: int) -> Bead:
        a, b = bead.primaries
        return bead if a == left else bead.model_copy(update={"primaries": [b, a]})

    start = min(primaries)
    if len(beads) == 2:
        other = next(p for p in beads[0].primaries if p != start)
        return [flip(beads[0], start), flip(beads[1], other)]
    i = min(at[start], key=lambda j: max(beads[j].primaries))
    out: list[Bead] = []
    left = start
    seen: set[int] = set()
    while i not in seen:
        seen.add(i)
        bead = flip(beads[i], left)
        out.append(bead)
        left = bead.primaries[1]
        i = next(j for j in at[left] if j != i)
    if len(out) != len(beads) or left != start:
        return None
    return out


def _twin_classes(h: Graph, forced: set[int]) -> list[list[int]]:
    free = [v for v in range(h.n) if v not in forced]
    opens: dict[int, list[int]] = {}
    for v in free:
        opens.setdefault(h.adj[v], []).append(v)
    groups: dict[tuple[str, int], list[int]] = {}
    for v in free:
        if len(opens[h.adj[v]]) > 1:
            groups.setdefault(("open", h.adj[v]), []).append(v)
        else:
            groups.setdefault(("closed", h.adj[v] | 1 << v), []).append(v)
    return sorted(groups.values())


def _necklace_readings(h: Graph, forced: set[int]) -> Iterable[set[int]]:
    """Candidate primary sets: the default reading, then counts per twin class."""
    yield _default_primaries(h, forced)
    classes = _twin_classes(h, forced)
    size = prod(len(c) + 1 for c in classes)
    if size > settings.necklace_search_cap:
        logger.warning("necklace search skipped: %d readings exceed cap", size)
        return
    for counts in product(*(range(len(c) + 1) for c in classes)):
        yield set(forced).union(*(c[:k] for c, k in zip(classes, counts)))


def parse_necklace(g: Graph) -> NecklaceCertificate | None:
    """Read g as a spiked necklace: leaves are spikes, the rest must be 2-connected."""
    _require_connected(g, "parse_necklace")
    if g.n < 3:
        return None
    leaves = set(g.leaves())
    spikes: dict[int, list[int]] = {}
    for leaf in sorted(leaves):
        spikes.setdefault(g.neighbors(leaf)[0], []).append(leaf)
    h, keep = g.induced(v for v in range(g.n) if v not in leaves)
    if h.n < 3 or not nx.is_biconnected(h.to_networkx()):
        return None
    local = {v: i for i, v in enumerate(keep)}
    forced = {local[a] for a in spikes} | {v for v in range(h.n) if h.degree(v) >= 4}

    tried: set[frozenset[int]] = set()
    for primaries in _necklace_readings(h, forced):
        if frozenset(primaries) in tried:
            continue
        tried.add(frozenset(primaries))
        beads = _beads_from_primaries(h, primaries)
        if beads is None:
            continue
        host = [_host_bead(b, keep, keep[b.primaries[0]]) for b in beads]
        cert = _checked(NecklaceCertificate(n=g.n, beads=host, spikes=spikes), g)
        if cert is not None:
            return cert
    return None


# ------------------------- recognition -------------------------


def recognize(g: Graph) -> RecognitionResult:
    """Y witness, or a certificate: kernel first, then strand, then necklace."""
    _require_connected(g, "recognize")
    witness = find_y_subgraph(g)
    if witness is not None:
        return RecognitionResult(verdict="contains-Y", witness=witness)
    cert: Certificate | None = kernel_certificate(g)
    if cert is None:
        cert = parse_strand(g) or parse_necklace(g)
    if cert is None or not verify_certificate(cert, g):
        raise RecognitionError(f"no certificate for Y-free graph n={g.n} m={g.m}")
    logger.info("recognized n=%d as %s", g.n, cert.type)
    return RecognitionResult(verdict="Y-free", certificate=cert)


def recognize_components(g: Graph) -> list[ComponentResult]:
    """Recognize each component separately (empty for the empty graph)."""
    out = []
    for part in connected_components(g):
        sub, keep = g.induced(part)
        result = recognize(sub)
        out.append(ComponentResult(component=keep, **dict(result)))
    return out
