# yclaw/pathdecomp.py
"""Path decompositions built from certificates, and a checker that ignores how they were built."""
from __future__ import annotations

import logging
import math

from pydantic import BaseModel, computed_field

from yclaw.certificates import (
    Bead,
    Certificate,
    KernelCertificate,
    NecklaceCertificate,
    realize,
)
from yclaw.graph import Graph
from yclaw.recognizer import recognize

logger = logging.getLogger(__name__)


class NotYFreeError(ValueError):
    """Raised when a decomposition is requested for a graph that contains Y."""


class PathDecomposition(BaseModel):
    bags: list[list[int]]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


class DecompositionReport(BaseModel):
    ok: bool
    width: int
    violations: list[str] = []


# ------------------------- builders -------------------------


def _oriented(beads: list[Bead], ring: bool) -> list[tuple[int, int]]:
    """(left, right) primaries of each bead in chain order; a K4 has left == right."""
    r = len(beads)
    out: list[tuple[int, int]] = []
    for i, bead in enumerate(beads):
        ps = bead.primaries
        if len(ps) == 1:
            out.append((ps[0], ps[0]))
            continue
        if ring and r == 2:
            left = ps[0] if i == 0 else out[0][1]
        elif i > 0 or ring:
            prev = beads[i - 1]
            left = ps[0] if ps[0] in prev.primaries else ps[1]
        elif r > 1:
            left = ps[0] if ps[0] not in beads[1].primaries else ps[1]
        else:
            left = ps[0]
        out.append((left, ps[1] if left == ps[0] else ps[0]))
    return out


def _bead_bags(bead: Bead, left: int, right: int) -> list[list[int]]:
    ss = bead.secondaries
    if bead.kind == "K4":
        return [[left, *ss]]
    if bead.kind == "K211":
        return [[left, *ss], [*ss, right]]
    if not ss:
        return [[left, right]]
    return [[left, right, s] for s in ss]


def _chain_bags(beads: list[Bead], spikes: dict[int, list[int]], ring: bool) -> list[list[int]]:
    bags: list[list[int]] = []
    emitted: set[int] = set()

    def spike_bags(p: int) -> None:
        if p not in emitted:
            emitted.add(p)
            bags.extend([p, x] for x in spikes.get(p, []))

    for bead, (left, right) in zip(beads, _oriented(beads, ring)):
        spike_bags(left)
        bags.extend(_bead_bags(bead, left, right))
    if beads:
        spike_bags(_oriented(beads, ring)[-1][1])
    return bags


def _kernel_bags(cert: KernelCertificate) -> list[list[int]]:
    spec = cert.kernel
    k = spec.n
    u = spec.map
    groups: dict[int, list[int]] = {}
    for leaf, extra in spec.clones.items():
        if not extra:
            continue
        nbr = next(b if a == leaf else a for a, b in spec.edges if leaf in (a, b))
        groups.setdefault(nbr, []).extend(extra)
    half = math.ceil(k / 2)
    left = [[*u[: j + 1], x] for j in range(half) for x in groups.get(j, [])]
    right = [[*u[j:], x] for j in range(half, k) for x in groups.get(j, [])]
    return left + [list(u)] + right


def decompose(cert: Certificate) -> PathDecomposition:
    """Width at most 3 for strands and necklaces (2 without K4), at most 5 for kernels."""
    realize(cert)
    if isinstance(cert, KernelCertificate):
        bags = _kernel_bags(cert)
    elif isinstance(cert, NecklaceCertificate):
        v1 = _oriented(cert.beads, ring=True)[0][0]
        bags = [sorted({v1, *b}) for b in _chain_bags(cert.beads, cert.spikes, ring=True)]
    else:
        bags = _chain_bags(cert.beads, cert.spikes, ring=False)
    pd = PathDecomposition(bags=[sorted(b) for b in bags])
    logger.debug("decompose %s n=%d bags=%d width=%d", cert.type, cert.n, len(bags), pd.width)
    return pd


def decompose_graph(g: Graph) -> tuple[Certificate, PathDecomposition]:
    """Recognize a connected graph first, then decompose it from its certificate."""
    result = recognize(g)
    if result.certificate is None:
        raise NotYFreeError(f"graph contains Y: {result.witness}")
    return result.certificate, decompose(result.certificate)


# ------------------------- checker -------------------------


def verify_decomposition(g: Graph, pd: PathDecomposition) -> DecompositionReport:
    """Check coverage of vertices and edges and contiguity of every vertex's bags."""
    violations: list[str] = []
    where: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, bag in enumerate(pd.bags):
        for v in bag:
            if v not in where:
                violations.append(f"vertex {v} out of range")
            elif not where[v] or where[v][-1] != i:
                where[v].append(i)
    for v, idx in where.items():
        if not idx:
            violations.append(f"vertex {v} missing")
        elif idx[-1] - idx[0] != len(idx) - 1:
            violations.append(f"vertex {v} non-contiguous")
    sets = [set(b) for b in pd.bags]
    for a, b in g.edges:
        if not any(a in s and b in s for s in sets):
            violations.append(f"edge {a}-{b} uncovered")
    return DecompositionReport(ok=not violations, width=pd.width, violations=violations)
