# yclaw/certificates.py
"""Structure certificates for Y-free graphs.

A certificate names every host vertex explicitly, so checking it against a
graph is plain edge-set equality. Three shapes exist:

* ``kernel``: a connected graph on at most six vertices plus clones of its
  leaves (extra vertices with the same single neighbour).
* ``strand``: beads strung in a path at their primary vertices, plus spikes.
* ``necklace``: beads strung in a cycle, plus spikes.

``BeadProgram`` is the abstract form (bead kinds and spike counts) and
``allocate`` turns it into a certificate with deterministic vertex ids.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Annotated, Literal, Union

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, TypeAdapter

from yclaw.graph import Graph

logger = logging.getLogger(__name__)

BeadKind = Literal["K4", "K211", "K11t", "K2t"]
Edge = tuple[int, int]


class InvalidCertificateError(ValueError):
    """Raised when a certificate breaks a structural rule; carries the violations."""

    def __init__(self, violations: list[str]) -> None:
        super().__init__("invalid certificate: " + ", ".join(violations))
        self.violations = violations


# ------------------------- models -------------------------


class Bead(BaseModel):
    """One bead; ``t`` is the secondary count of K11t / K2t and 0 otherwise."""

    model_config = ConfigDict(frozen=True)

    kind: BeadKind
    t: int = 0
    primaries: list[int]
    secondaries: list[int] = []

    def vertices(self) -> list[int]:
        return [*self.primaries, *self.secondaries]

    def edges(self) -> list[Edge]:
        ps, ss = self.primaries, self.secondaries
        if self.kind == "K4":
            return [_e(u, v) for u, v in combinations(ps + ss, 2)]
        p, q = ps
        out = [_e(x, s) for s in ss for x in (p, q)]
        if self.kind == "K211":
            out.append(_e(ss[0], ss[1]))
        elif self.kind == "K11t":
            out.append(_e(p, q))
        return out

    def shape_errors(self) -> list[str]:
        nps, nss = len(self.primaries), len(self.secondaries)
        if self.kind == "K4":
            ok = nps == 1 and nss == 3 and self.t == 0
        elif self.kind == "K211":
            ok = nps == 2 and nss == 2 and self.t == 0
        elif self.kind == "K11t":
            ok = nps == 2 and nss == self.t >= 0
        else:
            if self.t < 2:
                return ["K2t-small"]
            ok = nps == 2 and nss == self.t
        return [] if ok else [f"bead-shape:{self.kind}"]


class KernelSpec(BaseModel):
    """Kernel graph on 0..n-1; ``map[i]`` is the host id of kernel vertex i.

    ``clones[i]`` lists the host ids of the extra copies of kernel leaf i.
    """

    n: int
    edges: list[Edge]
    map: list[int]
    clones: dict[int, list[int]] = {}

    def multiplicity(self, leaf: int) -> int:
        return 1 + len(self.clones.get(leaf, []))


class KernelCertificate(BaseModel):
    type: Literal["kernel"] = "kernel"
    n: int
    kernel: KernelSpec


class StrandCertificate(BaseModel):
    type: Literal["strand"] = "strand"
    n: int
    beads: list[Bead]
    spikes: dict[int, list[int]] = {}


class NecklaceCertificate(BaseModel):
    type: Literal["necklace"] = "necklace"
    n: int
    beads: list[Bead]
    spikes: dict[int, list[int]] = {}


Certificate = Annotated[
    Union[KernelCertificate, StrandCertificate, NecklaceCertificate],
    Field(discriminator="type"),
]
CERTIFICATE_ADAPTER: TypeAdapter[Certificate] = TypeAdapter(Certificate)


def load_certificate(data: str | bytes) -> Certificate:
    return CERTIFICATE_ADAPTER.validate_json(data)


def dump_certificate(cert: Certificate) -> dict[str, object]:
    return CERTIFICATE_ADAPTER.dump_python(cert, mode="json")  # type: ignore[no-any-return]


def _e(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ------------------------- program rules -------------------------


def _vertex_errors(n: int, groups: list[list[int]]) -> list[str]:
    """Every id in range, used once, and every host vertex used."""
    errors = []
    flat = [v for grp in groups for v in grp]
    if any(not 0 <= v < n for v in flat):
        errors.append("vertex-out-of-range")
    if len(set(flat)) != len(flat):
        errors.append("vertex-reused")
    if set(range(n)) - set(flat):
        errors.append("unused-vertex")
    return errors


def _aux_graph(beads: list[Bead]) -> nx.Graph:
    aux = nx.Graph()
    for i, bead in enumerate(beads):
        aux.add_node(("b", i))
        aux.add_edges_from((("b", i), ("p", p)) for p in bead.primaries)
    return aux


def _membership(beads: list[Bead]) -> dict[int, int]:
    count: dict[int, int] = {}
    for bead in beads:
        for p in bead.primaries:
            count[p] = count.get(p, 0) + 1
    return count


def _strung_errors(cert: StrandCertificate | NecklaceCertificate) -> list[str]:
    beads = cert.beads
    errors: list[str] = []
    for bead in beads:
        errors += bead.shape_errors()
        if len(set(bead.primaries)) != len(bead.primaries):
            errors.append("vertex-reused")
    if errors:
        return sorted(set(errors))

    primaries = sorted(_membership(beads))
    secondaries = [s for b in beads for s in b.secondaries]
    leaves = [x for xs in cert.spikes.values() for x in xs]
    errors += _vertex_errors(cert.n, [primaries, secondaries, leaves])

    count = _membership(beads)
    if any(c > 2 for c in count.values()):
        errors.append("primary-shared-thrice")

    aux = _aux_graph(beads)
    r = len(beads)
    if isinstance(cert, StrandCertificate):
        if r < 1:
            errors.append("strand-empty")
        else:
            is_path = nx.is_tree(aux) and max(d for _, d in aux.degree) <= 2
            chained = all(
                len(set(beads[i].primaries) & set(beads[i + 1].primaries)) == 1
                for i in range(r - 1)
            )
            if not (is_path and chained):
                errors.append("beads-not-strung")
        for i, bead in enumerate(beads):
            if bead.kind == "K4" and 0 < i < r - 1:
                errors.append("K4-in-middle")
        for key in cert.spikes:
            if count.get(key, 0) == 1:
                errors.append("spike-at-end-primary")
            elif key not in count:
                errors.append("spike-not-at-primary")
    else:
        if r < 2:
            errors.append("necklace-too-short")
        if any(b.kind == "K4" for b in beads):
            errors.append("K4-in-necklace")
        if r == 2 and all(b.kind == "K11t" for b in beads):
            errors.append("two-K11-necklace")
        if r >= 2:
            is_cycle = nx.is_connected(aux) and all(d == 2 for _, d in aux.degree)
            chained = r == 2 or all(
                len(set(beads[i].primaries) & set(beads[(i + 1) % r].primaries)) == 1
                for i in range(r)
            )
            if not (is_cycle and chained):
                errors.append("beads-not-strung")
        for key in cert.spikes:
            if key not in count:
                errors.append("spike-not-at-primary")
    return list(dict.fromkeys(errors))


def _kernel_graph(spec: KernelSpec) -> Graph | None:
    try:
        return Graph.from_edges(spec.n, spec.edges)
    except ValueError:
        return None


def _kernel_errors(cert: KernelCertificate) -> list[str]:
    spec = cert.kernel
    errors: list[str] = []
    if spec.n < 1:
        return ["kernel-empty"]
    if spec.n > 6:
        errors.append("kernel-too-large")
    k = _kernel_graph(spec)
    if k is None:
        return errors + ["kernel-edge-invalid"]
    if not k.is_connected():
        errors.append("kernel-disconnected")
    if len(spec.map) != spec.n:
        errors.append("kernel-map-size")
    cloned = {leaf for leaf, xs in spec.clones.items() if xs}
    for leaf in cloned:
        if not 0 <= leaf < spec.n or k.degree(leaf) != 1:
            errors.append("clone-of-non-leaf")
        elif k.neighbors(leaf)[0] in cloned and leaf > k.neighbors(leaf)[0]:
            # cloning one end of K2 turns the other end into a non-leaf
            errors.append("clone-of-non-leaf")
    errors += _vertex_errors(cert.n, [spec.map, *spec.clones.values()])
    return list(dict.fromkeys(errors))


def validate_program(cert: Certificate) -> list[str]:
    """Every violated structural rule as a tag; an empty list means valid."""
    if isinstance(cert, KernelCertificate):
        return _kernel_errors(cert)
    return _strung_errors(cert)


# ------------------------- realization -------------------------


def certificate_edges(cert: Certificate) -> set[Edge]:
    if isinstance(cert, KernelCertificate):
        spec = cert.kernel
        edges = {_e(spec.map[u], spec.map[v]) for u, v in spec.edges}
        for leaf, extra in spec.clones.items():
            if not extra:
                continue
            nbr = next(v if u == leaf else u for u, v in spec.edges if leaf in (u, v))
            edges |= {_e(x, spec.map[nbr]) for x in extra}
        return edges
    edges = {e for bead in cert.beads for e in bead.edges()}
    edges |= {_e(p, x) for p, xs in cert.spikes.items() for x in xs}
    return edges


def realize(cert: Certificate) -> Graph:
    """The host graph the certificate describes."""
    violations = validate_program(cert)
    if violations:
        raise InvalidCertificateError(violations)
    return Graph.from_edges(cert.n, sorted(certificate_edges(cert)))


def verify_certificate(cert: Certificate, g: Graph) -> bool:
    """Valid program and exactly the edge set of g (labelled equality)."""
    violations = validate_program(cert)
    if violations:
        logger.info("certificate rejected: %s", ",".join(violations))
        return False
    return cert.n == g.n and certificate_edges(cert) == set(g.edges)


# ------------------------- programs -------------------------


class BeadSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: BeadKind
    t: int = 0

    @property
    def secondaries(self) -> int:
        return {"K4": 3, "K211": 2}.get(self.kind, self.t)


class BeadProgram(BaseModel):
    """Abstract strand or necklace; ``spikes`` maps a primary position to a leaf count."""

    model_config = ConfigDict(frozen=True)

    family: Literal["strand", "necklace"]
    beads: tuple[BeadSpec, ...]
    spikes: dict[int, int] = {}

    def primary_slots(self) -> list[tuple[int, ...]]:
        """Primary positions of each bead, in chain or ring order."""
        r = len(self.beads)
        if self.family == "necklace":
            return [(i, (i + 1) % r) for i in range(r)]
        slots: list[tuple[int, ...]] = []
        pos = 0
        for bead in self.beads:
            if bead.kind == "K4":
                slots.append((pos,))
            else:
                slots.append((pos, pos + 1))
                pos += 1
        return slots

    @property
    def primary_count(self) -> int:
        return len({p for slot in self.primary_slots() for p in slot})

    @property
    def order(self) -> int:
        return (
            self.primary_count
            + sum(b.secondaries for b in self.beads)
            + sum(self.spikes.values())
        )

    def shared_primaries(self) -> list[int]:
        count: dict[int, int] = {}
        for slot in self.primary_slots():
            for p in slot:
                count[p] = count.get(p, 0) + 1
        return sorted(p for p, c in count.items() if c == 2)


def allocate(program: BeadProgram) -> StrandCertificate | NecklaceCertificate:
    """Assign ids: primaries in order, then secondaries bead by bead, then spike leaves."""
    slots = program.primary_slots()
    nxt = program.primary_count
    beads = []
    for spec, slot in zip(program.beads, slots):
        secs = list(range(nxt, nxt + spec.secondaries))
        nxt += spec.secondaries
        beads.append(Bead(kind=spec.kind, t=spec.t, primaries=list(slot), secondaries=secs))
    spikes: dict[int, list[int]] = {}
    for p in sorted(program.spikes):
        count = program.spikes[p]
        if count:
            spikes[p] = list(range(nxt, nxt + count))
            nxt += count
    if program.family == "strand":
        return StrandCertificate(n=nxt, beads=beads, spikes=spikes)
    return NecklaceCertificate(n=nxt, beads=beads, spikes=spikes)


def program_order(program: BeadProgram) -> int:
    """Vertex count of the graph ``allocate(program)`` realizes."""
    return program.order
