# yclaw/generator.py
"""Seeded synthesis of Y-free graphs.

Random certificates come in three families: kernels with cloned leaves, and
strands or necklaces filled bead by bead against a vertex budget. Output is
a pure function of (seed, params).
"""
from __future__ import annotations

import logging
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field

from yclaw.certificates import (
    BeadProgram,
    BeadSpec,
    Certificate,
    KernelCertificate,
    KernelSpec,
    allocate,
    validate_program,
)
from yclaw.graph import Graph

logger = logging.getLogger(__name__)

Family = Literal["kernel", "strand", "necklace"]


class InfeasibleParamsError(ValueError):
    """Raised when no certificate of the requested family and size exists."""


class GeneratorParams(BaseModel):
    n_target: int = Field(ge=1)
    allow_kernel: bool = True
    allow_strand: bool = True
    allow_necklace: bool = True
    allow_k4: bool = True
    max_t: int = Field(default=4, ge=0)
    max_spikes: int = Field(default=3, ge=0)
    # mean of the (truncated) Poisson spike count
    spike_rate: float = Field(default=1.0, ge=0.0)

    def families(self) -> list[Family]:
        out: list[Family] = []
        if self.allow_kernel:
            out.append("kernel")
        if self.allow_strand:
            out.append("strand")
        if self.allow_necklace:
            out.append("necklace")
        return out


# ------------------------- small orders -------------------------


def _k1() -> KernelCertificate:
    return KernelCertificate(n=1, kernel=KernelSpec(n=1, edges=[], map=[0]))


def _small(family: Family, n: int, rng: np.random.Generator) -> Certificate:
    """Fixed shapes for n <= 3: K1, K2, then P3 or K3."""
    if n == 1:
        return _k1()
    if family == "kernel":
        edges = [(0, 1)] if n == 2 else [(0, 1), (1, 2)] + ([(0, 2)] if rng.random() < 0.5 else [])
        return KernelCertificate(n=n, kernel=KernelSpec(n=n, edges=edges, map=list(range(n))))
    if family == "necklace":
        k11 = BeadSpec(kind="K11t", t=0)
        return allocate(BeadProgram(family="necklace", beads=(k11, k11, k11)))
    if n == 2:
        return allocate(BeadProgram(family="strand", beads=(BeadSpec(kind="K11t"),)))
    if rng.random() < 0.5:
        beads: tuple[BeadSpec, ...] = (BeadSpec(kind="K11t"), BeadSpec(kind="K11t"))
    else:
        beads = (BeadSpec(kind="K11t", t=1),)
    return allocate(BeadProgram(family="strand", beads=beads))


# ------------------------- bead sampling -------------------------


def _bead_options(budget: int, params: GeneratorParams, k4: bool) -> list[BeadSpec]:
    """Beads costing at most ``budget`` new vertices (one primary plus secondaries)."""
    opts: list[BeadSpec] = []
    for t in range(0, min(params.max_t, budget - 1) + 1):
        opts.append(BeadSpec(kind="K11t", t=t))
        if t >= 2:
            opts.append(BeadSpec(kind="K2t", t=t))
    if params.max_t >= 2 and budget >= 3:
        opts.append(BeadSpec(kind="K211"))
    if k4 and params.allow_k4 and params.max_t >= 3 and budget >= 3:
        opts.append(BeadSpec(kind="K4"))
    return opts


def _pick(rng: np.random.Generator, opts: list[BeadSpec]) -> BeadSpec:
    """Uniform over kinds, then uniform over that kind's t values."""
    kinds = sorted({o.kind for o in opts})
    kind = kinds[int(rng.integers(len(kinds)))]
    same = [o for o in opts if o.kind == kind]
    return same[int(rng.integers(len(same)))]


def _spike_count(rng: np.random.Generator, params: GeneratorParams, room: int) -> int:
    return int(min(rng.poisson(params.spike_rate), params.max_spikes, max(room, 0)))


def _strand_beads(rng: np.random.Generator, params: GeneratorParams, budget: int) -> list[BeadSpec]:
    beads: list[BeadSpec] = []
    left = budget - 1  # the first primary
    while left > 0:
        first = not beads
        # a K4 may open the strand, or close it when it uses up the budget exactly
        opts = _bead_options(left, params, k4=first or left == 3)
        bead = _pick(rng, opts)
        beads.append(bead)
        cost = 3 if bead.kind == "K4" else 1 + bead.secondaries
        left -= cost
        if bead.kind == "K4" and not first:
            break
    return beads


def _necklace_beads(
    rng: np.random.Generator, params: GeneratorParams, budget: int
) -> list[BeadSpec]:
    for _ in range(32):
        beads: list[BeadSpec] = []
        left = budget
        while left > 0:
            bead = _pick(rng, _bead_options(left, params, k4=False))
            beads.append(bead)
            left -= 1 + bead.secondaries
        if len(beads) >= 3 or (len(beads) == 2 and any(b.kind != "K11t" for b in beads)):
            return beads
    # a plain cycle is always available for budget >= 3
    return [BeadSpec(kind="K11t")] * budget


def random_program(
    family: Family, rng: np.random.Generator, params: GeneratorParams
) -> BeadProgram:
    n = params.n_target
    # the smallest spiked graphs have three vertices of beads
    spikes = _spike_count(rng, params, n - 3)
    budget = n - spikes
    beads = (_strand_beads if family == "strand" else _necklace_beads)(rng, params, budget)
    program = BeadProgram(family=family, beads=tuple(beads))
    hosts = program.shared_primaries()
    if not hosts:
        # a one-bead strand has nowhere to hang spikes: spend them on beads
        return BeadProgram(family="strand", beads=tuple(_strand_beads(rng, params, n)))
    placed: dict[int, int] = {}
    for _ in range(spikes):
        p = hosts[int(rng.integers(len(hosts)))]
        placed[p] = placed.get(p, 0) + 1
    return BeadProgram(family=family, beads=tuple(beads), spikes=placed)


# ------------------------- kernels -------------------------


def _random_kernel(rng: np.random.Generator, n: int) -> KernelCertificate:
    """Random tree on k <= 6 vertices, extra edges away from the last leaf, clones of leaves."""
    k = min(n, 6)
    edges = {(int(rng.integers(i)), i) for i in range(1, k)}
    last = k - 1
    for u in range(k - 1):
        for v in range(u + 1, k - 1):
            if (u, v) not in edges and rng.random() < 0.3:
                edges.add((u, v))
    kernel = Graph.from_edges(k, sorted(edges))
    leaves = [v for v in kernel.leaves() if k > 2 or v == last]
    clones: dict[int, list[int]] = {}
    nxt = k
    for _ in range(n - k):
        leaf = leaves[int(rng.integers(len(leaves)))]
        clones.setdefault(leaf, []).append(nxt)
        nxt += 1
    spec = KernelSpec(n=k, edges=sorted(edges), map=list(range(k)), clones=clones)
    return KernelCertificate(n=n, kernel=spec)


# ------------------------- public -------------------------


def random_certificate(seed: int, params: GeneratorParams) -> Certificate:
    """A valid certificate of order ``params.n_target`` drawn from the allowed families."""
    families = params.families()
    n = params.n_target
    if n == 2 and families == ["necklace"]:
        raise InfeasibleParamsError("no necklace has two vertices")
    if not families and n > 1:
        raise InfeasibleParamsError("no family allowed")
    rng = np.random.default_rng(seed)
    if n == 1:
        return _k1()
    if n == 2:
        families = [f for f in families if f != "necklace"]
    family: Family = families[int(rng.integers(len(families)))]
    if n <= 3:
        cert = _small(family, n, rng)
    elif family == "kernel":
        cert = _random_kernel(rng, n)
    else:
        cert = allocate(random_program(family, rng, params))
    violations = validate_program(cert)
    if violations:
        raise RuntimeError(f"generator produced an invalid {cert.type}: {violations}")
    if cert.n != n:
        logger.warning("generated order %d instead of %d", cert.n, n)
    logger.debug("seed=%d family=%s n=%d", seed, family, cert.n)
    return cert


def thick_caterpillar(spine_length: int, triangle_mask: int) -> Graph:
    """Spine path 0..spine_length plus one triangle vertex on each masked spine edge."""
    if spine_length < 1:
        raise ValueError(f"spine_length must be >= 1, got {spine_length}")
    edges = [(i, i + 1) for i in range(spine_length)]
    nxt = spine_length + 1
    for i in range(spine_length):
        if triangle_mask >> i & 1:
            edges += [(i, nxt), (i + 1, nxt)]
            nxt += 1
    return Graph.from_edges(nxt, edges)


def random_graph(seed: int, n: int, p: float) -> Graph:
    """G(n, p) with a seeded generator."""
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    pairs = [(u, v) for v in range(n) for u in range(v)]
    return Graph.from_edges(n, [e for e, x in zip(pairs, draws) if x < p])
