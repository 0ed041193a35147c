"""Forward construction: random generation, verification, bounded search."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional

from .attach import (
    AttachKind,
    AttachSpec,
    K_TAGS,
    OpClass,
    THREE_TAGS,
    TWO_TAGS,
    _profile_certificate,
    _profile_tag,
    _validate_against_host,
    apply_attachment,
)
from .coreops import CoreCertificate, core, is_core, series_expand
from .graph import Graph, PreconditionError, are_isomorphic, vertex_connectivity
from .named import complete, cycle
from .trace import ConstructionTrace


def _tags_for(k: int) -> frozenset:
    if k == 2:
        return TWO_TAGS
    if k == 3:
        return THREE_TAGS
    return K_TAGS


def _arm_length(rng: random.Random, mean: float, cap: int) -> int:
    # geometric with the requested mean, truncated
    p = 1.0 / mean
    length = 1
    while length < cap and rng.random() > p:
        length += 1
    return length


_MAX_PROPOSALS = 300


def _propose_step(rng: random.Random, g: Graph, k: int, arm_mean: float, arm_cap: int) -> AttachSpec:
    """Rejection-sample one admissible attachment against host ``g``.

    Falls back to a guaranteed-admissible step (length-2 path for k=2,
    all-core Y for k=3, all-core star for k >= 4) if sampling stalls, which
    can happen when the host core is complete and leaves no non-adjacent
    anchor pair.
    """
    cert = core(g)
    vs = sorted(g.vertices)
    tags = _tags_for(k)
    for _ in range(_MAX_PROPOSALS):
        if k == 2:
            kind = AttachKind.HPATH
        elif k == 3:
            kind = AttachKind.HPATH if rng.random() < 0.55 else AttachKind.HY
        else:
            kind = AttachKind.HPATH if rng.random() < 0.4 else AttachKind.KSTAR
        count = {AttachKind.HPATH: 2, AttachKind.HY: 3}.get(kind, k)
        if len(vs) < count:
            continue
        anchors = tuple(rng.sample(vs, count))
        arms = tuple(_arm_length(rng, arm_mean, arm_cap) for _ in range(1 if kind is AttachKind.HPATH else count))
        try:
            spec = AttachSpec(kind=kind, anchors=anchors, arms=arms)
            _validate_against_host(g, spec)
        except PreconditionError:
            continue
        if _profile_tag(_profile_certificate(g, spec, cert), spec, k) in tags:
            return spec
    core_vs = sorted(cert.core.vertices)
    if k == 2:
        return AttachSpec(AttachKind.HPATH, tuple(vs[:2]), (2,))
    if k == 3:
        return AttachSpec(AttachKind.HY, tuple(core_vs[:3]), (1, 1, 1))
    return AttachSpec(AttachKind.KSTAR, tuple(core_vs[:k]), (1,) * k)


def _seed_graph(rng: random.Random, k: int) -> Graph:
    if k == 2:
        return cycle(rng.randint(3, 6))
    if k == 3:
        g = complete(4)
        for _ in range(rng.randint(0, 2)):
            g = series_expand(g, sorted(g.edges)[rng.randrange(g.m)], max(g.vertices) + 1)
        return g
    return complete(k + 1)


def generate(seed_rng: int, k: int, steps: int, *, arm_mean: float = 1.5, arm_cap: int = 4) -> ConstructionTrace:
    """A random construction trace, deterministic in ``seed_rng``.

    Every emitted step is admissible against the partially built graph, so
    replaying any prefix yields a graph whose core is k-connected.
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    if steps < 0:
        raise PreconditionError("step count must be non-negative")
    rng = random.Random(seed_rng)
    seed = _seed_graph(rng, k)
    g = seed
    out: list[AttachSpec] = []
    for _ in range(steps):
        spec = _propose_step(rng, g, k, arm_mean, arm_cap)
        out.append(spec)
        g = apply_attachment(g, spec)
    return ConstructionTrace(k=k, seed=seed, steps=tuple(out), rng_seed=seed_rng)


@dataclass(frozen=True)
class StepReport:
    index: int
    spec: AttachSpec
    opclass: OpClass
    core_vertices: int
    core_edges: int
    core_connectivity: int
    admissible: bool
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    k: int
    seed_ok: bool
    seed_core_connectivity: int
    steps: tuple[StepReport, ...]
    ok: bool


def _seed_family_ok(seed: Graph, k: int) -> bool:
    if not seed.is_connected() or seed.n < 2:
        return False
    if k == 2:
        return all(seed.degree(v) == 2 for v in seed.vertices)
    if k == 3:
        return are_isomorphic(core(seed).core, complete(4)) is not None
    return is_core(seed) and vertex_connectivity(seed) >= k


def verify(trace: ConstructionTrace) -> VerifyReport:
    """Re-derive every intermediate core and its connectivity independently.

    Each step is classified by anchor profile; the resulting core's
    connectivity comes from the flow-based oracle. The overall verdict
    requires a legal seed, every step admissible, and every intermediate
    core at least k-connected.
    """
    k = trace.k
    g = trace.seed
    seed_cert = core(g)
    seed_conn = vertex_connectivity(seed_cert.core)
    seed_ok = _seed_family_ok(g, k) and seed_conn >= k
    tags = _tags_for(k)
    reports = []
    all_ok = seed_ok
    cert = seed_cert
    for i, spec in enumerate(trace.steps):
        try:
            _validate_against_host(g, spec)
            if spec.kind is AttachKind.KSTAR and spec.k != k:
                raise PreconditionError(f"star width {spec.k} in a k={k} trace")
            if spec.kind is AttachKind.HY and k != 3:
                raise PreconditionError(f"Y attachment in a k={k} trace")
            if k == 2 and spec.kind is not AttachKind.HPATH:
                raise PreconditionError(f"{spec.kind.value} attachment in a k=2 trace")
        except PreconditionError as exc:
            raise PreconditionError(f"step {i}: {exc}") from exc
        tag = _profile_tag(_profile_certificate(g, spec, cert), spec, k)
        g = apply_attachment(g, spec)
        new_cert = core(g)
        oc = OpClass(lam=new_cert.core.n - cert.core.n, mu=new_cert.core.m - cert.core.m, tag=tag)
        conn = vertex_connectivity(new_cert.core)
        admissible = tag in tags
        ok = admissible and conn >= k
        reports.append(
            StepReport(
                index=i,
                spec=spec,
                opclass=oc,
                core_vertices=new_cert.core.n,
                core_edges=new_cert.core.m,
                core_connectivity=conn,
                admissible=admissible,
                ok=ok,
            )
        )
        all_ok = all_ok and ok
        cert = new_cert
    return VerifyReport(k=k, seed_ok=seed_ok, seed_core_connectivity=seed_conn, steps=tuple(reports), ok=all_ok)


# ---------------------------------------------------------------------------
# Bounded exhaustive search for a construction between two given graphs.
# ---------------------------------------------------------------------------


class _IsoStore:
    """Set of graphs up to isomorphism, bucketed by cheap invariants."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Graph]] = {}

    @staticmethod
    def _key(g: Graph) -> tuple:
        return (g.n, g.m, tuple(sorted(g.degree(v) for v in g.vertices)))

    def add(self, g: Graph) -> bool:
        """Insert; returns False when an isomorphic member already exists."""
        bucket = self._buckets.setdefault(self._key(g), [])
        for member in bucket:
            if are_isomorphic(g, member) is not None:
                return False
        bucket.append(g)
        return True


def _candidate_specs(state: Graph, cert: CoreCertificate, k: int, arm_cap: int) -> Iterator[AttachSpec]:
    vs = sorted(state.vertices)
    tags = _tags_for(k)
    kinds: list[tuple[AttachKind, int]] = [(AttachKind.HPATH, 2)]
    if k == 3:
        kinds.append((AttachKind.HY, 3))
    elif k >= 4:
        kinds.append((AttachKind.KSTAR, k))
    for kind, count in kinds:
        if len(vs) < count:
            continue
        arm_slots = 1 if kind is AttachKind.HPATH else count
        for anchors in combinations(vs, count):
            probe = AttachSpec(kind=kind, anchors=anchors, arms=(1,) * arm_slots)
            if _profile_tag(_profile_certificate(state, probe, cert), probe, k) not in tags:
                continue
            for arms in product(range(1, arm_cap + 1), repeat=arm_slots):
                spec = AttachSpec(kind=kind, anchors=anchors, arms=arms)
                try:
                    _validate_against_host(state, spec)
                except PreconditionError:
                    continue
                yield spec


def _seed_states(start: Graph, budget: int) -> list[Graph]:
    """``start`` plus up to ``budget`` subdivisions, deduplicated up to isomorphism.

    Subdivided variants matter: admissible steps only ever add core edges, so
    degree-2 material the target needs on its contracted paths must already
    be present in the seed.
    """
    store = _IsoStore()
    store.add(start)
    seeds = [start]
    frontier = [start]
    for _ in range(budget):
        nxt = []
        for g in frontier:
            fresh = max(g.vertices) + 1
            for edge in sorted(g.edges):
                g2 = series_expand(g, edge, fresh)
                if store.add(g2):
                    nxt.append(g2)
        seeds.extend(nxt)
        frontier = nxt
    return seeds


def search_construction_exists(
    start: Graph, target: Graph, max_steps: int, k: int
) -> Optional[ConstructionTrace]:
    """Breadth-first search over admissible attachments from ``start``.

    Succeeds on any state whose core is isomorphic to the target's core;
    returns ``None`` once the bounded space is exhausted. Seeds range over
    ``start`` and its subdivisions up to the core vertex deficit. Intended
    for small instances (target of at most ~8 vertices).
    """
    if k < 2:
        raise PreconditionError("k must be at least 2")
    for g, name in ((start, "start"), (target, "target")):
        if not g.is_connected() or g.n < 2:
            raise PreconditionError(f"{name} graph must be connected with at least 2 vertices")
    target_core = core(target).core
    start_core = core(start).core
    if vertex_connectivity(target_core) < k or vertex_connectivity(start_core) < k:
        return None
    t_n, t_m = target_core.n, target_core.m
    if start_core.n > t_n or start_core.m > t_m:
        return None

    seen = _IsoStore()
    queue: deque[tuple[Graph, Graph, tuple[AttachSpec, ...]]] = deque()
    for seed in _seed_states(start, max(0, t_n - start_core.n)):
        if are_isomorphic(core(seed).core, target_core) is not None:
            return ConstructionTrace(k=k, seed=seed, steps=())
        if seen.add(seed):
            queue.append((seed, seed, ()))

    while queue:
        state, seed, steps = queue.popleft()
        if len(steps) >= max_steps:
            continue
        cert = core(state)
        arm_cap = max(1, t_n - cert.core.n + 1)
        for spec in _candidate_specs(state, cert, k, arm_cap):
            new = apply_attachment(state, spec)
            new_core = core(new).core
            if new_core.n > t_n or new_core.m > t_m:
                continue
            if are_isomorphic(new_core, target_core) is not None:
                return ConstructionTrace(k=k, seed=seed, steps=steps + (spec,))
            if seen.add(new):
                queue.append((new, seed, steps + (spec,)))
    return None
