"""Reverse direction: recover construction traces from finished graphs.

``ear_decompose_2`` peels a 2-connected graph back to a cycle;
``decompose_3`` peels a graph with 3-connected core back to a seed whose
core is K4, undoing one path or Y attachment at a time. Removal steps are
recorded against the input's vertex ids and then relabelled to match the
deterministic ids replay allocates, so the returned trace replays to a
graph isomorphic to the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .attach import AttachKind, AttachSpec, apply_attachment
from .coreops import core
from .graph import Edge, Graph, PreconditionError, _norm_edge, are_isomorphic, vertex_connectivity
from .named import complete
from .trace import ConstructionTrace


@dataclass(frozen=True)
class RemovalCandidate:
    """One undoable attachment found inside a graph.

    ``arm_interiors`` lists the to-be-deleted interior vertices per arm,
    ordered from the first anchor (paths) or from the hub outward (Y), which
    is exactly the order replay will re-create them in.
    """

    kind: AttachKind
    anchors: tuple[int, ...]
    arms: tuple[int, ...]
    hub: Optional[int]
    arm_interiors: tuple[tuple[int, ...], ...]

    @property
    def delete_vertices(self) -> frozenset[int]:
        out = set()
        for arm in self.arm_interiors:
            out.update(arm)
        if self.hub is not None:
            out.add(self.hub)
        return frozenset(out)

    @property
    def delete_edges(self) -> frozenset[Edge]:
        out = set()
        if self.kind is AttachKind.HPATH:
            seq = (self.anchors[0],) + self.arm_interiors[0] + (self.anchors[1],)
            out.update(_norm_edge(x, y) for x, y in zip(seq, seq[1:]))
        else:
            for anchor, arm in zip(self.anchors, self.arm_interiors):
                seq = (self.hub,) + arm + (anchor,)
                out.update(_norm_edge(x, y) for x, y in zip(seq, seq[1:]))
        return frozenset(out)

    def spec(self) -> AttachSpec:
        return AttachSpec(kind=self.kind, anchors=self.anchors, arms=self.arms)

    def remainder(self, g: Graph) -> Graph:
        return g.subgraph_without(vertices=self.delete_vertices, edges=self.delete_edges)

    def sort_key(self) -> tuple:
        return (0 if self.kind is AttachKind.HPATH else 1, self.anchors, self.arms, self.arm_interiors)


def _normalized_candidate(
    kind: AttachKind,
    anchors: tuple[int, ...],
    arms: tuple[int, ...],
    hub: Optional[int],
    interiors: tuple[tuple[int, ...], ...],
) -> RemovalCandidate:
    # store anchors ascending with arms/interiors permuted alongside, matching
    # AttachSpec normalization
    if kind is AttachKind.HPATH:
        if anchors[0] > anchors[1]:
            anchors = (anchors[1], anchors[0])
            interiors = (tuple(reversed(interiors[0])),)
    else:
        order = sorted(range(len(anchors)), key=lambda i: anchors[i])
        anchors = tuple(anchors[i] for i in order)
        arms = tuple(arms[i] for i in order)
        interiors = tuple(interiors[i] for i in order)
    return RemovalCandidate(kind=kind, anchors=anchors, arms=arms, hub=hub, arm_interiors=interiors)


def _walk_chain(g: Graph, start: int, first: int) -> tuple[int, tuple[int, ...]]:
    """Follow degree-2 vertices from ``start`` through ``first`` to the first
    vertex of other degree; returns (endpoint, interior run)."""
    interiors = []
    prev, cur = start, first
    while g.degree(cur) == 2:
        interiors.append(cur)
        nxt = next(iter(g.neighbors(cur) - {prev}))
        prev, cur = cur, nxt
    return cur, tuple(interiors)


def _chain_candidates(g: Graph) -> list[RemovalCandidate]:
    out = []
    # single edges between branch vertices undo length-1 path attachments
    for u, v in sorted(g.edges):
        if g.degree(u) != 2 and g.degree(v) != 2:
            out.append(_normalized_candidate(AttachKind.HPATH, (u, v), (1,), None, ((),)))
    consumed: set[int] = set()
    for w in sorted(g.vertices):
        if w in consumed or g.degree(w) != 2:
            continue
        nb = sorted(g.neighbors(w))
        left, left_run = _walk_chain(g, w, nb[0])
        right, right_run = _walk_chain(g, w, nb[1])
        interior = tuple(reversed(left_run)) + (w,) + right_run
        consumed.update(interior)
        if left == right:
            continue  # degenerate: both ends hit the same branch vertex
        out.append(
            _normalized_candidate(
                AttachKind.HPATH, (left, right), (len(interior) + 1,), None, (interior,)
            )
        )
    return out


def _y_candidates(g: Graph) -> list[RemovalCandidate]:
    out = []
    for hub in sorted(g.vertices):
        if g.degree(hub) != 3:
            continue
        anchors = []
        arms = []
        interiors = []
        ok = True
        for first in sorted(g.neighbors(hub)):
            anchor, run = _walk_chain(g, hub, first)
            if anchor == hub:
                ok = False
                break
            anchors.append(anchor)
            arms.append(len(run) + 1)
            interiors.append(run)
        if not ok or len(set(anchors)) != 3 or hub in anchors:
            continue
        out.append(
            _normalized_candidate(
                AttachKind.HY, tuple(anchors), tuple(arms), hub, tuple(interiors)
            )
        )
    return out


def find_removal_candidates(g: Graph, constructed: Optional[Graph] = None) -> list[RemovalCandidate]:
    """All single-step path/Y removals leaving a connected remainder with a
    3-connected core, in deterministic order.

    When ``constructed`` is given, removals touching any of its vertices or
    edges are excluded, restricting candidates to material added after that
    stage.
    """
    keep_v = constructed.vertices if constructed is not None else frozenset()
    keep_e = constructed.edges if constructed is not None else frozenset()
    out = []
    for cand in sorted(_chain_candidates(g) + _y_candidates(g), key=RemovalCandidate.sort_key):
        if cand.delete_vertices & keep_v or cand.delete_edges & keep_e:
            continue
        rest = cand.remainder(g)
        if rest.n < 4 or not rest.is_connected():
            continue
        if vertex_connectivity(core(rest).core) >= 3:
            out.append(cand)
    return out


# ---------------------------------------------------------------------------
# Relabelling removal plans into replayable traces.
# ---------------------------------------------------------------------------


def _assemble_trace(k: int, seed: Graph, planned: list[RemovalCandidate]) -> tuple[ConstructionTrace, dict[int, int]]:
    """Rewrite per-step ids to the ones replay will allocate.

    Returns the trace plus the mapping from input-graph ids to replay ids
    (identity on the seed). Replaying the trace reproduces the input graph
    relabelled through that mapping.
    """
    phi: dict[int, int] = {}
    g = seed
    specs: list[AttachSpec] = []
    for step in planned:
        mapped = tuple(phi.get(a, a) for a in step.anchors)
        spec = AttachSpec(kind=step.kind, anchors=mapped, arms=step.arms)
        order = sorted(range(len(mapped)), key=lambda i: mapped[i])
        base = max(g.vertices) + 1
        if step.kind is AttachKind.HPATH:
            interiors = step.arm_interiors[0]
            if order[0] == 1:  # normalization flipped the anchor order
                interiors = tuple(reversed(interiors))
            for offset, orig in enumerate(interiors):
                phi[orig] = base + offset
        else:
            phi[step.hub] = base
            cursor = base + 1
            for j in range(len(mapped)):
                for orig in step.arm_interiors[order[j]]:
                    phi[orig] = cursor
                    cursor += 1
        g = apply_attachment(g, spec)
        specs.append(spec)
    return ConstructionTrace(k=k, seed=seed, steps=tuple(specs)), phi


# ---------------------------------------------------------------------------
# k = 2: classical open-ear decomposition.
# ---------------------------------------------------------------------------


def _shortest_cycle(g: Graph) -> list[int]:
    best: Optional[list[int]] = None
    for u, v in sorted(g.edges):
        # shortest u-v path avoiding the edge itself closes a shortest cycle through it
        parent: dict[int, Optional[int]] = {u: None}
        queue = [u]
        qi = 0
        while qi < len(queue) and v not in parent:
            x = queue[qi]
            qi += 1
            for y in sorted(g.neighbors(x)):
                if y not in parent and not (x == u and y == v):
                    parent[y] = x
                    queue.append(y)
        if v not in parent:
            continue
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        cyc = list(reversed(path))
        if best is None or len(cyc) < len(best):
            best = cyc
    assert best is not None, "2-connected graph must contain a cycle"
    return best


def ear_decompose_2(g: Graph) -> ConstructionTrace:
    """Decompose a 2-connected graph into a shortest cycle plus open ears."""
    if g.n < 3 or vertex_connectivity(g) < 2:
        raise PreconditionError("ear decomposition requires a 2-connected graph")
    cyc = _shortest_cycle(g)
    seed = Graph(cyc, [(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))])
    have_v = set(seed.vertices)
    have_e = set(seed.edges)
    planned: list[RemovalCandidate] = []
    while have_e != g.edges:
        chord = next(
            (e for e in sorted(g.edges - frozenset(have_e)) if e[0] in have_v and e[1] in have_v),
            None,
        )
        if chord is not None:
            planned.append(_normalized_candidate(AttachKind.HPATH, chord, (1,), None, ((),)))
            have_e.add(chord)
            continue
        u = min(v for v in have_v if g.neighbors(v) - have_v)
        w = min(g.neighbors(u) - have_v)
        # grow an ear from u through w back to the subgraph, avoiding u
        parent: dict[int, Optional[int]] = {w: None}
        queue = [w]
        qi = 0
        end = None
        while qi < len(queue) and end is None:
            x = queue[qi]
            qi += 1
            for y in sorted(g.neighbors(x)):
                if y == u or y in parent:
                    continue
                if y in have_v:
                    parent[y] = x
                    end = y
                    break
                parent[y] = x
                queue.append(y)
        assert end is not None, "2-connectivity guarantees the ear returns"
        rev = [end]
        while parent[rev[-1]] is not None:
            rev.append(parent[rev[-1]])
        interior = tuple(reversed(rev))[:-1]  # w ... predecessors of end
        planned.append(
            _normalized_candidate(
                AttachKind.HPATH, (u, end), (len(interior) + 1,), None, (interior,)
            )
        )
        have_v.update(interior)
        seq = (u,) + interior + (end,)
        have_e.update(_norm_edge(x, y) for x, y in zip(seq, seq[1:]))
    trace, _ = _assemble_trace(2, seed, planned)
    return trace


# ---------------------------------------------------------------------------
# k = 3: peel back to a seed whose core is K4.
# ---------------------------------------------------------------------------


class _FailedStates:
    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Graph]] = {}

    @staticmethod
    def _key(g: Graph) -> tuple:
        return (g.n, g.m, tuple(sorted(g.degree(v) for v in g.vertices)))

    def contains(self, g: Graph) -> bool:
        return any(are_isomorphic(g, m) is not None for m in self._buckets.get(self._key(g), []))

    def add(self, g: Graph) -> None:
        self._buckets.setdefault(self._key(g), []).append(g)


def decompose_3(g: Graph) -> ConstructionTrace:
    """Recover a construction trace for a graph whose core is 3-connected.

    Backtracking removal search: repeatedly undo a path or Y attachment
    whose remainder keeps a 3-connected core, bottoming out when the
    remainder's core is K4. Candidate order is deterministic; failed
    remainders are memoized up to isomorphism.
    """
    cert = core(g)
    if vertex_connectivity(cert.core) < 3:
        raise PreconditionError("decompose_3 requires a graph whose core is 3-connected")
    k4 = complete(4)
    failed = _FailedStates()

    def peel(current: Graph) -> Optional[tuple[Graph, list[RemovalCandidate]]]:
        if are_isomorphic(core(current).core, k4) is not None:
            return current, []
        if failed.contains(current):
            return None
        for cand in find_removal_candidates(current):
            res = peel(cand.remainder(current))
            if res is not None:
                seed, planned = res
                planned.append(cand)
                return seed, planned
        failed.add(current)
        return None

    res = peel(g)
    if res is None:
        raise PreconditionError(
            f"no removal sequence found; stuck remainder has {g.n} vertices and {g.m} edges"
        )
    seed, planned = res
    trace, _ = _assemble_trace(3, seed, planned)
    return trace
