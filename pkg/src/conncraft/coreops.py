"""Series contraction/expansion, the contraction core, and core equivalence.

A degree-2 vertex whose neighbors are non-adjacent can be suppressed
(series-contracted); repeating until no vertex qualifies yields the core,
which is unique up to relabelling. The certificate keeps the full
contraction log so suppressed vertices can be mapped back onto the core
edge whose realizing path contains them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from .graph import Edge, Graph, PreconditionError, _norm_edge, are_isomorphic, _require_connected


def series_contract(g: Graph, b: int) -> Graph:
    """Suppress degree-2 vertex ``b``: replace edges ab, bc with edge ac.

    Requires the neighbors a, c to be non-adjacent, otherwise the
    replacement would create a parallel edge.
    """
    if b not in g.vertices:
        raise PreconditionError(f"unknown vertex {b}")
    nbrs = sorted(g.neighbors(b))
    if len(nbrs) != 2:
        raise PreconditionError(f"vertex {b} has degree {g.degree(b)}, need exactly 2")
    a, c = nbrs
    if g.has_edge(a, c):
        raise PreconditionError(f"neighbors {a},{c} of {b} are adjacent; contraction would create a parallel edge")
    edges = (set(g.edges) - {_norm_edge(a, b), _norm_edge(b, c)}) | {(a, c)}
    return Graph(g.vertices - {b}, edges)


def series_expand(g: Graph, edge: tuple[int, int], fresh: int) -> Graph:
    """Subdivide ``edge`` with the new vertex ``fresh``."""
    a, c = edge
    if not g.has_edge(a, c):
        raise PreconditionError(f"edge ({a},{c}) not in graph")
    if fresh in g.vertices:
        raise PreconditionError(f"vertex {fresh} already present")
    edges = (set(g.edges) - {_norm_edge(a, c)}) | {_norm_edge(a, fresh), _norm_edge(fresh, c)}
    return Graph(g.vertices | {fresh}, edges)


def contractible_vertices(g: Graph) -> list[int]:
    """All vertices currently satisfying the series-contraction precondition."""
    out = []
    for v in sorted(g.vertices):
        nb = g.neighbors(v)
        if len(nb) == 2:
            a, c = nb
            if not g.has_edge(a, c):
                out.append(v)
    return out


def is_core(g: Graph) -> bool:
    """Whether no series-contraction applies."""
    return not contractible_vertices(g)


@dataclass(frozen=True)
class ContractionRecord:
    removed: int
    left: int
    right: int


@dataclass(frozen=True, eq=False)
class CoreCertificate:
    """A core together with the contraction sequence that produced it."""

    graph: Graph
    core: Graph
    log: tuple[ContractionRecord, ...]
    # core edge -> the original-graph path it stands for, listed from the
    # smaller endpoint to the larger one (trivial 2-tuple for original edges)
    paths: dict[Edge, tuple[int, ...]] = field(repr=False)

    def host_edge_of(self, v: int) -> Edge:
        """The core edge whose realizing path contains the suppressed vertex ``v``."""
        if v in self.core.vertices:
            raise PreconditionError(f"vertex {v} survives into the core")
        if v not in self.graph.vertices:
            raise PreconditionError(f"unknown vertex {v}")
        for edge, path in self.paths.items():
            if v in path[1:-1]:
                return edge
        raise AssertionError(f"suppressed vertex {v} missing from every core-edge path")

    def expand_back(self) -> Graph:
        """Replay the log in reverse as expansions; reproduces the input exactly."""
        g = self.core
        for rec in reversed(self.log):
            g = series_expand(g, (rec.left, rec.right), rec.removed)
        return g


def _compute_core(g: Graph, pick: Callable[[list[int]], int]) -> CoreCertificate:
    current = g
    paths: dict[Edge, tuple[int, ...]] = {e: e for e in g.edges}
    log: list[ContractionRecord] = []
    while True:
        cands = contractible_vertices(current)
        if not cands:
            break
        b = pick(cands)
        a, c = sorted(current.neighbors(b))
        pa = paths.pop(_norm_edge(a, b))
        if pa[-1] != b:
            pa = pa[::-1]
        pc = paths.pop(_norm_edge(b, c))
        if pc[0] != b:
            pc = pc[::-1]
        joined = pa + pc[1:]
        if joined[0] != min(a, c):
            joined = joined[::-1]
        paths[_norm_edge(a, c)] = joined
        current = series_contract(current, b)
        log.append(ContractionRecord(removed=b, left=a, right=c))
    return CoreCertificate(graph=g, core=current, log=tuple(log), paths=paths)


@lru_cache(maxsize=16384)
def _core_lex(g: Graph) -> CoreCertificate:
    return _compute_core(g, min)


def core(g: Graph, *, pick: Optional[Callable[[list[int]], int]] = None) -> CoreCertificate:
    """Contract to the fixpoint, suppressing the smallest eligible vertex first.

    ``pick`` overrides the vertex choice (used to probe order independence);
    eligibility is re-scanned after every contraction since suppressing one
    vertex can block or unblock others.
    """
    _require_connected(g, "core")
    if g.n < 2:
        raise PreconditionError("core needs at least 2 vertices")
    if pick is None:
        return _core_lex(g)
    return _compute_core(g, pick)


def sim2_equivalent(g: Graph, h: Graph) -> bool:
    """Whether the two graphs differ only by series contractions/expansions.

    Decided on cores: each graph reaches its core by contractions alone and
    the core is unique up to relabelling, so equivalence reduces to core
    isomorphism.
    """
    _require_connected(g, "sim2_equivalent")
    _require_connected(h, "sim2_equivalent")
    return are_isomorphic(core(g).core, core(h).core) is not None
