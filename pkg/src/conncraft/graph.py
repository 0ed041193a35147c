"""Immutable simple-graph type and connectivity primitives.

Vertices are opaque integer ids that stay stable across every operation in
this package: nothing here ever renumbers a vertex, so ids recorded in logs
and traces remain valid references into earlier graphs.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional


class PreconditionError(ValueError):
    """An operation was called on inputs violating its stated precondition."""


Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Finite simple undirected graph: no loops, no parallel edges.

    Instances are immutable and hashable; derived graphs are built with
    fresh vertex/edge sets rather than mutation.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_hash")

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        vs = frozenset(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{u}) not allowed")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u},{v}) has endpoint outside vertex set")
            es.add(_norm_edge(u, v))
        self._vertices = vs
        self._edges = frozenset(es)
        adj: dict[int, set[int]] = {v: set() for v in vs}
        for u, v in self._edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(nb) for v, nb in adj.items()}
        self._hash = hash((self._vertices, self._edges))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], isolated: Iterable[int] = ()) -> "Graph":
        edges = list(edges)
        vs = {v for e in edges for v in e}
        vs.update(isolated)
        return cls(vs, edges)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def adjacency(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def neighbors(self, v: int) -> frozenset[int]:
        if v not in self._adj:
            raise PreconditionError(f"unknown vertex {v}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self._edges

    def is_complete(self) -> bool:
        n = self.n
        return self.m == n * (n - 1) // 2

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        start = next(iter(self._vertices))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self._adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def subgraph_without(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Graph with the given vertices (and their incident edges) and edges removed."""
        drop_v = set(vertices)
        drop_e = {_norm_edge(u, v) for u, v in edges}
        keep_v = self._vertices - drop_v
        keep_e = [e for e in self._edges if e not in drop_e and e[0] in keep_v and e[1] in keep_v]
        return Graph(keep_v, keep_e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)


@dataclass(frozen=True)
class PathWitness:
    """A concrete path, listed endpoint to endpoint."""

    vertices: tuple[int, ...]

    @property
    def a(self) -> int:
        return self.vertices[0]

    @property
    def b(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def is_valid_in(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 2 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(x, y) for x, y in zip(vs, vs[1:]))


def degree(g: Graph, v: int) -> int:
    """Number of edges of ``g`` incident to ``v``."""
    return g.degree(v)


def _require_connected(g: Graph, what: str) -> None:
    if not g.is_connected():
        raise PreconditionError(f"{what} requires a connected graph")


# ---------------------------------------------------------------------------
# Openly disjoint paths via unit-capacity max flow on the vertex-split digraph.
# ---------------------------------------------------------------------------


def _disjoint_path_flow(g: Graph, a: int, b: int, want: int) -> list[PathWitness]:
    """Up to ``want`` pairwise openly disjoint a-b paths, greedily augmented.

    Every vertex except the endpoints is split into an in/out pair with unit
    capacity, so paths can share nothing but a and b. Returns as many paths
    as the flow value allows, capped at ``want``.
    """
    ids = sorted(g.vertices)
    idx = {v: i for i, v in enumerate(ids)}

    def node_in(v: int) -> int:
        return 2 * idx[v]

    def node_out(v: int) -> int:
        return 2 * idx[v] + 1

    s, t = node_out(a), node_in(b)
    cap: dict[tuple[int, int], int] = defaultdict(int)
    nbrs: dict[int, set[int]] = defaultdict(set)

    def add_arc(x: int, y: int, c: int) -> None:
        cap[(x, y)] += c
        nbrs[x].add(y)
        nbrs[y].add(x)

    for v in ids:
        if v != a and v != b:
            add_arc(node_in(v), node_out(v), 1)
    for u, v in sorted(g.edges):
        for x, y in ((u, v), (v, u)):
            # arcs back into the source side or out of the sink are useless
            # and would permit flow cycles through the endpoints
            if node_in(y) != node_in(a) and node_out(x) != node_out(b):
                add_arc(node_out(x), node_in(y), 1)

    flow: dict[tuple[int, int], int] = defaultdict(int)
    value = 0
    while value < want:
        parent: dict[int, Optional[int]] = {s: None}
        queue = [s]
        qi = 0
        while qi < len(queue) and t not in parent:
            x = queue[qi]
            qi += 1
            for y in sorted(nbrs[x]):
                if y not in parent and cap[(x, y)] - flow[(x, y)] > 0:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while parent[y] is not None:
            x = parent[y]
            flow[(x, y)] += 1
            flow[(y, x)] -= 1
            y = x
        value += 1

    paths = []
    for _ in range(value):
        seq = [a]
        node = s
        while node != t:
            nxt = None
            for y in sorted(nbrs[node]):
                if cap[(node, y)] > 0 and flow[(node, y)] > 0:
                    nxt = y
                    break
            assert nxt is not None, "flow decomposition lost conservation"
            flow[(node, nxt)] -= 1
            flow[(nxt, node)] += 1
            node = nxt
            if node % 2 == 0:  # an in-node: arrived at a vertex
                v = ids[node // 2]
                seq.append(v)
                if node != t:
                    flow[(node, node + 1)] -= 1
                    flow[(node + 1, node)] += 1
                    node = node + 1
        paths.append(PathWitness(tuple(seq)))
    return paths


def openly_disjoint_paths(g: Graph, a: int, b: int, k: int) -> Optional[list[PathWitness]]:
    """k pairwise openly disjoint a-b paths, or ``None`` if fewer exist.

    Two paths are openly disjoint when their vertex sets meet only in the
    shared endpoints a and b.
    """
    if a == b:
        raise PreconditionError("endpoints must be distinct")
    if a not in g.vertices or b not in g.vertices:
        raise PreconditionError("both endpoints must be vertices of the graph")
    if k < 1:
        raise PreconditionError("k must be positive")
    paths = _disjoint_path_flow(g, a, b, k)
    return paths if len(paths) == k else None


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    bound = min(g.degree(s), g.degree(t))
    return len(_disjoint_path_flow(g, s, t, bound))


def vertex_connectivity(g: Graph) -> int:
    """Largest k such that every vertex pair joins by k openly disjoint paths.

    Complete graphs K_n evaluate to n-1. Uses the standard reduction: it
    suffices to check a minimum-degree vertex against its non-neighbors plus
    the non-adjacent pairs among its neighbors.
    """
    if g.n < 2:
        raise PreconditionError("vertex connectivity needs at least 2 vertices")
    _require_connected(g, "vertex_connectivity")
    return _vertex_connectivity_cached(g)


@lru_cache(maxsize=16384)
def _vertex_connectivity_cached(g: Graph) -> int:
    if g.is_complete():
        return g.n - 1
    v0 = min(sorted(g.vertices), key=g.degree)
    best = g.degree(v0)
    non_nbrs = sorted(g.vertices - g.neighbors(v0) - {v0})
    for w in non_nbrs:
        best = min(best, _local_connectivity(g, v0, w))
    for x, y in combinations(sorted(g.neighbors(v0)), 2):
        if not g.has_edge(x, y):
            best = min(best, _local_connectivity(g, x, y))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Whether every vertex pair admits k openly disjoint paths."""
    if k < 1:
        raise PreconditionError("k must be positive")
    return vertex_connectivity(g) >= k


# ---------------------------------------------------------------------------
# Isomorphism by backtracking with iterated degree refinement.
# ---------------------------------------------------------------------------


def _refine_labels(g: Graph, rounds: int = 3) -> dict[int, int]:
    label = {v: g.degree(v) for v in g.vertices}
    for _ in range(rounds):
        sig = {
            v: (label[v], tuple(sorted(label[u] for u in g.neighbors(v))))
            for v in g.vertices
        }
        canon = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: canon[sig[v]] for v in g.vertices}
        if len(set(new.values())) == len(set(label.values())):
            label = new
            break
        label = new
    return label


def are_isomorphic(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """An adjacency-preserving vertex bijection g -> h, or ``None``.

    Backtracking search pruned by iterated neighbor-degree refinement;
    intended for the small graphs this package works with (roughly <= 16
    vertices, though refinement usually keeps larger sparse cases cheap).
    """
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(g.degree(v) for v in g.vertices) != sorted(h.degree(v) for v in h.vertices):
        return None
    lg = _refine_labels(g)
    lh = _refine_labels(h)
    if Counter(lg.values()) != Counter(lh.values()):
        return None
    by_label: dict[int, list[int]] = defaultdict(list)
    for v in sorted(h.vertices):
        by_label[lh[v]].append(v)

    # order g's vertices to keep the partial map connected where possible
    order: list[int] = []
    placed: set[int] = set()
    remaining = set(g.vertices)
    while remaining:
        frontier = [v for v in remaining if g.neighbors(v) & placed]
        pool = frontier if frontier else list(remaining)
        v = min(pool, key=lambda x: (len(by_label[lg[x]]), -g.degree(x), x))
        order.append(v)
        placed.add(v)
        remaining.remove(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in by_label[lg[v]]:
            if c in used:
                continue
            ok = True
            for u, cu in mapping.items():
                if g.has_edge(v, u) != h.has_edge(c, cu):
                    ok = False
                    break
            if ok:
                mapping[v] = c
                used.add(c)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.remove(c)
        return False

    return dict(mapping) if extend(0) else None


# ---------------------------------------------------------------------------
# Exhaustive minimum vertex cut: the independent oracle for the flow route.
# ---------------------------------------------------------------------------


def min_vertex_cut_bruteforce(g: Graph) -> tuple[int, frozenset[int]]:
    """Smallest vertex set whose removal disconnects g, by subset enumeration.

    Intended for graphs of roughly <= 12 vertices. Complete graphs have no
    cut and are rejected.
    """
    if g.is_complete():
        raise PreconditionError("complete graph has no vertex cut")
    ids = sorted(g.vertices)
    for size in range(0, g.n - 1):
        for subset in combinations(ids, size):
            rest = g.subgraph_without(vertices=subset)
            if rest.n >= 2 and not rest.is_connected():
                return size, frozenset(subset)
    raise PreconditionError("no vertex cut found")  # unreachable for non-complete input
