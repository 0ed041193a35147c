"""Constructors for the named graphs used throughout tests and fixtures."""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph(range(n), combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def diamond() -> Graph:
    """K4 minus one edge."""
    g = complete(4)
    return Graph(g.vertices, g.edges - {(0, 1)})


def wheel(rim: int) -> Graph:
    """Cycle of length ``rim`` plus a hub joined to every rim vertex."""
    hub = rim
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(hub, i) for i in range(rim)]
    return Graph(range(rim + 1), edges)


def prism(k: int = 3) -> Graph:
    """Two k-cycles joined by a perfect matching (k=3 is the triangular prism)."""
    top = [(i, (i + 1) % k) for i in range(k)]
    bot = [(k + i, k + (i + 1) % k) for i in range(k)]
    match = [(i, k + i) for i in range(k)]
    return Graph(range(2 * k), top + bot + match)


def moebius_ladder(n: int) -> Graph:
    """Cycle C_n (n even) plus edges between antipodal vertices."""
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)]
    return Graph(range(n), edges)


def complete_multipartite(*sizes: int) -> Graph:
    parts = []
    nxt = 0
    for s in sizes:
        parts.append(list(range(nxt, nxt + s)))
        nxt += s
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1 :]
        for u in p
        for v in q
    ]
    return Graph(range(nxt), edges)


def octahedron() -> Graph:
    """K_{2,2,2}; also the complement of a perfect matching on K6."""
    return complete_multipartite(2, 2, 2)


def cube() -> Graph:
    edges = []
    for v in range(8):
        for bit in range(3):
            u = v ^ (1 << bit)
            if v < u:
                edges.append((v, u))
    return Graph(range(8), edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def theta(lengths: tuple[int, int, int] = (2, 2, 2)) -> Graph:
    """Two terminals joined by three internally disjoint paths."""
    a, b = 0, 1
    vertices = [a, b]
    edges = []
    nxt = 2
    for length in lengths:
        prev = a
        for _ in range(length - 1):
            vertices.append(nxt)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return Graph(vertices, edges)


# Worked examples exercised step by step in the tests:
# claw_pair_tree: a tree whose single degree-2 vertex gets suppressed;
# stretched_k4_a/b: two graphs (10 and 6 vertices) that both reduce to K4;
# staged_g0..staged_final: a four-stage build showing that an intermediate
# graph may lose 3-connectedness while its core keeps it.


def claw_pair_tree() -> Graph:
    # a=3 (claw center), b=4, c=5 (second center); leaves 0,1,2,6,7
    return Graph(range(8), [(0, 3), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)])


def claw_pair_tree_contracted() -> Graph:
    return Graph([0, 1, 2, 3, 5, 6, 7], [(0, 3), (1, 3), (2, 3), (3, 5), (5, 6), (5, 7)])


def stretched_k4_a() -> Graph:
    # 0=a 1=b 2=f 3=c 4=d 5=e 6=g 7=h 8=i 9=j
    return Graph(
        range(10),
        [(0, 1), (1, 2), (2, 5), (0, 3), (4, 6), (0, 6), (4, 7), (1, 7), (4, 8), (3, 8), (5, 9), (3, 9)],
    )


def stretched_k4_b() -> Graph:
    # 0=a 1=b 2=c 3=d 4=e 5=f
    return Graph(range(6), [(0, 4), (1, 4), (1, 2), (2, 5), (0, 5), (0, 3), (1, 3), (2, 3)])


def staged_g0() -> Graph:
    # 0=a 1=b 2=c 3=d 4=g; vertex 0 has degree 2
    return Graph(range(5), [(0, 1), (0, 3), (1, 2), (2, 3), (4, 1), (4, 2), (4, 3)])


def staged_g1() -> Graph:
    g = staged_g0()
    return Graph(g.vertices, set(g.edges) | {(0, 4)})


def staged_g2() -> Graph:
    # adds 5=e, 6=f: the incoming Y-graph has hub e and arms e-d, e-g, e-f-c
    g = staged_g1()
    return Graph(range(7), set(g.edges) | {(3, 5), (4, 5), (5, 6), (2, 6)})


def staged_final() -> Graph:
    g = staged_g2()
    return Graph(g.vertices, set(g.edges) | {(4, 6)})
