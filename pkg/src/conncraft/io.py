"""Edge-list text interchange and DOT export.

Format: first significant line ``n m``, then m lines ``u v`` with 0-based
integer ids in [0, n). Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .graph import Graph


class EdgeListError(ValueError):
    """Malformed edge-list input; message carries the offending line number."""


def parse_edge_list(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListError(f"line {lineno}: header counts must be non-negative")
            header = (a, b)
            continue
        n, m = header
        if len(edges) >= m:
            raise EdgeListError(f"line {lineno}: more than the declared {m} edges")
        if not (0 <= a < n and 0 <= b < n):
            raise EdgeListError(f"line {lineno}: vertex id outside [0, {n})")
        if a == b:
            raise EdgeListError(f"line {lineno}: loop edge {a} {b}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise EdgeListError(f"line {lineno}: duplicate edge {a} {b}")
        seen.add(key)
        edges.append(key)
    if header is None:
        raise EdgeListError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"declared {m} edges but found {len(edges)}")
    return Graph(range(n), edges)


def format_edge_list(g: Graph) -> str:
    """Serialize; graphs whose ids are not 0..n-1 are densely renumbered.

    The renumbering is order-preserving and recorded in comment lines
    (``# id map: new<-old``) so the original ids remain recoverable.
    """
    ids = sorted(g.vertices)
    contiguous = ids == list(range(g.n))
    lines = []
    rename = {v: i for i, v in enumerate(ids)}
    if not contiguous:
        lines.append("# renumbered; id map: " + " ".join(f"{rename[v]}<-{v}" for v in ids))
    lines.append(f"{g.n} {g.m}")
    for u, v in sorted((rename[u], rename[v]) for u, v in g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(g.vertices):
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
