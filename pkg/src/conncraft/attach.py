"""Path / Y-graph / k-star attachments and their (lambda, mu) classification.

An attachment union is measured by how many vertices (lambda) and edges (mu)
it adds to the host's core. The case tag is derived from the anchor profile:
whether each anchor survives into the host core, and which core edge's
realizing path carries the anchors that do not. Attachments whose profile
falls outside the admissible taxonomy for the target connectivity are
classified ``inadmissible`` rather than rejected, so the negative direction
of the taxonomy stays testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .coreops import CoreCertificate, core
from .graph import Graph, PreconditionError, vertex_connectivity


class AttachKind(str, Enum):
    HPATH = "hpath"
    HY = "hy"
    KSTAR = "kstar"


@dataclass(frozen=True)
class AttachSpec:
    """Anchors plus arm lengths describing one attachment.

    ``hpath``: two anchors, one arm entry giving the total path length.
    ``hy``: three anchors, one arm length per anchor (hub to that anchor).
    ``kstar``: k >= 4 anchors with per-anchor arm lengths; ``k`` defaults to
    the anchor count.

    Anchors are normalized to ascending order (arm lengths permuted along),
    which keeps serialized traces deterministic.
    """

    kind: AttachKind
    anchors: tuple[int, ...]
    arms: tuple[int, ...]
    k: Optional[int] = None

    def __post_init__(self) -> None:
        kind = AttachKind(self.kind)
        anchors = tuple(int(a) for a in self.anchors)
        arms = tuple(int(x) for x in self.arms)
        if len(set(anchors)) != len(anchors):
            raise PreconditionError(f"anchors must be distinct, got {anchors}")
        if any(x < 1 for x in arms):
            raise PreconditionError(f"arm lengths must be positive, got {arms}")
        if kind is AttachKind.HPATH:
            if len(anchors) != 2 or len(arms) != 1:
                raise PreconditionError("hpath takes 2 anchors and a single total length")
            k = None
        elif kind is AttachKind.HY:
            if len(anchors) != 3 or len(arms) != 3:
                raise PreconditionError("hy takes 3 anchors and 3 arm lengths")
            k = None
        else:
            k = self.k if self.k is not None else len(anchors)
            if k < 4:
                raise PreconditionError("kstar attachments need k >= 4 (use hy for three arms)")
            if len(anchors) != k or len(arms) != k:
                raise PreconditionError(f"kstar with k={k} takes {k} anchors and {k} arm lengths")
        if kind is AttachKind.HPATH:
            if anchors[0] > anchors[1]:
                anchors = (anchors[1], anchors[0])
        else:
            order = sorted(range(len(anchors)), key=lambda i: anchors[i])
            anchors = tuple(anchors[i] for i in order)
            arms = tuple(arms[i] for i in order)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "anchors", anchors)
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "k", k)

    @property
    def new_vertex_count(self) -> int:
        if self.kind is AttachKind.HPATH:
            return self.arms[0] - 1
        return 1 + sum(x - 1 for x in self.arms)

    @property
    def new_edge_count(self) -> int:
        return sum(self.arms)

    def to_json_dict(self) -> dict:
        d = {"kind": self.kind.value, "anchors": list(self.anchors), "arms": list(self.arms)}
        if self.kind is AttachKind.KSTAR:
            d["k"] = self.k
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "AttachSpec":
        try:
            kind = AttachKind(d["kind"])
            anchors = tuple(d["anchors"])
            arms = tuple(d["arms"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PreconditionError(f"malformed attachment spec: {exc}") from exc
        return cls(kind=kind, anchors=anchors, arms=arms, k=d.get("k"))


def _validate_against_host(h: Graph, spec: AttachSpec) -> None:
    for a in spec.anchors:
        if a not in h.vertices:
            raise PreconditionError(f"anchor {a} not in host graph")
    if spec.kind is AttachKind.HPATH and spec.arms[0] == 1 and h.has_edge(*spec.anchors):
        raise PreconditionError(
            f"edge {spec.anchors} already present; a length-1 path would duplicate it"
        )


def apply_attachment(h: Graph, spec: AttachSpec) -> Graph:
    """The union of the host with the attachment described by ``spec``.

    New vertices take consecutive ids starting past the host maximum: path
    interiors run from the first anchor to the second; Y/star attachments
    allocate the hub first, then each arm's interiors hub-outward in anchor
    order. This fixed order is what makes trace replay reproducible.
    """
    _validate_against_host(h, spec)
    nxt = max(h.vertices) + 1
    vertices = set(h.vertices)
    edges = set(h.edges)

    def chain(frm: int, to: int, length: int) -> None:
        nonlocal nxt
        prev = frm
        for _ in range(length - 1):
            vertices.add(nxt)
            edges.add((min(prev, nxt), max(prev, nxt)))
            prev = nxt
            nxt += 1
        edges.add((min(prev, to), max(prev, to)))

    if spec.kind is AttachKind.HPATH:
        chain(spec.anchors[0], spec.anchors[1], spec.arms[0])
    else:
        hub = nxt
        vertices.add(hub)
        nxt += 1
        for anchor, arm in zip(spec.anchors, spec.arms):
            chain(hub, anchor, arm)
    return Graph(vertices, edges)


@dataclass(frozen=True)
class OpClass:
    """Measured core growth plus the taxonomy case tag."""

    lam: int
    mu: int
    tag: str

    @property
    def pair(self) -> tuple[int, int]:
        return (self.lam, self.mu)

    @property
    def admissible(self) -> bool:
        return self.tag != "inadmissible"


TWO_TAGS = frozenset({"2a", "2b1", "2b2", "2c", "2d"})
THREE_TAGS = frozenset({"3a", "3b", "3c", "3d", "3e", "3f1", "3f2", "3g1", "3g2"})
K_TAGS = frozenset({"ka", "kb"})

#: The (lambda, mu) pair each named tag must measure ("kb" measures (1, k)).
TAG_PAIRS = {
    "2a": (0, 1),
    "2b1": (1, 2),
    "2b2": (1, 2),
    "2c": (2, 3),
    "2d": (3, 4),
    "3a": (0, 1),
    "3b": (1, 2),
    "3c": (1, 3),
    "3d": (2, 3),
    "3e": (2, 4),
    "3f1": (3, 5),
    "3f2": (3, 5),
    "3g1": (4, 6),
    "3g2": (4, 6),
    "ka": (0, 1),
}


def _resolve_target(host_cert: CoreCertificate, spec: AttachSpec, k: Optional[int]) -> int:
    kappa = vertex_connectivity(host_cert.core)
    if k is None:
        if spec.kind is AttachKind.HY:
            k = 3
        elif spec.kind is AttachKind.KSTAR:
            k = spec.k
        else:
            k = kappa
    if k < 2:
        raise PreconditionError("classification needs a target connectivity of at least 2")
    if kappa < k:
        raise PreconditionError(f"host core is not {k}-connected (connectivity {kappa})")
    if k == 2 and spec.kind is not AttachKind.HPATH:
        raise PreconditionError("the 2-connected taxonomy covers only path attachments")
    if k == 3 and spec.kind is AttachKind.KSTAR:
        raise PreconditionError("the 3-connected taxonomy covers path and Y attachments only")
    if k >= 4:
        if spec.kind is AttachKind.HY:
            raise PreconditionError("Y attachments belong to the 3-connected taxonomy")
        if spec.kind is AttachKind.KSTAR and spec.k != k:
            raise PreconditionError(f"star width {spec.k} must equal the target connectivity {k}")
    return k


def _profile_certificate(h: Graph, spec: AttachSpec, host_cert: CoreCertificate) -> CoreCertificate:
    """Certificate used for anchor-profile detection.

    Cores are unique only up to relabelling: when the core keeps degree-2
    vertices (cycles end at K3, parallel threads leave one such remnant
    each), which host vertices survive depends on contraction order. The
    profile therefore contracts non-anchor vertices first, retaining anchors
    wherever the relabelling freedom allows. Cores of minimum degree >= 3
    have no such freedom, so there the cached certificate is reused as is.
    """
    if all(host_cert.core.degree(v) >= 3 for v in host_cert.core.vertices):
        return host_cert
    anchors = set(spec.anchors)

    def pick(cands: list[int]) -> int:
        non_anchor = [c for c in cands if c not in anchors]
        return min(non_anchor) if non_anchor else min(cands)

    return core(h, pick=pick)


def _profile_tag(host_cert: CoreCertificate, spec: AttachSpec, k: int) -> str:
    core_v = host_cert.core.vertices
    in_core = [a in core_v for a in spec.anchors]
    edge_of = {a: host_cert.host_edge_of(a) for a, f in zip(spec.anchors, in_core) if not f}

    if spec.kind is AttachKind.HPATH:
        a, b = spec.anchors
        if all(in_core):
            adjacent = host_cert.core.has_edge(a, b)
            if k == 2:
                return "2b2" if adjacent else "2a"
            if k == 3:
                return "inadmissible" if adjacent else "3a"
            return "inadmissible" if adjacent else "ka"
        if any(in_core):
            anchored, loose = (a, b) if in_core[0] else (b, a)
            touching = anchored in edge_of[loose]
            if k == 2:
                return "2c" if touching else "2b1"
            if k == 3:
                return "inadmissible" if touching else "3b"
            return "inadmissible"
        same = edge_of[a] == edge_of[b]
        if k == 2:
            return "2d" if same else "2c"
        if k == 3:
            return "inadmissible" if same else "3d"
        return "inadmissible"

    if spec.kind is AttachKind.HY:
        cores = [a for a, f in zip(spec.anchors, in_core) if f]
        loose = [a for a, f in zip(spec.anchors, in_core) if not f]
        if len(cores) == 3:
            return "3c"
        if len(cores) == 2:
            x, y = edge_of[loose[0]]
            return "inadmissible" if {x, y} == set(cores) else "3e"
        if len(cores) == 1:
            e1, e2 = edge_of[loose[0]], edge_of[loose[1]]
            if e1 == e2:
                return "inadmissible" if cores[0] in e1 else "3f1"
            return "3f2"
        distinct = len({edge_of[a] for a in loose})
        if distinct == 1:
            return "inadmissible"
        return "3g1" if distinct == 2 else "3g2"

    # kstar, k >= 4
    return "kb" if all(in_core) else "inadmissible"


def classify(
    h: Graph,
    spec: AttachSpec,
    k: Optional[int] = None,
    *,
    host_cert: Optional[CoreCertificate] = None,
) -> OpClass:
    """Measure core growth of the union and name the taxonomy case.

    lambda and mu come from actually running the core operator on both
    sides; the anchor profile supplies only the tag, so the two routes
    cross-check each other. ``k`` fixes the target taxonomy (2, 3, or the
    star width); when omitted it is inferred from the attachment kind and
    the host core's connectivity.
    """
    cert = host_cert if host_cert is not None else core(h)
    target = _resolve_target(cert, spec, k)
    _validate_against_host(h, spec)
    union_cert = core(apply_attachment(h, spec))
    return OpClass(
        lam=union_cert.core.n - cert.core.n,
        mu=union_cert.core.m - cert.core.m,
        tag=_profile_tag(_profile_certificate(h, spec, cert), spec, target),
    )


def _admissible(h: Graph, spec: AttachSpec, k: int, host_cert: Optional[CoreCertificate], tags: frozenset) -> bool:
    cert = host_cert if host_cert is not None else core(h)
    target = _resolve_target(cert, spec, k)
    _validate_against_host(h, spec)
    return _profile_tag(_profile_certificate(h, spec, cert), spec, target) in tags


def is_2_admissible(h: Graph, spec: AttachSpec, *, host_cert: Optional[CoreCertificate] = None) -> bool:
    """Whether the union keeps a 2-connected core (decided by anchor profile)."""
    if spec.kind is not AttachKind.HPATH:
        raise PreconditionError("2-admissibility is defined for path attachments")
    return _admissible(h, spec, 2, host_cert, TWO_TAGS)


def is_3_admissible(h: Graph, spec: AttachSpec, *, host_cert: Optional[CoreCertificate] = None) -> bool:
    """Whether the union keeps a 3-connected core (decided by anchor profile)."""
    if spec.kind is AttachKind.KSTAR:
        raise PreconditionError("3-admissibility is defined for path and Y attachments")
    return _admissible(h, spec, 3, host_cert, THREE_TAGS)


def is_k_admissible(h: Graph, spec: AttachSpec, k: int, *, host_cert: Optional[CoreCertificate] = None) -> bool:
    """Whether the union keeps a k-connected core, for k >= 4."""
    if k < 4:
        raise PreconditionError("use is_2_admissible / is_3_admissible for k < 4")
    if spec.kind is AttachKind.HY:
        raise PreconditionError("k-admissibility is defined for path and star attachments")
    return _admissible(h, spec, k, host_cert, K_TAGS)
