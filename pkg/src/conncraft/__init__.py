"""conncraft: build, classify, and decompose 2-, 3-, and k-connected graphs.

The package works with a degree-2 suppression core: repeatedly replacing a
path through a degree-2 vertex by a single edge until no replacement
applies. Graphs sharing an isomorphic core are interchangeable for
connectivity purposes, which is what lets constructions add long arms whose
interiors only later acquire degree 3. On top of that sit classified path /
Y-graph / star attachments, a generator emitting replayable traces, a
verifier, and decomposers recovering traces from finished graphs.
"""

from .attach import (
    AttachKind,
    AttachSpec,
    K_TAGS,
    OpClass,
    TAG_PAIRS,
    THREE_TAGS,
    TWO_TAGS,
    apply_attachment,
    classify,
    is_2_admissible,
    is_3_admissible,
    is_k_admissible,
)
from .coreops import (
    ContractionRecord,
    CoreCertificate,
    contractible_vertices,
    core,
    is_core,
    series_contract,
    series_expand,
    sim2_equivalent,
)
from .decomp import (
    RemovalCandidate,
    decompose_3,
    ear_decompose_2,
    find_removal_candidates,
)
from .graph import (
    Graph,
    PathWitness,
    PreconditionError,
    are_isomorphic,
    degree,
    is_k_connected,
    min_vertex_cut_bruteforce,
    openly_disjoint_paths,
    vertex_connectivity,
)
from .io import EdgeListError, format_edge_list, parse_edge_list, to_dot
from .synth import (
    StepReport,
    VerifyReport,
    generate,
    search_construction_exists,
    verify,
)
from .trace import ConstructionTrace, replay

__all__ = [
    "AttachKind",
    "AttachSpec",
    "ConstructionTrace",
    "ContractionRecord",
    "CoreCertificate",
    "EdgeListError",
    "Graph",
    "K_TAGS",
    "OpClass",
    "PathWitness",
    "PreconditionError",
    "RemovalCandidate",
    "StepReport",
    "TAG_PAIRS",
    "THREE_TAGS",
    "TWO_TAGS",
    "VerifyReport",
    "apply_attachment",
    "are_isomorphic",
    "classify",
    "contractible_vertices",
    "core",
    "decompose_3",
    "degree",
    "ear_decompose_2",
    "find_removal_candidates",
    "format_edge_list",
    "generate",
    "is_2_admissible",
    "is_3_admissible",
    "is_core",
    "is_k_admissible",
    "is_k_connected",
    "min_vertex_cut_bruteforce",
    "openly_disjoint_paths",
    "parse_edge_list",
    "replay",
    "search_construction_exists",
    "series_contract",
    "series_expand",
    "sim2_equivalent",
    "to_dot",
    "verify",
    "vertex_connectivity",
]

__version__ = "0.1.0"
