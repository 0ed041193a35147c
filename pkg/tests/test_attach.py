from __future__ import annotations

import random

import pytest

from conncraft import (
    AttachKind,
    AttachSpec,
    Graph,
    PreconditionError,
    TAG_PAIRS,
    apply_attachment,
    classify,
    core,
    is_2_admissible,
    is_3_admissible,
    is_k_admissible,
    vertex_connectivity,
)
from conncraft import named
from conncraft.attach import THREE_TAGS


def _subdivide(g: Graph, edge, fresh):
    from conncraft import series_expand

    return series_expand(g, edge, fresh)


def test_spec_validation():
    with pytest.raises(PreconditionError):
        AttachSpec(AttachKind.HPATH, (1, 1), (1,))  # duplicate anchors
    with pytest.raises(PreconditionError):
        AttachSpec(AttachKind.HPATH, (0, 1), (0,))  # zero arm
    with pytest.raises(PreconditionError):
        AttachSpec(AttachKind.HY, (0, 1), (1, 1, 1))
    with pytest.raises(PreconditionError):
        AttachSpec(AttachKind.KSTAR, (0, 1, 2), (1, 1, 1))  # stars start at k=4


def test_spec_normalizes_anchor_order():
    s = AttachSpec(AttachKind.HY, (5, 2, 9), (3, 1, 2))
    assert s.anchors == (2, 5, 9)
    assert s.arms == (1, 3, 2)
    t = AttachSpec(AttachKind.HPATH, (7, 3), (2,))
    assert t.anchors == (3, 7)


def test_spec_json_roundtrip():
    for s in (
        AttachSpec(AttachKind.HPATH, (0, 4), (3,)),
        AttachSpec(AttachKind.HY, (1, 2, 5), (1, 2, 1)),
        AttachSpec(AttachKind.KSTAR, (0, 1, 2, 3), (1, 1, 2, 1)),
    ):
        assert AttachSpec.from_json_dict(s.to_json_dict()) == s


def test_apply_staged_sequence_exactly():
    g1 = apply_attachment(named.staged_g0(), AttachSpec(AttachKind.HPATH, (0, 4), (1,)))
    assert g1 == named.staged_g1()
    g2 = apply_attachment(g1, AttachSpec(AttachKind.HY, (2, 3, 4), (2, 1, 1)))
    assert g2 == named.staged_g2()
    g3 = apply_attachment(g2, AttachSpec(AttachKind.HPATH, (4, 6), (1,)))
    assert g3 == named.staged_final()


def test_apply_completes_k4():
    got = apply_attachment(named.diamond(), AttachSpec(AttachKind.HPATH, (0, 1), (1,)))
    assert got == named.complete(4)


def test_apply_errors():
    g = named.complete(4)
    with pytest.raises(PreconditionError):
        apply_attachment(g, AttachSpec(AttachKind.HPATH, (0, 9), (1,)))  # anchor missing
    with pytest.raises(PreconditionError):
        apply_attachment(g, AttachSpec(AttachKind.HPATH, (0, 1), (1,)))  # edge already present


def test_apply_grows_counts():
    g = named.complete(4)
    spec = AttachSpec(AttachKind.HY, (0, 1, 2), (2, 1, 3))
    got = apply_attachment(g, spec)
    assert got.n == g.n + spec.new_vertex_count == g.n + 1 + 3
    assert got.m == g.m + spec.new_edge_count == g.m + 6


def test_hub_degree_and_anchor_degrees_after_y_union(hosts_three):
    rng = random.Random(5)
    for _ in range(25):
        g = hosts_three[rng.randrange(len(hosts_three))]
        anchors = tuple(rng.sample(sorted(g.vertices), 3))
        arms = tuple(rng.randint(1, 3) for _ in range(3))
        spec = AttachSpec(AttachKind.HY, anchors, arms)
        got = apply_attachment(g, spec)
        hub = max(g.vertices) + 1
        assert got.degree(hub) == 3
        for a in anchors:
            assert got.degree(a) == g.degree(a) + 1


def test_classify_measures_with_core_operator():
    # adding the missing edge of the diamond joins two non-adjacent core vertices
    oc = classify(named.diamond(), AttachSpec(AttachKind.HPATH, (0, 1), (1,)), k=2)
    assert (oc.lam, oc.mu, oc.tag) == (0, 1, "2a")
    # a chord between core-adjacent vertices of a 4-cycle leaves a stuck vertex
    oc = classify(named.cycle(4), AttachSpec(AttachKind.HPATH, (1, 3), (1,)), k=2)
    assert (oc.lam, oc.mu, oc.tag) == (1, 2, "2b2")
    oc = classify(named.staged_g0(), AttachSpec(AttachKind.HPATH, (0, 4), (1,)), k=3)
    assert (oc.lam, oc.mu, oc.tag) == (1, 2, "3b")
    oc = classify(named.complete(4), AttachSpec(AttachKind.HY, (0, 1, 2), (1, 1, 1)), k=3)
    assert (oc.lam, oc.mu, oc.tag) == (1, 3, "3c")


def test_classify_infers_target_from_host():
    oc = classify(named.cycle(4), AttachSpec(AttachKind.HPATH, (1, 3), (1,)))
    assert oc.tag == "2b2"
    oc = classify(named.staged_g0(), AttachSpec(AttachKind.HPATH, (0, 4), (1,)))
    assert oc.tag == "3b"


def test_classify_rejects_underconnected_host():
    with pytest.raises(PreconditionError):
        classify(named.cycle(5), AttachSpec(AttachKind.HPATH, (0, 2), (1,)), k=3)
    with pytest.raises(PreconditionError):
        classify(named.claw_pair_tree(), AttachSpec(AttachKind.HPATH, (0, 1), (1,)), k=2)


def test_is_2_admissible_totality(hosts_two):
    # every valid path attachment keeps the union 2-connected
    rng = random.Random(7)
    for _ in range(60):
        g = hosts_two[rng.randrange(len(hosts_two))]
        a, b = rng.sample(sorted(g.vertices), 2)
        spec = AttachSpec(AttachKind.HPATH, (a, b), (rng.randint(1, 4),))
        try:
            assert is_2_admissible(g, spec)
        except PreconditionError:
            continue
    with pytest.raises(PreconditionError):
        AttachSpec(AttachKind.HPATH, (2, 2), (1,))


def test_is_2_admissible_rejects_non_path():
    with pytest.raises(PreconditionError):
        is_2_admissible(named.cycle(4), AttachSpec(AttachKind.HY, (0, 1, 2), (1, 1, 1)))


def test_chord_on_cycle_is_admissible():
    assert is_2_admissible(named.cycle(4), AttachSpec(AttachKind.HPATH, (0, 2), (1,)))


def test_is_3_admissible_decided_at_core_level():
    # the union producing the 7-vertex stage is admissible even though that
    # stage itself is only 2-connected; its core stays 3-connected
    g1 = named.staged_g1()
    spec = AttachSpec(AttachKind.HY, (2, 3, 4), (2, 1, 1))
    assert is_3_admissible(g1, spec)
    g2 = apply_attachment(g1, spec)
    assert vertex_connectivity(g2) == 2
    assert vertex_connectivity(core(g2).core) == 3


def test_is_3_admissible_rejects_same_edge_pair():
    # both anchors subdividing one core edge forces a stuck degree-2 vertex
    host = _subdivide(_subdivide(named.complete(4), (0, 1), 4), (4, 1), 5)
    # host path 0-4-5-1 realizes core edge (0,1)
    spec = AttachSpec(AttachKind.HPATH, (4, 5), (2,))
    assert not is_3_admissible(host, spec)
    oc = classify(host, spec, k=3)
    assert oc.tag == "inadmissible"
    assert vertex_connectivity(core(apply_attachment(host, spec)).core) < 3


def test_is_3_admissible_rejects_y_on_single_edge_path():
    host = named.complete(4)
    for fresh, edge in ((4, (0, 1)), (5, (0, 4)), (6, (4, 1))):
        host = _subdivide(host, edge, fresh)
    # vertices 4,5,6 all lie on the contracted path for core edge (0,1)
    spec = AttachSpec(AttachKind.HY, (4, 5, 6), (1, 1, 1))
    assert not is_3_admissible(host, spec)
    union_core = core(apply_attachment(host, spec)).core
    assert vertex_connectivity(union_core) < 3


def test_y_anchored_on_split_edge_endpoints_is_inadmissible():
    # Y with two core anchors equal to the endpoints of the third anchor's
    # contracted edge: removing those two endpoints isolates hub plus anchor
    host = _subdivide(named.complete(4), (0, 1), 4)
    spec = AttachSpec(AttachKind.HY, (0, 1, 4), (1, 1, 1))
    oc = classify(host, spec, k=3)
    assert oc.tag == "inadmissible"
    assert oc.pair == (2, 4)
    assert vertex_connectivity(core(apply_attachment(host, spec)).core) < 3


def test_is_k_admissible_path_across_missing_edge():
    host = named.octahedron()  # identical to K6 minus a perfect matching
    assert is_k_admissible(host, AttachSpec(AttachKind.HPATH, (0, 1), (1,)), 4)


def test_is_k_admissible_star_on_k5():
    host = named.complete(5)
    spec = AttachSpec(AttachKind.KSTAR, (0, 1, 2, 3), (1, 1, 1, 1))
    assert is_k_admissible(host, spec, 4)
    union_core = core(apply_attachment(host, spec)).core
    assert union_core.n == 6
    from conncraft import min_vertex_cut_bruteforce

    assert min_vertex_cut_bruteforce(union_core)[0] == 4


def test_is_k_admissible_rejects_non_core_anchor():
    host = _subdivide(named.complete(5), (0, 1), 5)
    spec = AttachSpec(AttachKind.HPATH, (2, 5), (1,))
    assert not is_k_admissible(host, spec, 4)


def test_k5_star_lane():
    host = named.complete(6)
    spec = AttachSpec(AttachKind.KSTAR, (0, 1, 2, 3, 4), (1,) * 5)
    assert is_k_admissible(host, spec, 5)
    oc = classify(host, spec)  # target inferred from the star width
    assert (oc.lam, oc.mu, oc.tag) == (1, 5, "kb")
    # longer arms contract away and measure identically
    oc = classify(host, AttachSpec(AttachKind.KSTAR, (0, 1, 2, 3, 4), (2, 1, 1, 3, 1)), k=5)
    assert (oc.lam, oc.mu, oc.tag) == (1, 5, "kb")


def test_is_k_admissible_preconditions():
    with pytest.raises(PreconditionError):
        is_k_admissible(named.complete(5), AttachSpec(AttachKind.HPATH, (0, 1), (2,)), 3)
    with pytest.raises(PreconditionError):
        is_k_admissible(named.complete(6), AttachSpec(AttachKind.KSTAR, (0, 1, 2, 3), (1,) * 4), 5)


def test_taxonomy_totality_two(hosts_two):
    rng = random.Random(41)
    trials = 0
    for _ in range(400):
        g = hosts_two[rng.randrange(len(hosts_two))]
        a, b = rng.sample(sorted(g.vertices), 2)
        spec = AttachSpec(AttachKind.HPATH, (a, b), (rng.randint(1, 4),))
        try:
            oc = classify(g, spec, k=2)
        except PreconditionError:
            continue
        trials += 1
        assert oc.tag != "inadmissible"
        assert oc.pair == TAG_PAIRS[oc.tag], (sorted(g.edges), spec, oc)
    assert trials > 300


def test_taxonomy_soundness_three(hosts_three):
    rng = random.Random(43)
    for _ in range(300):
        g = hosts_three[rng.randrange(len(hosts_three))]
        vs = sorted(g.vertices)
        if rng.random() < 0.5:
            spec = AttachSpec(AttachKind.HPATH, tuple(rng.sample(vs, 2)), (rng.randint(1, 4),))
        else:
            spec = AttachSpec(AttachKind.HY, tuple(rng.sample(vs, 3)), tuple(rng.randint(1, 3) for _ in range(3)))
        try:
            oc = classify(g, spec, k=3)
        except PreconditionError:
            continue
        if oc.tag != "inadmissible":
            assert oc.pair == TAG_PAIRS[oc.tag], (sorted(g.edges), spec, oc)
        flow_ok = vertex_connectivity(core(apply_attachment(g, spec)).core) >= 3
        assert flow_ok == (oc.tag in THREE_TAGS)
