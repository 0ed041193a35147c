from __future__ import annotations

import pytest

from conncraft import (
    AttachKind,
    AttachSpec,
    ConstructionTrace,
    PreconditionError,
    are_isomorphic,
    core,
    generate,
    replay,
    search_construction_exists,
    verify,
    vertex_connectivity,
)
from conncraft import named

from conftest import FIXTURES


def staged_trace() -> ConstructionTrace:
    return ConstructionTrace(
        k=3,
        seed=named.staged_g0(),
        steps=(
            AttachSpec(AttachKind.HPATH, (0, 4), (1,)),
            AttachSpec(AttachKind.HY, (2, 3, 4), (2, 1, 1)),
            AttachSpec(AttachKind.HPATH, (4, 6), (1,)),
        ),
    )


def test_replay_staged_trace_matches_stages():
    assert replay(staged_trace()) == named.staged_final()
    assert replay(staged_trace().prefix(1)) == named.staged_g1()
    assert replay(staged_trace().prefix(2)) == named.staged_g2()


def test_replay_empty_trace_is_seed():
    t = ConstructionTrace(k=3, seed=named.complete(4))
    assert replay(t) == named.complete(4)


def test_replay_reports_failing_step_index():
    t = ConstructionTrace(
        k=3,
        seed=named.complete(4),
        steps=(
            AttachSpec(AttachKind.HY, (0, 1, 2), (1, 1, 1)),
            AttachSpec(AttachKind.HPATH, (0, 99), (1,)),
        ),
    )
    with pytest.raises(PreconditionError, match="step 1"):
        replay(t)


def test_trace_json_matches_fixture():
    assert staged_trace().to_json() == (FIXTURES / "staged_trace.json").read_text(encoding="utf-8")


def test_trace_json_roundtrip():
    t = generate(5, 3, 4)
    back = ConstructionTrace.from_json(t.to_json())
    assert back == t
    assert replay(back) == replay(t)


def test_verify_staged_trace():
    report = verify(staged_trace())
    assert report.ok and report.seed_ok
    assert [s.opclass.tag for s in report.steps] == ["3b", "3c", "3b"]
    assert [s.core_connectivity for s in report.steps] == [3, 3, 3]
    # the middle stage is only 2-connected as a graph; its core is what counts
    assert vertex_connectivity(replay(staged_trace().prefix(2))) == 2


def test_verify_flags_inadmissible_step():
    from conncraft import series_expand

    seed = series_expand(series_expand(named.complete(4), (0, 1), 4), (4, 1), 5)
    bad = ConstructionTrace(
        k=3,
        seed=seed,
        steps=(AttachSpec(AttachKind.HPATH, (4, 5), (2,)),),
    )
    report = verify(bad)
    assert not report.ok
    assert not report.steps[0].admissible
    assert report.steps[0].core_connectivity < 3


def test_verify_rejects_wrong_seed_family():
    report = verify(ConstructionTrace(k=2, seed=named.complete(4)))
    assert not report.seed_ok and not report.ok
    report = verify(ConstructionTrace(k=3, seed=named.cycle(5)))
    assert not report.seed_ok


def test_generate_deterministic_bytes():
    a = generate(42, 3, 8)
    b = generate(42, 3, 8)
    assert a.to_json() == b.to_json()
    assert generate(43, 3, 8).to_json() != a.to_json()


def test_generate_zero_steps_has_k4_class_seed():
    t = generate(9, 3, 0)
    assert are_isomorphic(core(t.seed).core, named.complete(4)) is not None
    assert replay(t) == t.seed


def test_generate_verifies_each_k():
    for k in (2, 3, 4, 5):
        for seed in range(8):
            t = generate(seed, k, 5)
            report = verify(t)
            assert report.ok, (k, seed)
            assert vertex_connectivity(core(replay(t)).core) >= k


def test_generated_two_connected_graphs_are_two_connected():
    for seed in range(8):
        g = replay(generate(seed, 2, 6))
        assert vertex_connectivity(g) >= 2


def test_generate_prefix_closure():
    t = generate(17, 3, 6)
    for i in range(len(t.steps) + 1):
        assert verify(t.prefix(i)).ok


def test_generate_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        generate(1, 1, 3)
    with pytest.raises(PreconditionError):
        generate(1, 3, -1)


def test_search_identity():
    t = search_construction_exists(named.complete(4), named.complete(4), 0, 3)
    assert t is not None and len(t.steps) == 0


def test_search_k5_to_octahedron_absent():
    # vertex/edge counting leaves only a length-2 path addition, which
    # strands a degree-2 vertex; bounded search confirms no route exists
    assert search_construction_exists(named.complete(5), named.octahedron(), 3, 4) is None


def test_search_finds_prism():
    t = search_construction_exists(named.complete(4), named.prism(), 4, 3)
    assert t is not None
    got = replay(t)
    assert are_isomorphic(core(got).core, named.prism()) is not None
    assert verify(t).ok


def test_search_finds_k5_from_k4():
    t = search_construction_exists(named.complete(4), named.complete(5), 3, 3)
    assert t is not None
    assert are_isomorphic(core(replay(t)).core, named.complete(5)) is not None


def test_search_respects_step_bound():
    assert search_construction_exists(named.complete(4), named.complete(5), 0, 3) is None
