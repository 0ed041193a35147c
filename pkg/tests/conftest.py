from __future__ import annotations

import random
from pathlib import Path

import pytest

from conncraft import Graph, generate, replay, series_expand
from conncraft import named

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def _subdivided(g: Graph, times: int, seed: int) -> Graph:
    rng = random.Random(seed)
    for _ in range(times):
        edge = sorted(g.edges)[rng.randrange(g.m)]
        g = series_expand(g, edge, max(g.vertices) + 1)
    return g


def named_graphs() -> dict[str, Graph]:
    return {
        "k4": named.complete(4),
        "k5": named.complete(5),
        "k6": named.complete(6),
        "c4": named.cycle(4),
        "c5": named.cycle(5),
        "c6": named.cycle(6),
        "c7": named.cycle(7),
        "diamond": named.diamond(),
        "prism": named.prism(),
        "k222": named.octahedron(),
        "cube": named.cube(),
        "theta": named.theta(),
        "theta232": named.theta((2, 3, 2)),
        "wheel4": named.wheel(4),
        "wheel5": named.wheel(5),
        "claw_pair_tree": named.claw_pair_tree(),
        "stretched_k4_a": named.stretched_k4_a(),
        "stretched_k4_b": named.stretched_k4_b(),
        "staged_g0": named.staged_g0(),
        "staged_g1": named.staged_g1(),
        "staged_g2": named.staged_g2(),
        "staged_final": named.staged_final(),
    }


@pytest.fixture(scope="session")
def corpus_small() -> list[Graph]:
    """Connected graphs of at most 12 vertices, mixed connectivity."""
    out = [g for g in named_graphs().values() if g.n <= 12]
    out.append(_subdivided(named.complete(4), 3, seed=1))
    out.append(_subdivided(named.prism(), 2, seed=2))
    out.append(_subdivided(named.wheel(4), 3, seed=3))
    out.append(named.path(5))
    for s in range(4):
        g = replay(generate(s, 2, 3))
        if g.n <= 12:
            out.append(g)
    return out


@pytest.fixture(scope="session")
def corpus_three_core() -> list[Graph]:
    """At least fifty graphs on <= 10 vertices whose cores are 3-connected."""
    base = [
        named.complete(4),
        named.complete(5),
        named.complete(6),
        named.wheel(4),
        named.wheel(5),
        named.wheel(6),
        named.wheel(7),
        named.prism(),
        named.prism(4),
        named.octahedron(),
        named.cube(),
        named.moebius_ladder(8),
        named.petersen(),
        named.complete_multipartite(3, 3),
        named.complete_multipartite(2, 2, 2),
        named.complete_multipartite(1, 2, 2),
        named.staged_g0(),
        named.staged_g1(),
        named.staged_g2(),
        named.staged_final(),
    ]
    out = list(base)
    seed = 100
    for g in base:
        for times in (1, 2, 3):
            if g.n + times <= 10:
                out.append(_subdivided(g, times, seed=seed))
                seed += 1
    for s in range(30):
        g = replay(generate(1000 + s, 3, 2))
        if g.n <= 10:
            out.append(g)
    return [g for g in out if g.n <= 10]


@pytest.fixture(scope="session")
def hosts_two() -> list[Graph]:
    """2-connected hosts (<= 12 vertices) for path-attachment trials."""
    ns = named_graphs()
    out = [ns[k] for k in ("c4", "c5", "c6", "c7", "diamond", "theta", "theta232", "prism", "wheel4", "stretched_k4_a", "stretched_k4_b", "k4", "k222")]
    out.append(_subdivided(named.complete(4), 2, seed=21))
    out.append(_subdivided(named.prism(), 2, seed=22))
    for s in range(6):
        g = replay(generate(2000 + s, 2, 4))
        if g.n <= 12:
            out.append(g)
    return [g for g in out if g.n <= 12]


@pytest.fixture(scope="session")
def hosts_three() -> list[Graph]:
    """Hosts with 3-connected cores, including well-subdivided ones."""
    out = [
        named.complete(4),
        named.complete(5),
        named.wheel(4),
        named.wheel(5),
        named.prism(),
        named.octahedron(),
        named.staged_g0(),
        named.staged_g2(),
        named.staged_final(),
    ]
    seed = 50
    for g in (named.complete(4), named.wheel(4), named.wheel(5), named.prism()):
        for times in (2, 3, 4):
            out.append(_subdivided(g, times, seed=seed))
            seed += 1
    for s in range(8):
        g = replay(generate(3000 + s, 3, 3))
        if g.n <= 16:
            out.append(g)
    return out


@pytest.fixture(scope="session")
def hosts_four() -> list[Graph]:
    """Hosts with 4-connected cores for the k >= 4 taxonomy."""
    out = [
        named.complete(5),
        named.complete(6),
        named.octahedron(),
        _subdivided(named.complete(5), 2, seed=71),
        _subdivided(named.octahedron(), 3, seed=72),
    ]
    for s in range(6):
        g = replay(generate(4000 + s, 4, 3))
        if g.n <= 16:
            out.append(g)
    return out
