"""Replayable construction traces: a seed graph plus ordered attachments."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .attach import AttachSpec, apply_attachment
from .graph import Graph, PreconditionError


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "vertices": sorted(g.vertices),
        "edges": [list(e) for e in sorted(g.edges)],
    }


def graph_from_json_dict(d: dict) -> Graph:
    try:
        return Graph(d["vertices"], [tuple(e) for e in d["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise PreconditionError(f"malformed graph object: {exc}") from exc


@dataclass(frozen=True)
class ConstructionTrace:
    """Seed graph plus attachment steps; replaying folds the steps in order."""

    k: int
    seed: Graph
    steps: tuple[AttachSpec, ...] = ()
    rng_seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.k < 2:
            raise PreconditionError("target connectivity must be at least 2")
        object.__setattr__(self, "steps", tuple(self.steps))

    def prefix(self, length: int) -> "ConstructionTrace":
        return ConstructionTrace(self.k, self.seed, self.steps[:length], self.rng_seed)

    def to_json_dict(self) -> dict:
        d = {
            "k": self.k,
            "seed": graph_to_json_dict(self.seed),
            "steps": [s.to_json_dict() for s in self.steps],
        }
        if self.rng_seed is not None:
            d["rng_seed"] = self.rng_seed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json_dict(cls, d: dict) -> "ConstructionTrace":
        try:
            k = int(d["k"])
            seed = graph_from_json_dict(d["seed"])
            steps = tuple(AttachSpec.from_json_dict(s) for s in d["steps"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, PreconditionError):
                raise
            raise PreconditionError(f"malformed trace: {exc}") from exc
        return cls(k=k, seed=seed, steps=steps, rng_seed=d.get("rng_seed"))

    @classmethod
    def from_json(cls, text: str) -> "ConstructionTrace":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PreconditionError(f"trace is not valid JSON: {exc}") from exc
        return cls.from_json_dict(data)


def replay(trace: ConstructionTrace) -> Graph:
    """Fold the trace's attachments over its seed graph."""
    g = trace.seed
    for i, spec in enumerate(trace.steps):
        try:
            g = apply_attachment(g, spec)
        except PreconditionError as exc:
            raise PreconditionError(f"step {i}: {exc}") from exc
    return g
