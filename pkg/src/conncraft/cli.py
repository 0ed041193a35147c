"""Command-line surface.

Exit codes: 0 the operation succeeded / the queried property holds,
1 the property does not hold, 2 malformed input file, 3 violated
operation precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .attach import AttachSpec, classify
from .coreops import contractible_vertices, core, sim2_equivalent
from .decomp import decompose_3, ear_decompose_2
from .graph import Graph, PreconditionError, vertex_connectivity
from .io import EdgeListError, format_edge_list, parse_edge_list, to_dot
from .synth import generate, search_construction_exists, verify
from .trace import ConstructionTrace, graph_to_json_dict, replay

OK = 0
PROPERTY_FAILS = 1
MALFORMED = 2
PRECONDITION = 3


@dataclass
class CommandResult:
    code: int
    text: str = ""
    payload: dict = field(default_factory=dict)


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except EdgeListError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc


def _read_trace(path: str) -> ConstructionTrace:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc
    try:
        return ConstructionTrace.from_json(text)
    except PreconditionError as exc:
        # malformed persisted data is an input error, not a precondition one
        raise EdgeListError(f"{path}: {exc}") from exc


def _read_spec(path: str) -> AttachSpec:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise EdgeListError(f"{path}: not valid JSON: {exc}") from exc
    try:
        return AttachSpec.from_json_dict(data)
    except PreconditionError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc


def _write_or_print(text: str, out: Optional[str]) -> str:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        return f"wrote {out}"
    return text.rstrip("\n")


def _rng_seed(args: argparse.Namespace) -> int:
    if args.rng is not None:
        return args.rng
    env = os.environ.get("CONNCRAFT_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise PreconditionError(f"CONNCRAFT_SEED must be an integer, got {env!r}") from None
    raise PreconditionError("randomized commands require --rng <int> (or CONNCRAFT_SEED)")


def _cmd_core(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    cert = core(g)
    log = [{"removed": r.removed, "left": r.left, "right": r.right} for r in cert.log]
    payload = {"core": graph_to_json_dict(cert.core), "log": log}
    log_json = json.dumps(log, sort_keys=True)
    if args.log:
        Path(args.log).write_text(json.dumps(log, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    body = format_edge_list(cert.core)
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        text = f"wrote {args.out}" + ("" if args.log else f"\nlog: {log_json}")
    else:
        text = body.rstrip("\n")
        if not args.log:
            text += f"\n# contraction log: {log_json}"
    return CommandResult(OK, text, payload)


def _cmd_is_core(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    cands = contractible_vertices(g)
    ok = not cands
    text = "core" if ok else f"not a core ({len(cands)} contractible vertices)"
    return CommandResult(OK if ok else PROPERTY_FAILS, text, {"is_core": ok, "contractible": cands})


def _cmd_equiv(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.left)
    h = _read_graph(args.right)
    ok = sim2_equivalent(g, h)
    cg, ch = core(g).core, core(h).core
    if ok:
        text = f"equivalent (core: {cg.n} vertices)"
    else:
        text = f"not equivalent (cores: {cg.n} vs {ch.n} vertices)"
    payload = {"equivalent": ok, "core_vertices": [cg.n, ch.n]}
    return CommandResult(OK if ok else PROPERTY_FAILS, text, payload)


def _cmd_connectivity(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    k = vertex_connectivity(g)
    return CommandResult(OK, str(k), {"connectivity": k})


def _cmd_classify(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    spec = _read_spec(args.spec)
    oc = classify(g, spec, k=args.k)
    text = f"{oc.lam} {oc.mu} {oc.tag} {'yes' if oc.admissible else 'no'}"
    payload = {"lambda": oc.lam, "mu": oc.mu, "tag": oc.tag, "admissible": oc.admissible}
    return CommandResult(OK, text, payload)


def _cmd_generate(args: argparse.Namespace) -> CommandResult:
    seed = _rng_seed(args)
    trace = generate(seed, args.k, args.steps, arm_mean=args.arm_mean)
    body = trace.to_json()
    text = _write_or_print(body, args.out)
    return CommandResult(OK, text, trace.to_json_dict())


def _cmd_replay(args: argparse.Namespace) -> CommandResult:
    trace = _read_trace(args.trace)
    g = replay(trace)
    body = format_edge_list(g)
    text = _write_or_print(body, args.out)
    return CommandResult(OK, text, {"graph": graph_to_json_dict(g)})


def _cmd_verify(args: argparse.Namespace) -> CommandResult:
    trace = _read_trace(args.trace)
    report = verify(trace)
    lines = [
        f"seed: core connectivity {report.seed_core_connectivity} "
        f"[{'ok' if report.seed_ok else 'FAIL'}]"
    ]
    for s in report.steps:
        lines.append(
            f"step {s.index}: {s.spec.kind.value} anchors={list(s.spec.anchors)} "
            f"({s.opclass.lam},{s.opclass.mu}) tag={s.opclass.tag} "
            f"core={s.core_vertices}v/{s.core_edges}e conn={s.core_connectivity} "
            f"[{'ok' if s.ok else 'FAIL'}]"
        )
    lines.append("verdict: " + ("admissible" if report.ok else "NOT admissible"))
    payload = {
        "ok": report.ok,
        "k": report.k,
        "seed_ok": report.seed_ok,
        "seed_core_connectivity": report.seed_core_connectivity,
        "steps": [
            {
                "index": s.index,
                "kind": s.spec.kind.value,
                "anchors": list(s.spec.anchors),
                "arms": list(s.spec.arms),
                "lambda": s.opclass.lam,
                "mu": s.opclass.mu,
                "tag": s.opclass.tag,
                "core_vertices": s.core_vertices,
                "core_edges": s.core_edges,
                "core_connectivity": s.core_connectivity,
                "admissible": s.admissible,
                "ok": s.ok,
            }
            for s in report.steps
        ],
    }
    if args.report_dir:
        from .report import write_verify_report

        tsv, png = write_verify_report(report, args.report_dir)
        lines.append(f"report: {tsv} {png}")
    return CommandResult(OK if report.ok else PROPERTY_FAILS, "\n".join(lines), payload)


def _cmd_decompose(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    trace = ear_decompose_2(g) if args.k == 2 else decompose_3(g)
    body = trace.to_json()
    text = _write_or_print(body, args.out)
    return CommandResult(OK, text, trace.to_json_dict())


def _cmd_search(args: argparse.Namespace) -> CommandResult:
    start = _read_graph(args.start)
    target = _read_graph(args.target)
    trace = search_construction_exists(start, target, args.max_steps, args.k)
    if trace is None:
        return CommandResult(PROPERTY_FAILS, "no construction", {"found": False})
    body = trace.to_json()
    text = _write_or_print(body, args.out)
    if not args.out:
        text = f"construction found ({len(trace.steps)} steps)\n{text}"
    return CommandResult(OK, text, {"found": True, "trace": trace.to_json_dict()})


def _cmd_export_dot(args: argparse.Namespace) -> CommandResult:
    g = _read_graph(args.graph)
    body = to_dot(g)
    text = _write_or_print(body, args.out)
    payload = {"dot": body}
    if args.render:
        from .report import render_graph

        out = render_graph(g, args.render)
        text += f"\nrendered {out}"
        payload["rendered"] = str(out)
    return CommandResult(OK, text, payload)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conncraft", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("core", _cmd_core, "contract a graph to its core")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="write the core edge list here")
    p.add_argument("--log", help="write the contraction log JSON here")

    p = add("is-core", _cmd_is_core, "check that no contraction applies")
    p.add_argument("graph")

    p = add("equiv", _cmd_equiv, "decide series-equivalence of two graphs")
    p.add_argument("left")
    p.add_argument("right")

    p = add("connectivity", _cmd_connectivity, "vertex connectivity")
    p.add_argument("graph")

    p = add("classify", _cmd_classify, "classify one attachment against a host")
    p.add_argument("graph")
    p.add_argument("spec", help="attachment spec JSON file")
    p.add_argument("--k", type=int, default=None, help="target connectivity (default: inferred)")

    p = add("generate", _cmd_generate, "generate a random construction trace")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--rng", type=int, default=None, help="RNG seed (or CONNCRAFT_SEED)")
    p.add_argument("--arm-mean", type=float, default=1.5)
    p.add_argument("-o", "--out")

    p = add("replay", _cmd_replay, "replay a trace to its graph")
    p.add_argument("trace")
    p.add_argument("-o", "--out")

    p = add("verify", _cmd_verify, "verify a trace step by step")
    p.add_argument("trace")
    p.add_argument("--report-dir", help="write TSV + PNG report here")

    p = add("decompose", _cmd_decompose, "recover a construction trace")
    p.add_argument("--k", type=int, choices=(2, 3), required=True)
    p.add_argument("graph")
    p.add_argument("-o", "--out")

    p = add("search", _cmd_search, "bounded search for a construction between graphs")
    p.add_argument("start")
    p.add_argument("target")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-steps", type=int, required=True)
    p.add_argument("-o", "--out")

    p = add("export-dot", _cmd_export_dot, "emit DOT (optionally render an image)")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    p.add_argument("--render", help="also draw the graph to this image file")

    return parser


def run(argv: list[str]) -> CommandResult:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return CommandResult(MALFORMED if exc.code not in (0, None) else OK)
    try:
        return args.func(args)
    except EdgeListError as exc:
        return CommandResult(MALFORMED, f"error: {exc}", {"error": str(exc)})
    except PreconditionError as exc:
        return CommandResult(PRECONDITION, f"precondition violated: {exc}", {"error": str(exc)})


def main() -> None:
    result = run(sys.argv[1:])
    use_json = "--json" in sys.argv[1:]
    if use_json:
        print(json.dumps(result.payload, indent=2, sort_keys=True))
    elif result.text:
        print(result.text)
    sys.exit(result.code)


if __name__ == "__main__":
    main()
