"""Rendered outputs: verification reports (TSV + figure) and graph drawings.

matplotlib is imported lazily so the rest of the package stays importable
without a plotting backend configured.
"""

from __future__ import annotations

import math
from pathlib import Path

from .graph import Graph
from .synth import VerifyReport


def _mpl():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def verify_report_rows(report: VerifyReport) -> list[dict]:
    rows = [
        {
            "step": 0,
            "kind": "seed",
            "anchors": "",
            "arms": "",
            "lambda": "",
            "mu": "",
            "tag": "",
            "admissible": "",
            "core_vertices": "",
            "core_edges": "",
            "core_connectivity": report.seed_core_connectivity,
            "ok": report.seed_ok,
        }
    ]
    for s in report.steps:
        rows.append(
            {
                "step": s.index + 1,
                "kind": s.spec.kind.value,
                "anchors": ",".join(map(str, s.spec.anchors)),
                "arms": ",".join(map(str, s.spec.arms)),
                "lambda": s.opclass.lam,
                "mu": s.opclass.mu,
                "tag": s.opclass.tag,
                "admissible": s.admissible,
                "core_vertices": s.core_vertices,
                "core_edges": s.core_edges,
                "core_connectivity": s.core_connectivity,
                "ok": s.ok,
            }
        )
    return rows


_COLUMNS = [
    "step",
    "kind",
    "anchors",
    "arms",
    "lambda",
    "mu",
    "tag",
    "admissible",
    "core_vertices",
    "core_edges",
    "core_connectivity",
    "ok",
]


def write_verify_report(report: VerifyReport, outdir: str | Path) -> tuple[Path, Path]:
    """Write ``verify_report.tsv`` and ``verify_report.png`` under ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tsv_path = outdir / "verify_report.tsv"
    rows = verify_report_rows(report)
    lines = ["\t".join(_COLUMNS)]
    for row in rows:
        lines.append("\t".join(str(row[c]) for c in _COLUMNS))
    tsv_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    plt = _mpl()
    steps = [r["step"] for r in rows]
    conn = [r["core_connectivity"] for r in rows]
    core_v = [r["core_vertices"] for r in rows[1:]]
    core_e = [r["core_edges"] for r in rows[1:]]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.5))
    if core_v:
        ax1.plot(steps[1:], core_v, marker="o", label="core vertices")
        ax1.plot(steps[1:], core_e, marker="s", label="core edges")
    ax1.set_xlabel("step")
    ax1.set_ylabel("count")
    ax1.set_title("core growth")
    ax1.legend(loc="best", fontsize=8)
    ax2.plot(steps, conn, marker="o", label="core connectivity")
    ax2.axhline(report.k, linestyle="--", linewidth=1, label=f"target k={report.k}")
    bad = [r["step"] for r in rows if r["ok"] is False]
    if bad:
        ax2.scatter(bad, [conn[s] for s in bad], marker="x", s=60, zorder=3, label="failed")
    ax2.set_xlabel("step")
    ax2.set_ylabel("connectivity")
    verdict = "PASS" if report.ok else "FAIL"
    ax2.set_title(f"verification: {verdict}")
    ax2.legend(loc="best", fontsize=8)
    fig.tight_layout()
    png_path = outdir / "verify_report.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return tsv_path, png_path


def _layout(g: Graph, iterations: int = 80) -> dict[int, tuple[float, float]]:
    """Deterministic force-directed layout seeded from a circle."""
    ids = sorted(g.vertices)
    n = len(ids)
    pos = {
        v: (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n))
        for i, v in enumerate(ids)
    }
    if n <= 3:
        return pos
    span = 2.0 / math.sqrt(n)
    temp = 0.25
    for _ in range(iterations):
        disp = {v: [0.0, 0.0] for v in ids}
        for i, u in enumerate(ids):
            for v in ids[i + 1 :]:
                dx = pos[u][0] - pos[v][0]
                dy = pos[u][1] - pos[v][1]
                dist = max(math.hypot(dx, dy), 1e-6)
                force = span * span / dist
                disp[u][0] += dx / dist * force
                disp[u][1] += dy / dist * force
                disp[v][0] -= dx / dist * force
                disp[v][1] -= dy / dist * force
        for u, v in g.edges:
            dx = pos[u][0] - pos[v][0]
            dy = pos[u][1] - pos[v][1]
            dist = max(math.hypot(dx, dy), 1e-6)
            force = dist * dist / span
            disp[u][0] -= dx / dist * force
            disp[u][1] -= dy / dist * force
            disp[v][0] += dx / dist * force
            disp[v][1] += dy / dist * force
        for v in ids:
            dx, dy = disp[v]
            dist = max(math.hypot(dx, dy), 1e-6)
            step = min(dist, temp)
            pos[v] = (pos[v][0] + dx / dist * step, pos[v][1] + dy / dist * step)
        temp *= 0.95
    return pos


def render_graph(g: Graph, path: str | Path, title: str = "") -> Path:
    """Draw the graph to an image file (format from the extension)."""
    plt = _mpl()
    pos = _layout(g)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for u, v in sorted(g.edges):
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color="#4477aa", linewidth=1.2, zorder=1)
    xs = [pos[v][0] for v in sorted(g.vertices)]
    ys = [pos[v][1] for v in sorted(g.vertices)]
    ax.scatter(xs, ys, s=220, color="#eeeeee", edgecolors="#222222", zorder=2)
    for v in sorted(g.vertices):
        ax.annotate(str(v), pos[v], ha="center", va="center", fontsize=8, zorder=3)
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.set_aspect("equal")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
