"""Rendered reports: verdict tables as csv, graph figures as png.

render_report writes four files into a directory: verdicts.csv with the
decision-procedure outcomes (product level, per vertex, and per sample
word pair), decomposition.csv with the direct-product partition,
graph.png showing the commutation graph, and decomposition.png with the
vertices colored by their part.
"""

from __future__ import annotations

import csv
import math
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .core import FiniteMonoid, GPContext, GPPreconditionError, is_group
from .ideals import accpl_report
from .structure import coherency_report, decide_wln, direct4_partition

_PART_COLORS = {
    "free-pair": "#d62728",
    "restricted-direct": "#1f77b4",
    "group-product": "#2ca02c",
}


def _fmt(flag: bool) -> str:
    return "true" if flag else "false"


def _monoid_label(m) -> str:
    if isinstance(m, FiniteMonoid):
        return "finite(%d)%s" % (m.size, ", group" if is_group(m) else "")
    return "free(%s)" % " ".join(m.alphabet)


def _layout(n: int):
    if n == 1:
        return [(0.0, 0.0)]
    step = 2 * math.pi / n
    return [(math.cos(k * step + math.pi / 2),
             math.sin(k * step + math.pi / 2)) for k in range(n)]


def _draw_graph(ctx: GPContext, colors, title: str, path: str,
                legend=None, note: str = "") -> None:
    fig, ax = plt.subplots(figsize=(5.5, 5.5))
    pos = _layout(ctx.graph.n)
    for u, v in sorted(ctx.graph.edges):
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]],
                color="0.65", linewidth=1.5, zorder=1)
    ax.scatter([p[0] for p in pos], [p[1] for p in pos], s=1100,
               c=colors, edgecolors="black", zorder=2)
    for v, (x, y) in enumerate(pos):
        ax.annotate(ctx.vertex_names[v], (x, y),
                    ha="center", va="center", zorder=3)
        ax.annotate(_monoid_label(ctx.monoid(v)), (x, y - 0.22),
                    ha="center", va="top", fontsize=8, zorder=3)
    if legend:
        handles = [plt.Line2D([], [], marker="o", linestyle="",
                              markerfacecolor=c, markeredgecolor="black",
                              label=k) for k, c in legend]
        ax.legend(handles=handles, loc="upper right", fontsize=8)
    if note:
        ax.annotate(note, (0.5, 0.02), xycoords="axes fraction",
                    ha="center", fontsize=9, color="#d62728")
    ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.margins(0.25)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_report(cf, outdir: str):
    """Write the csv tables and figures; returns the file paths."""
    ctx = cf.context
    os.makedirs(outdir, exist_ok=True)
    names = ctx.vertex_names

    wln = decide_wln(ctx)
    accpl = accpl_report(ctx)
    coh = coherency_report(ctx, sample_words=list(cf.words.values()))
    try:
        decomp = direct4_partition(ctx)
        decomp_note = ""
    except GPPreconditionError as exc:
        decomp = None
        decomp_note = str(exc)

    verdicts_path = os.path.join(outdir, "verdicts.csv")
    with open(verdicts_path, "w", encoding="utf-8", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(("scope", "name", "check", "verdict", "detail"))
        wr.writerow(("product", "", "accpl", _fmt(accpl.overall), ""))
        wr.writerow(("product", "", "wln", _fmt(wln.overall), ""))
        wr.writerow(("product", "", "relatively_complete",
                     _fmt(wln.relatively_complete),
                     "" if wln.special_pair is None else
                     "special_pair=%s,%s" % (names[wln.special_pair[0]],
                                             names[wln.special_pair[1]])))
        for (a, b), why in wln.violations:
            wr.writerow(("product", "%s,%s" % (names[a], names[b]),
                         "violation", "false", why))
        wr.writerow(("product", "", "coherent", _fmt(coh.overall), ""))
        for v in range(ctx.graph.n):
            wr.writerow(("vertex", names[v], "wln", _fmt(wln.vertex_wln[v]),
                         _monoid_label(ctx.monoid(v))))
            wr.writerow(("vertex", names[v], "accpl", _fmt(accpl.per_vertex[v]),
                         "" if accpl.ideal_counts[v] is None else
                         "principal_left_ideals=%d" % accpl.ideal_counts[v]))
            wr.writerow(("vertex", names[v], "howson",
                         _fmt(coh.per_vertex[v].howson), ""))
            wr.writerow(("vertex", names[v], "fle",
                         _fmt(coh.per_vertex[v].fle), ""))
        for ev in coh.evidence:
            label = "%s ~ %s" % (ctx.format_word(ev.left),
                                 ctx.format_word(ev.right))
            wr.writerow(("sample", label, "intersection_generators",
                         len(ev.intersection.generators),
                         " ; ".join(ctx.format_word(g.word())
                                    for g in ev.intersection.generators)))
            wr.writerow(("sample", label, "annihilator_pairs",
                         "%d/%d" % (len(ev.left_annihilator.pairs),
                                    len(ev.right_annihilator.pairs)), ""))

    decomp_path = os.path.join(outdir, "decomposition.csv")
    with open(decomp_path, "w", encoding="utf-8", newline="") as fh:
        wr = csv.writer(fh)
        wr.writerow(("part", "kind", "vertices"))
        if decomp is None:
            wr.writerow(("-", "unavailable", decomp_note))
        else:
            for k, (part, kind) in enumerate(zip(decomp.parts, decomp.kinds)):
                wr.writerow((k, kind, " ".join(names[v] for v in part)))

    graph_path = os.path.join(outdir, "graph.png")
    _draw_graph(ctx, ["#bbbbbb"] * ctx.graph.n, "commutation graph",
                graph_path)

    decomp_png = os.path.join(outdir, "decomposition.png")
    if decomp is None:
        _draw_graph(ctx, ["#bbbbbb"] * ctx.graph.n,
                    "no direct product decomposition", decomp_png,
                    note=decomp_note)
    else:
        part_of = {}
        for part, kind in zip(decomp.parts, decomp.kinds):
            for v in part:
                part_of[v] = kind
        colors = [_PART_COLORS[part_of[v]] for v in range(ctx.graph.n)]
        legend = [(k, _PART_COLORS[k]) for k in decomp.kinds]
        _draw_graph(ctx, colors, "direct product parts", decomp_png,
                    legend=legend)

    return (verdicts_path, decomp_path, graph_path, decomp_png)
