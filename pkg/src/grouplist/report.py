"""Serialise a BenchReport: key/value text, JSON, CSV grid and a bar chart."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .bench import BenchReport

ENGINES = (("Inverted index", "inverted"), ("Group-list", "grouplist"))


def format_text(report: BenchReport) -> str:
    """Key/value sections: ``[index]`` then one ``[group NAME]`` per group."""
    out = ["[index]"]
    for k, v in report.to_dict()["index"].items():
        out.append(f"{k} = {_fmt(v)}")
    out.append(f"op = {report.op}")
    out.append(f"correct = {str(report.correct).lower()}")
    for g in report.to_dict()["groups"]:
        out.append("")
        out.append(f"[group {g['name']}]")
        for k, v in g.items():
            if k != "name":
                out.append(f"{k} = {_fmt(v)}")
    return "\n".join(out) + "\n"


def _fmt(v):
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def format_grid(report: BenchReport) -> str:
    """Engines as rows, groups as columns, total seconds per group."""
    names = [g.name for g in report.groups]
    width = max([len(n) for n in names] + [8])
    head = f"{'':<16}" + "".join(f"{n:>{width + 2}}" for n in names)
    rows = [head]
    for label, key in ENGINES:
        cells = "".join(
            f"{getattr(g, key + '_total_s'):>{width + 2}.3f}" for g in report.groups
        )
        rows.append(f"{label:<16}{cells}")
    rows.append(f"{'Speedup':<16}" + "".join(f"{g.speedup:>{width + 2}.2f}" for g in report.groups))
    return "\n".join(rows) + "\n"


CSV_FIELDS = (
    "group", "engine", "n_queries", "total_s", "mean_s", "median_s",
    "mean_result_size", "correct",
)


def format_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for g in report.groups:
        for _, key in ENGINES:
            w.writerow([
                g.name, key, g.n_queries,
                f"{getattr(g, key + '_total_s'):.6f}",
                f"{getattr(g, key + '_mean_s'):.9f}",
                f"{getattr(g, key + '_median_s'):.9f}",
                f"{g.mean_result_size:.3f}",
                str(g.correct).lower(),
            ])
    return buf.getvalue()


def write_report(report: BenchReport, path, figure: bool = True) -> dict:
    """Write the text report at ``path`` plus ``.json``, ``.csv`` and ``.png`` siblings.

    Returns the mapping of artefact kind to the path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    stem = path.with_suffix("") if path.suffix else path
    written = {"text": path}
    path.write_text(format_text(report), encoding="utf-8")
    js = stem.with_suffix(".json")
    js.write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    written["json"] = js
    cs = stem.with_suffix(".csv")
    cs.write_text(format_csv(report), encoding="utf-8")
    written["csv"] = cs
    if figure and report.groups:
        from .plotting import plot_timings

        png = stem.with_suffix(".png")
        plot_timings(report, png)
        written["figure"] = png
    return written
