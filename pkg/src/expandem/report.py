"""Render reliability reports as markdown/CSV/JSON tables plus figures.

Outputs are byte-deterministic for a fixed input: floats are formatted at
fixed precision, rows follow stable orders, and the PNG writer is stripped
of its software metadata.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .harness import ReliabilityReport

ENTITY_GROUPS = ("Numeric", "Non-numeric", "N/A")
_PNG_META = {"Software": None}  # drop the library version string for stable bytes


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.4f}"


def _markdown_table(headers: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines)


def _csv_text(headers: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue()


def calls_series(question_count: int, model_count: int) -> list[dict]:
    """Cumulative inference calls as more models are evaluated: judge-based
    evaluation grows linearly, expansion-based stays at the one-time cost."""
    return [
        {
            "models_evaluated": m,
            "expansion_calls": question_count,
            "judge_calls": m * question_count,
        }
        for m in range(1, model_count + 1)
    ]


def _model_columns(reports: Sequence[ReliabilityReport]) -> list[str]:
    models: list[str] = []
    for report in reports:
        for model in report.per_model:
            if model not in models:
                models.append(model)
    return sorted(models)


def _reliability_rows(reports, models) -> list[list[str]]:
    return [
        [r.metric + (f" ({r.answer_source})" if r.answer_source != "original" else "")]
        + [_fmt(r.per_model.get(m)) for m in models]
        + [_fmt(r.average)]
        for r in reports
    ]


def _surface_rows(reports, models) -> list[list[str]]:
    rows = [
        [r.metric + (f" ({r.answer_source})" if r.answer_source != "original" else "")]
        + [_fmt(r.surface_accuracy.get(m)) for m in models]
        + ["yes" if r.ranking_order_matches_human else "no"]
        for r in reports
    ]
    if reports:
        human = reports[0].human_surface_accuracy
        rows.append(["human"] + [_fmt(human.get(m)) for m in models] + ["yes"])
    return rows


def _label(report: ReliabilityReport) -> str:
    suffix = f" ({report.answer_source})" if report.answer_source != "original" else ""
    return report.metric + suffix


def render_report(
    reports: Sequence[ReliabilityReport],
    out_dir: str | Path,
    formats: Sequence[str] = ("markdown", "csv", "json"),
    figures: bool = True,
    question_count: Optional[int] = None,
    model_count: Optional[int] = None,
) -> list[Path]:
    """Write the report files under out_dir and return their paths."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    reports = list(reports)
    models = _model_columns(reports)
    if model_count is None:
        model_count = max(1, len(models))
    if question_count is None:
        counts = [r.pair_count // max(1, len(r.per_model)) for r in reports if r.per_model]
        question_count = counts[0] if counts else 0
    series = calls_series(question_count, model_count)
    rarity_labels = list(reports[0].rarity_buckets) if reports else []
    written: list[Path] = []

    if "json" in formats:
        payload = {
            "reports": [r.to_dict() for r in reports],
            "calls_series": series,
        }
        path = out_dir / "report.json"
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        written.append(path)

    tables = {
        "reliability": (
            ["method"] + models + ["Avg."],
            _reliability_rows(reports, models),
        ),
        "entity_breakdown": (
            ["method"] + list(ENTITY_GROUPS),
            [[_label(r)] + [_fmt(r.entity_groups.get(g)) for g in ENTITY_GROUPS] for r in reports],
        ),
        "rarity_breakdown": (
            ["method"] + rarity_labels,
            [[_label(r)] + [_fmt(r.rarity_buckets.get(b)) for b in rarity_labels] for r in reports],
        ),
        "surface_accuracy": (
            ["method"] + models + ["order matches human"],
            _surface_rows(reports, models),
        ),
        "calls_series": (
            ["models_evaluated", "expansion_calls", "judge_calls"],
            [[str(s["models_evaluated"]), str(s["expansion_calls"]), str(s["judge_calls"])] for s in series],
        ),
    }

    if "csv" in formats:
        for name, (headers, rows) in tables.items():
            path = out_dir / f"{name}.csv"
            path.write_text(_csv_text(headers, rows), encoding="utf-8")
            written.append(path)

    if "markdown" in formats:
        sections = ["# Evaluation report", ""]
        titles = {
            "reliability": "Reliability (agreement with human verdicts)",
            "entity_breakdown": "Reliability by entity group",
            "rarity_breakdown": "Reliability by entity rarity (relevant docs)",
            "surface_accuracy": "Surface accuracy per model",
            "calls_series": "Inference calls vs number of evaluated models",
        }
        for name, (headers, rows) in tables.items():
            sections.append(f"## {titles[name]}")
            sections.append("")
            sections.append(_markdown_table(headers, rows))
            sections.append("")
        path = out_dir / "report.md"
        path.write_text("\n".join(sections), encoding="utf-8")
        written.append(path)

    if figures:
        written.extend(_render_figures(reports, series, rarity_labels, out_dir))
    return written


def _render_figures(reports, series, rarity_labels, out_dir: Path) -> list[Path]:
    written = []

    if reports:
        fig, ax = plt.subplots(figsize=(7, 4))
        width = 0.8 / len(reports)
        xs = range(len(ENTITY_GROUPS))
        for i, report in enumerate(reports):
            values = [report.entity_groups.get(g) or 0.0 for g in ENTITY_GROUPS]
            ax.bar([x + i * width for x in xs], values, width=width, label=_label(report))
        ax.set_xticks([x + 0.4 - width / 2 for x in xs])
        ax.set_xticklabels(ENTITY_GROUPS)
        ax.set_ylabel("agreement with human verdicts")
        ax.set_ylim(0, 1.05)
        ax.legend(fontsize=8)
        path = out_dir / "entity_breakdown.png"
        fig.savefig(path, dpi=100, metadata=_PNG_META)
        plt.close(fig)
        written.append(path)

        fig, ax = plt.subplots(figsize=(7, 4))
        for report in reports:
            values = [report.rarity_buckets.get(b) for b in rarity_labels]
            ax.plot(
                range(len(rarity_labels)),
                [v if v is not None else float("nan") for v in values],
                marker="o",
                label=_label(report),
            )
        ax.set_xticks(range(len(rarity_labels)))
        ax.set_xticklabels(rarity_labels)
        ax.set_xlabel("relevant docs")
        ax.set_ylabel("agreement with human verdicts")
        ax.set_ylim(0, 1.05)
        ax.legend(fontsize=8)
        path = out_dir / "rarity_breakdown.png"
        fig.savefig(path, dpi=100, metadata=_PNG_META)
        plt.close(fig)
        written.append(path)

    fig, ax = plt.subplots(figsize=(7, 4))
    xs = [s["models_evaluated"] for s in series]
    ax.plot(xs, [s["judge_calls"] for s in series], marker="o", label="judge-based evaluation")
    ax.plot(xs, [s["expansion_calls"] for s in series], marker="s", label="one-time expansion")
    ax.set_xlabel("models evaluated")
    ax.set_ylabel("cumulative inference calls")
    ax.legend()
    path = out_dir / "inference_calls.png"
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)
    written.append(path)
    return written
