"""Report containers and deterministic emission to JSON, CSV, and PNG files.

Every run that writes files writes the same bytes for the same inputs: keys
are sorted, line terminators are fixed, fractions are rendered exactly, and
figures strip the renderer's software tag. Timing and other run-to-run noise
belong on stdout, never in emitted files.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import ConfigError

KNOWN_FORMATS = ("json", "csv", "png")


@dataclass
class Table:
    name: str
    header: list[str]
    rows: list[list]


@dataclass
class FigureSpec:
    name: str
    kind: str  # "line" or "bar"
    title: str
    xlabel: str
    ylabel: str
    x: list
    series: list[tuple[str, list]]
    log_y: bool = False


@dataclass
class Report:
    title: str
    meta: dict = field(default_factory=dict)
    tables: list[Table] = field(default_factory=list)
    figures: list[FigureSpec] = field(default_factory=list)

    def table(self, name: str) -> Table:
        for t in self.tables:
            if t.name == name:
                return t
        raise KeyError(name)


def _json_cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_json_cell(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _json_cell(v) for k, v in value.items()}
    return value


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _write_json(report: Report, path: str) -> None:
    payload = {
        "title": report.title,
        "meta": _json_cell(report.meta),
        "tables": {
            t.name: {"header": list(t.header), "rows": [_json_cell(r) for r in t.rows]}
            for t in report.tables
        },
    }
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _write_csv(table: Table, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(table.header)
        for row in table.rows:
            writer.writerow([_csv_cell(v) for v in row])


def _write_figure(fig_spec: FigureSpec, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.0), dpi=120)
    if fig_spec.kind == "bar":
        count = len(fig_spec.series)
        width = 0.8 / max(count, 1)
        positions = list(range(len(fig_spec.x)))
        for i, (label, ys) in enumerate(fig_spec.series):
            offset = (i - (count - 1) / 2) * width
            ax.bar([p + offset for p in positions], ys, width=width, label=label)
        ax.set_xticks(positions)
        ax.set_xticklabels([str(v) for v in fig_spec.x])
    else:
        for label, ys in fig_spec.series:
            ax.plot(fig_spec.x, ys, marker="o", label=label)
    if fig_spec.log_y:
        ax.set_yscale("log")
    ax.set_title(fig_spec.title)
    ax.set_xlabel(fig_spec.xlabel)
    ax.set_ylabel(fig_spec.ylabel)
    if len(fig_spec.series) > 1 or (fig_spec.series and fig_spec.series[0][0]):
        ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    # no software tag: emitted files must be byte-identical across runs
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)


def emit(
    report: Report,
    out_dir: str,
    basename: str,
    formats: tuple[str, ...] = ("json", "csv", "png"),
) -> list[str]:
    """Write the report under out_dir; returns the paths written.

    The JSON master carries the full report; each table also lands in its
    own CSV; each figure renders to PNG unless "png" is excluded.
    """
    for fmt in formats:
        if fmt not in KNOWN_FORMATS:
            raise ConfigError(f"unknown output format {fmt!r}; known: {KNOWN_FORMATS}")
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []
    if "json" in formats:
        path = os.path.join(out_dir, f"{basename}.json")
        _write_json(report, path)
        written.append(path)
    if "csv" in formats:
        for table in report.tables:
            path = os.path.join(out_dir, f"{basename}_{table.name}.csv")
            _write_csv(table, path)
            written.append(path)
    if "png" in formats:
        for fig_spec in report.figures:
            path = os.path.join(out_dir, f"{basename}_{fig_spec.name}.png")
            _write_figure(fig_spec, path)
            written.append(path)
    return written


__all__ = ["Table", "FigureSpec", "Report", "emit", "KNOWN_FORMATS"]
