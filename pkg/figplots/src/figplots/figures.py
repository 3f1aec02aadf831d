"""Figure renderers for gatemp scan CSVs.

Every plotted number is taken verbatim from the CSV: region shading and
boundary polylines are built by selecting rows on the CSV's own flag and
sign columns, never by recomputing any quantity.  Probe mode dumps the
exact arrays handed to matplotlib so this pass-through property can be
checked mechanically.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class FigplotsError(Exception):
    pass


class MissingColumns(FigplotsError):
    pass


class EmptyData(FigplotsError):
    pass


FIGURES = ("fig2", "fig3a", "fig3b", "fig4", "vr-map")

REQUIRED_COLUMNS = {
    "fig2": ("u", "v", "total_f", "nu_minus", "physical"),
    "fig3a": ("total_f", "log_negativity", "physical"),
    "fig3b": ("total_f", "log_negativity", "physical"),
    "fig4": ("eta", "v1", "v2", "reverse_f"),
    "vr-map": ("v", "r", "total_f", "nu_minus", "physical"),
}


@dataclass
class FigureSpec:
    csv_path: str
    figure: str
    out_path: str
    probe: bool = False
    envelope_csv: str | None = None  # optional overlay curve for fig3a/fig3b
    style: dict = field(default_factory=dict)


def load_columns(path: str, required: tuple[str, ...]) -> dict[str, list]:
    """Parse a scan CSV into per-column lists.

    Floats stay floats, 'true'/'false' become bools, empty cells None.
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyData(f"{path} has no header")
        rows = list(reader)
    missing = [c for c in required if c not in header]
    if missing:
        raise MissingColumns(f"{path} lacks columns {missing}")
    if not rows:
        raise EmptyData(f"{path} has no data rows")

    def cell(text: str):
        if text == "":
            return None
        if text == "true":
            return True
        if text == "false":
            return False
        return float(text)

    cols: dict[str, list] = {name: [] for name in header}
    for row in rows:
        for name, text in zip(header, row):
            cols[name].append(cell(text))
    return cols


class Probe:
    """Collects the arrays actually handed to matplotlib."""

    def __init__(self) -> None:
        self.artists: list[dict] = []

    def add(self, label: str, x, y) -> None:
        self.artists.append({"label": label, "x": list(map(float, x)), "y": list(map(float, y))})

    def dump(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"artists": self.artists}, fh)


def _select(cols: dict, keys: tuple[str, str], mask) -> tuple[list, list]:
    xs = [cols[keys[0]][i] for i in range(len(mask)) if mask[i]]
    ys = [cols[keys[1]][i] for i in range(len(mask)) if mask[i]]
    return xs, ys


def _scatter_regions(ax, probe, cols, keys, regions) -> None:
    n = len(cols[keys[0]])
    for label, predicate, color in regions:
        mask = [predicate(i) for i in range(n)]
        xs, ys = _select(cols, keys, mask)
        ax.scatter(xs, ys, s=4, marker="s", color=color, label=label, linewidths=0)
        probe.add(label, xs, ys)


def render_fig2(cols: dict, ax, probe: Probe) -> None:
    """Beam-splitter (u, v) plane: unphysical / atemporal / entangled-only."""
    physical = cols["physical"]
    total_f = cols["total_f"]
    nu = cols["nu_minus"]

    def entangled(i):
        return physical[i] and nu[i] is not None and nu[i] < 1.0

    regions = [
        ("unphysical", lambda i: not physical[i], "#d62728"),
        ("entangled, atemporal", lambda i: entangled(i) and total_f[i] > 0.0, "#1f77b4"),
        ("entangled, temporal", lambda i: entangled(i) and total_f[i] == 0.0, "#2ca02c"),
        ("separable", lambda i: physical[i] and not entangled(i), "#f2f2f2"),
    ]
    _scatter_regions(ax, probe, cols, ("u", "v"), regions)
    ax.set_xlabel("u")
    ax.set_ylabel("v")
    ax.legend(loc="upper right", fontsize=7, markerscale=2)


def _render_scatter_vs_negativity(cols, ax, probe, envelope) -> None:
    physical = cols["physical"]
    logneg = cols["log_negativity"]
    total_f = cols["total_f"]
    mask = [physical[i] and logneg[i] is not None for i in range(len(physical))]
    xs = [logneg[i] for i in range(len(mask)) if mask[i]]
    ys = [total_f[i] for i in range(len(mask)) if mask[i]]
    ax.scatter(xs, ys, s=3, color="#444444", alpha=0.5, linewidths=0, label="random states")
    probe.add("random states", xs, ys)
    if envelope is not None:
        emask = [
            envelope["physical"][i] and envelope["log_negativity"][i] is not None
            for i in range(len(envelope["physical"]))
        ]
        ex = [envelope["log_negativity"][i] for i in range(len(emask)) if emask[i]]
        ey = [envelope["total_f"][i] for i in range(len(emask)) if emask[i]]
        ax.plot(ex, ey, color="#2ca02c", lw=1.5, label="squeezed-thermal envelope")
        probe.add("squeezed-thermal envelope", ex, ey)
    ax.set_xlabel("logarithmic negativity")
    ax.set_ylabel("atemporality robustness")
    ax.legend(loc="upper left", fontsize=7)


def render_fig3a(cols: dict, ax, probe: Probe, envelope=None) -> None:
    _render_scatter_vs_negativity(cols, ax, probe, envelope)
    ax.set_title("random pure states")


def render_fig3b(cols: dict, ax, probe: Probe, envelope=None) -> None:
    _render_scatter_vs_negativity(cols, ax, probe, envelope)
    ax.set_title("random mixed states")


_ETA_COLORS = ["#d62728", "#bcbd22", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"]


def render_fig4(cols: dict, ax, probe: Probe) -> None:
    """Loss-channel (v1, v2) plane: physicality and reverse-robustness edges.

    For each v1 in the scan grid, the plotted boundary point is the extreme
    grid v2 whose row carries the flag/sign in question; coordinates are
    CSV values, only the selection is done here.
    """
    v1s = cols["v1"]
    v2s = cols["v2"]
    etas = cols["eta"]
    rev = cols["reverse_f"]
    n = len(v1s)
    grid_v1 = sorted({v1s[i] for i in range(n)})

    # input physicality boundary: the scan only emits rows with physical
    # inputs, so the lower envelope of present rows marks the edge
    px, py = [], []
    for v1 in grid_v1:
        candidates = [v2s[i] for i in range(n) if v1s[i] == v1]
        if candidates:
            px.append(v1)
            py.append(min(candidates))
    ax.plot(px, py, color="#1f77b4", lw=1.5, label="input physicality boundary")
    probe.add("input physicality boundary", px, py)

    for k, eta in enumerate(sorted({e for e in etas})):
        bx, by = [], []
        for v1 in grid_v1:
            candidates = [
                v2s[i] for i in range(n) if v1s[i] == v1 and etas[i] == eta and rev[i] > 0.0
            ]
            if candidates:
                bx.append(v1)
                by.append(max(candidates))
        if not bx:
            continue  # no reverse-atemporal rows for this eta on the scanned grid
        label = "reverse-atemporal edge, eta=%g" % eta
        ax.plot(bx, by, color=_ETA_COLORS[k % len(_ETA_COLORS)], lw=1.2, label=label)
        probe.add(label, bx, by)
    ax.set_xlabel("$v_1$")
    ax.set_ylabel("$v_2$")
    ax.legend(loc="upper right", fontsize=7)


def render_vr_map(cols: dict, ax, probe: Probe) -> None:
    """Squeezed-thermal (v, r) map colored by entanglement/atemporality."""
    physical = cols["physical"]
    total_f = cols["total_f"]
    nu = cols["nu_minus"]

    def entangled(i):
        return physical[i] and nu[i] is not None and nu[i] < 1.0

    regions = [
        ("separable, temporal", lambda i: physical[i] and not entangled(i), "#f5d76e"),
        ("entangled, temporal", lambda i: entangled(i) and total_f[i] == 0.0, "#f7c6d9"),
        ("entangled, atemporal", lambda i: entangled(i) and total_f[i] > 0.0, "#7d3c98"),
    ]
    _scatter_regions(ax, probe, cols, ("v", "r"), regions)
    ax.set_xlabel("v")
    ax.set_ylabel("r")
    ax.legend(loc="upper right", fontsize=7, markerscale=2)


def render(spec: FigureSpec) -> Probe:
    """Render one figure and return the probe of plotted arrays."""
    if spec.figure not in FIGURES:
        raise FigplotsError(f"unknown figure {spec.figure!r}")
    cols = load_columns(spec.csv_path, REQUIRED_COLUMNS[spec.figure])
    probe = Probe()
    fig, ax = plt.subplots(figsize=(5, 4), dpi=120)
    try:
        if spec.figure == "fig2":
            render_fig2(cols, ax, probe)
        elif spec.figure in ("fig3a", "fig3b"):
            envelope = None
            if spec.envelope_csv:
                envelope = load_columns(
                    spec.envelope_csv, ("total_f", "log_negativity", "physical")
                )
            if spec.figure == "fig3a":
                render_fig3a(cols, ax, probe, envelope)
            else:
                render_fig3b(cols, ax, probe, envelope)
        elif spec.figure == "fig4":
            render_fig4(cols, ax, probe)
        else:
            render_vr_map(cols, ax, probe)
        fig.tight_layout()
        fig.savefig(spec.out_path, metadata={"Software": "figplots"})
    finally:
        plt.close(fig)
    if spec.probe:
        probe.dump(spec.out_path + ".probe.json")
    return probe
