"""Parameter sweeps, figure presets and table output (CSV / JSON / SVG).

Every sweepable quantity is a thin adapter over one library function; no
formula is evaluated here.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from . import __version__
from . import dynamics, entanglement, geometry, phases
from .errors import DomainError, MetricDegenerateWarning, PhaseUndefinedError

PARAM_ORDER = ("n", "J", "theta", "phi", "chi", "E")
DEFAULTS = {"J": 1.0, "phi": 0.0}
E_INSET = 1e-6


@dataclass(frozen=True)
class Quantity:
    params: tuple[str, ...]
    columns: tuple[str, ...]
    func: Callable[..., tuple]


def _curvature(n, theta):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MetricDegenerateWarning)
        return (geometry.curvature_closed(n, theta),)


def _metric(n, theta):
    m = geometry.metric_full(n, theta)
    return m.g_tt, m.g_pp, m.g_cc, m.g_pc


def _geometric(n, theta, chi):
    g = phases.geometric_phase(n, theta, chi)
    return g, phases.wrap_phase(g)


def _brachistochrone(n, J, chi):
    t = chi / J
    t_min = dynamics.brachistochrone_time(n, t)
    return t, t_min, J * t_min


QUANTITIES: dict[str, Quantity] = {
    "metric": Quantity(("n", "theta"), ("g_tt", "g_pp", "g_cc", "g_pc"), _metric),
    "curvature": Quantity(("n", "theta"), ("R",), _curvature),
    "total-phase": Quantity(("n", "theta", "chi"), ("total_phase",), lambda n, theta, chi: (phases.total_phase_closed(n, theta, chi),)),
    "geometric-phase": Quantity(("n", "theta", "chi"), ("geometric_phase", "geometric_phase_wrapped"), _geometric),
    "aa-phase": Quantity(("n", "theta"), ("aa_phase",), lambda n, theta: (phases.aa_phase_closed(n, theta),)),
    "topological-phase": Quantity(("n",), ("topological_phase",), lambda n: (phases.topological_phase(n),)),
    "speed": Quantity(("n", "J", "theta"), ("V",), lambda n, J, theta: (dynamics.speed(n, theta, J),)),
    "distance": Quantity(("n", "theta", "chi"), ("S",), lambda n, theta, chi: (dynamics.fs_distance(n, theta, chi),)),
    "brachistochrone": Quantity(("n", "J", "chi"), ("t", "t_min", "chi_min"), _brachistochrone),
    "entanglement": Quantity(("theta", "chi"), ("E_value",), lambda theta, chi: (entanglement.entanglement(theta, chi),)),
    "ent-curvature": Quantity(("chi", "E"), ("R",), lambda chi, E: (entanglement.curvature_ent(E, chi),)),
    "ent-phase": Quantity(("chi", "E"), ("geometric_phase",), lambda chi, E: (entanglement.geometric_phase_ent(E, chi),)),
    "ent-aa-phase": Quantity(("chi", "E"), ("aa_phase",), lambda chi, E: (entanglement.aa_phase_ent(E, chi),)),
    "ent-speed": Quantity(("J", "chi", "E"), ("V",), lambda J, chi, E: (entanglement.speed_ent(E, chi, J),)),
    "ent-distance": Quantity(("chi", "E"), ("S",), lambda chi, E: (entanglement.distance_ent(E, chi),)),
    "ent-time": Quantity(("J", "chi", "E"), ("tau",), lambda J, chi, E: (entanglement.optimal_time_ent(E, chi, J),)),
}


@dataclass
class SweepConfig:
    """What to compute, over which grid, with which pinned values.

    ``grids`` maps one or two parameter names to their sample values (in
    sweep order, row-major); ``fixed`` holds every other parameter.
    """

    quantity: str
    grids: dict[str, list]
    fixed: dict[str, float] = field(default_factory=dict)
    output: Path | None = None
    fmt: str = "csv"

    def validate(self) -> Quantity:
        if self.quantity not in QUANTITIES:
            raise DomainError(f"unknown quantity {self.quantity!r}")
        q = QUANTITIES[self.quantity]
        if not 1 <= len(self.grids) <= 2:
            raise DomainError(f"sweep needs one or two swept parameters, got {len(self.grids)}")
        for name, values in self.grids.items():
            if name not in q.params:
                raise DomainError(f"{self.quantity} does not depend on {name!r}")
            if len(values) < 2:
                raise DomainError(f"grid for {name!r} needs at least 2 points")
        missing = [p for p in q.params if p not in self.grids and p not in self.fixed and p not in DEFAULTS]
        if missing:
            raise DomainError(f"{self.quantity} needs values for {', '.join(missing)}")
        if self.fmt not in ("csv", "json", "svg"):
            raise DomainError(f"unknown format {self.fmt!r}")
        return q


@dataclass
class Table:
    columns: list[str]
    rows: list[tuple]
    meta: dict

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        return np.array([r[i] for r in self.rows], dtype=float)


def _grid_meta(values):
    v = [float(x) for x in values]
    steps = np.diff(v)
    if len(v) > 2 and np.allclose(steps, steps[0], rtol=1e-12, atol=1e-15):
        return {"start": v[0], "stop": v[-1], "count": len(v)}
    return {"values": v}


def run_sweep(config: SweepConfig) -> Table:
    """Evaluate the quantity on the grid; rows are row-major over ``config.grids``.

    Points where a phase is undefined (orthogonal states) yield NaN; every
    other domain error propagates.
    """
    q = config.validate()
    pinned = {p: config.fixed.get(p, DEFAULTS.get(p)) for p in q.params if p not in config.grids}
    if "n" in pinned:
        pinned["n"] = int(pinned["n"])
    columns = [p for p in PARAM_ORDER if p in q.params] + list(q.columns)
    names = list(config.grids)
    rows = []
    for combo in itertools.product(*(config.grids[k] for k in names)):
        point = dict(pinned)
        point.update(zip(names, combo))
        if "n" in point:
            point["n"] = int(point["n"])
        try:
            values = q.func(**{p: point[p] for p in q.params})
        except PhaseUndefinedError:
            values = (math.nan,) * len(q.columns)
        rows.append(tuple(point[p] for p in PARAM_ORDER if p in q.params) + tuple(float(v) for v in values))
    meta = {
        "quantity": config.quantity,
        "pinned": pinned,
        "grids": {k: _grid_meta(v) for k, v in config.grids.items()},
        "swept": names,
        "version": __version__,
    }
    return Table(columns, rows, meta)


def concat(tables: list[Table], meta: dict) -> Table:
    cols = tables[0].columns
    if any(t.columns != cols for t in tables):
        raise DomainError("cannot concatenate tables with different columns")
    return Table(list(cols), [r for t in tables for r in t.rows], meta)


# --- output -----------------------------------------------------------------


def _fmt(v) -> str:
    return "%.17g" % v


def to_csv(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.columns)
    for r in table.rows:
        w.writerow([_fmt(v) for v in r])
    return buf.getvalue()


def from_csv(text: str) -> Table:
    reader = csv.reader(io.StringIO(text))
    columns = next(reader)
    rows = [tuple(float(v) for v in r) for r in reader]
    return Table(columns, rows, {})


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(table: Table) -> str:
    doc = {
        "columns": table.columns,
        "rows": [[_json_value(v) for v in r] for r in table.rows],
        "meta": table.meta,
    }
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


def to_svg(table: Table, width: int = 640, height: int = 400) -> str:
    """Polyline plot of the first value column; one series per group value."""
    swept = table.meta.get("swept") or [table.columns[0]]
    xname = swept[-1]
    group = swept[0] if len(swept) > 1 else None
    yname = QUANTITIES[table.meta["quantity"]].columns[0]
    x, y = table.column(xname), table.column(yname)
    keys = table.column(group) if group else np.zeros(len(x))
    finite = np.isfinite(y)
    x0, x1 = float(np.min(x)), float(np.max(x))
    y0, y1 = (float(np.min(y[finite])), float(np.max(y[finite]))) if finite.any() else (0.0, 1.0)
    if y1 == y0:
        y0, y1 = y0 - 1, y1 + 1
    if x1 == x0:
        x0, x1 = x0 - 1, x1 + 1
    ml, mr, mt, mb = 70, 20, 20, 50
    pw, ph = width - ml - mr, height - mt - mb

    def px(v):
        return ml + (v - x0) / (x1 - x0) * pw

    def py(v):
        return mt + (y1 - v) / (y1 - y0) * ph

    palette = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
        f'<text x="{ml + pw / 2:.1f}" y="{height - 10}" text-anchor="middle" font-size="14">{xname}</text>',
        f'<text x="15" y="{mt + ph / 2:.1f}" text-anchor="middle" font-size="14" transform="rotate(-90 15 {mt + ph / 2:.1f})">{yname}</text>',
        f'<text x="{ml}" y="{height - 30}" font-size="11">{x0:.4g}</text>',
        f'<text x="{ml + pw}" y="{height - 30}" text-anchor="end" font-size="11">{x1:.4g}</text>',
        f'<text x="{ml - 5}" y="{mt + 10}" text-anchor="end" font-size="11">{y1:.4g}</text>',
        f'<text x="{ml - 5}" y="{mt + ph}" text-anchor="end" font-size="11">{y0:.4g}</text>',
    ]
    for i, key in enumerate(dict.fromkeys(keys.tolist())):
        sel = keys == key
        color = palette[i % len(palette)]
        # NaN points split the series into separate polylines
        segment = []
        for xv, yv in zip(x[sel], y[sel]):
            if np.isfinite(yv):
                segment.append(f"{px(xv):.3f},{py(yv):.3f}")
                continue
            if len(segment) > 1:
                out.append(f'<polyline fill="none" stroke="{color}" points="{" ".join(segment)}"/>')
            segment = []
        if len(segment) > 1:
            out.append(f'<polyline fill="none" stroke="{color}" points="{" ".join(segment)}"/>')
        if group:
            out.append(f'<text x="{ml + pw - 5}" y="{mt + 15 + 14 * i}" text-anchor="end" font-size="11" fill="{color}">{group}={key:.4g}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


_WRITERS = {"csv": to_csv, "json": to_json, "svg": to_svg}


def emit(table: Table, fmt: str, path) -> Path:
    """Write ``table`` to ``path`` as csv, json or svg."""
    if not table.rows:
        raise DomainError("refusing to emit an empty table")
    if fmt not in _WRITERS:
        raise DomainError(f"unknown format {fmt!r}")
    path = Path(path)
    with open(path, "w", newline="") as fh:
        fh.write(_WRITERS[fmt](table))
    return path


# --- figure presets -----------------------------------------------------------

THETA_AXIS = np.linspace(0.0, np.pi, 181)
FIG_N = [2, 3, 4, 5, 6]
FIG_CHIS = [0.6, 1.0, 1.4, np.pi / 2]
FIG4B_CHI = np.pi


def _theta_family(quantity, fixed=None, ns=FIG_N):
    return SweepConfig(quantity, {"n": list(ns), "theta": list(THETA_AXIS)}, dict(fixed or {}))


def _ent_family(fig, quantity, fixed=None):
    parts = []
    for chi in FIG_CHIS:
        es = np.linspace(0.0, entanglement.entanglement_reach(chi) - E_INSET, 201)
        parts.append(run_sweep(SweepConfig(quantity, {"E": list(es)}, {"chi": chi, **(fixed or {})})))
    meta = dict(parts[0].meta)
    meta.update(
        figure=fig,
        swept=["chi", "E"],
        grids={"chi": {"values": FIG_CHIS}, "E": {"start": 0.0, "stop": "reach(chi) - 1e-06", "count": 201}},
        pinned={**{k: v for k, v in meta["pinned"].items() if k != "chi"}, "theta": np.pi / 2},
    )
    return concat(parts, meta)


def _single(fig, config):
    t = run_sweep(config)
    t.meta["figure"] = fig
    return t


FIGURES: dict[str, Callable[[], Table]] = {
    "fig2b": lambda: _single("fig2b", _theta_family("curvature")),
    "fig3": lambda: _single("fig3", _theta_family("aa-phase", ns=[2, 3, 4, 5])),
    "fig4a": lambda: _single("fig4a", _theta_family("speed", {"J": 1.0})),
    "fig4b": lambda: _single("fig4b", _theta_family("distance", {"chi": FIG4B_CHI})),
    "fig5": lambda: _single(
        "fig5",
        SweepConfig("entanglement", {"theta": [np.pi / 6, np.pi / 4, np.pi / 3, np.pi / 2], "chi": list(np.linspace(0, 2 * np.pi, 401))}),
    ),
    "fig6a": lambda: _ent_family("fig6a", "ent-curvature"),
    "fig6b": lambda: _ent_family("fig6b", "ent-phase"),
    "fig6c": lambda: _ent_family("fig6c", "ent-aa-phase"),
    "fig7a": lambda: _ent_family("fig7a", "ent-speed", {"J": 1.0}),
    "fig7b": lambda: _ent_family("fig7b", "ent-distance"),
    "fig7c": lambda: _ent_family("fig7c", "ent-time", {"J": 1.0}),
}


def figure_table(fig: str) -> Table:
    if fig not in FIGURES:
        raise DomainError(f"unknown figure {fig!r}; choose from {', '.join(FIGURES)}")
    return FIGURES[fig]()


def reproduce_figure(fig: str, out_dir, formats=("csv", "json", "svg")) -> list[Path]:
    """Write the dataset of one figure preset to ``out_dir/<fig>.<fmt>``."""
    table = figure_table(fig)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    return [emit(table, fmt, out_dir / f"{fig}.{fmt}") for fmt in formats]
