import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qgeom import __version__
from qgeom import dynamics as dyn
from qgeom import sweep
from qgeom.errors import DomainError
from qgeom.sweep import SweepConfig, run_sweep


def small_table():
    return run_sweep(SweepConfig("speed", {"theta": [0.0, 1.0, 2.0]}, {"n": 3}))


class TestRunSweep:
    def test_curvature_endpoints(self):
        t = run_sweep(SweepConfig("curvature", {"theta": list(np.linspace(0, np.pi, 100))}, {"n": 2}))
        assert len(t.rows) == 100
        r = t.column("R")
        assert r[0] == pytest.approx(10.0, abs=1e-9)
        assert r[-1] == pytest.approx(10.0, abs=1e-9)

    def test_aa_phase_minima_at_equator(self):
        thetas = list(np.linspace(0, np.pi, 181))
        t = run_sweep(SweepConfig("aa-phase", {"n": [2, 3, 4, 5], "theta": thetas}))
        n, theta, aa = t.column("n"), t.column("theta"), t.column("aa_phase")
        for k in (2, 3, 4, 5):
            sel = n == k
            assert theta[sel][np.argmin(aa[sel])] == pytest.approx(np.pi / 2, abs=1e-12)

    def test_ent_speed_peak(self):
        t = run_sweep(SweepConfig("ent-speed", {"E": list(np.linspace(0, 0.5, 101))}, {"chi": np.pi / 2}))
        v = t.column("V")
        assert np.argmax(v) == 100
        assert v[-1] == pytest.approx(0.5, abs=1e-12)

    def test_row_major_order(self):
        t = run_sweep(SweepConfig("distance", {"n": [2, 3], "chi": [0.5, 1.0, 1.5]}, {"theta": 1.0}))
        assert [(r[0], r[2]) for r in t.rows] == [(2, 0.5), (2, 1.0), (2, 1.5), (3, 0.5), (3, 1.0), (3, 1.5)]

    def test_rows_carry_pinned_values(self):
        t = run_sweep(SweepConfig("speed", {"theta": [0.5, 1.0]}, {"n": 4, "J": 2.0}))
        assert t.columns == ["n", "J", "theta", "V"]
        assert all(r[0] == 4 and r[1] == 2.0 for r in t.rows)
        assert t.meta["pinned"] == {"n": 4, "J": 2.0}

    def test_default_coupling(self):
        t = run_sweep(SweepConfig("speed", {"theta": [0.5, 1.0]}, {"n": 4}))
        assert t.meta["pinned"]["J"] == 1.0

    def test_values_match_library(self):
        t = run_sweep(SweepConfig("brachistochrone", {"n": [2, 3, 5]}, {"J": 2.0, "chi": 1.0}))
        np.testing.assert_allclose(t.column("t_min"), [dyn.brachistochrone_time(n, 0.5) for n in (2, 3, 5)])

    def test_undefined_phase_is_nan(self):
        t = run_sweep(SweepConfig("total-phase", {"chi": [0.0, np.pi]}, {"n": 2, "theta": np.pi / 2}))
        assert np.isnan(t.column("total_phase")[1])

    @pytest.mark.parametrize(
        "config",
        [
            SweepConfig("nope", {"theta": [0, 1]}),
            SweepConfig("speed", {}, {"n": 2, "theta": 1.0}),
            SweepConfig("speed", {"n": [2, 3], "theta": [0, 1], "J": [1, 2]}),
            SweepConfig("speed", {"theta": [1.0]}, {"n": 2}),
            SweepConfig("speed", {"chi": [0, 1]}, {"n": 2, "theta": 1.0}),
            SweepConfig("curvature", {"theta": [0, 1]}),
            SweepConfig("curvature", {"theta": [0, 4]}, {"n": 2}),
            SweepConfig("ent-speed", {"E": [0.0, 0.4]}, {"chi": 0.3}),
            SweepConfig("speed", {"theta": [0, 1]}, {"n": 2}, fmt="xml"),
        ],
    )
    def test_invalid_configs(self, config):
        with pytest.raises(DomainError):
            run_sweep(config)

    def test_every_quantity_runs(self):
        points = {"n": [2, 3], "J": 1.0, "theta": 1.0, "phi": 0.0, "chi": 1.0, "E": 0.05}
        for name, q in sweep.QUANTITIES.items():
            first = q.params[0]
            grids = {first: points[first] if first == "n" else [0.01, 0.02] if first == "E" else [0.5, 1.0]}
            fixed = {p: (points[p] if p != "n" else 2) for p in q.params if p != first}
            t = run_sweep(SweepConfig(name, grids, fixed))
            assert len(t.rows) == 2 and t.columns[-len(q.columns):] == list(q.columns)


class TestEmit:
    def test_csv_lines(self):
        text = sweep.to_csv(small_table())
        assert text.count("\n") == 4
        assert text.splitlines()[0] == "n,J,theta,V"
        assert "\r" not in text

    def test_csv_round_trip(self):
        t = run_sweep(SweepConfig("geometric-phase", {"chi": list(np.linspace(0, 7, 23))}, {"n": 3, "theta": 0.4}))
        text = sweep.to_csv(t)
        assert sweep.to_csv(sweep.from_csv(text)) == text

    def test_csv_keeps_full_precision(self):
        t = small_table()
        back = sweep.from_csv(sweep.to_csv(t))
        assert back.rows == [tuple(float(v) for v in r) for r in t.rows]

    def test_json_meta(self):
        doc = json.loads(sweep.to_json(small_table()))
        assert doc["columns"] == ["n", "J", "theta", "V"]
        assert doc["meta"]["pinned"] == {"n": 3, "J": 1.0}
        assert doc["meta"]["quantity"] == "speed"
        assert doc["meta"]["version"] == __version__
        assert doc["meta"]["grids"]["theta"] == {"start": 0.0, "stop": 2.0, "count": 3}

    def test_json_nan_is_null(self):
        t = run_sweep(SweepConfig("total-phase", {"chi": [0.0, np.pi]}, {"n": 2, "theta": np.pi / 2}))
        assert json.loads(sweep.to_json(t))["rows"][1][-1] is None

    def test_svg_well_formed(self):
        t = run_sweep(SweepConfig("speed", {"n": [2, 3], "theta": list(np.linspace(0, np.pi, 30))}))
        root = ET.fromstring(sweep.to_svg(t))
        assert root.tag.endswith("svg")
        lines = root.findall("{http://www.w3.org/2000/svg}polyline")
        assert len(lines) == 2
        labels = [e.text for e in root.iter("{http://www.w3.org/2000/svg}text")]
        assert "theta" in labels and "V" in labels

    def test_write_files(self, tmp_path):
        t = small_table()
        for fmt in ("csv", "json", "svg"):
            path = sweep.emit(t, fmt, tmp_path / f"out.{fmt}")
            assert path.read_text() == {"csv": sweep.to_csv, "json": sweep.to_json, "svg": sweep.to_svg}[fmt](t)

    def test_empty_table(self, tmp_path):
        with pytest.raises(DomainError):
            sweep.emit(sweep.Table(["a"], [], {}), "csv", tmp_path / "x.csv")

    def test_unwritable(self, tmp_path):
        with pytest.raises(OSError):
            sweep.emit(small_table(), "csv", tmp_path / "missing" / "x.csv")

    def test_deterministic(self):
        cfg = SweepConfig("ent-phase", {"E": list(np.linspace(0, 0.2, 50))}, {"chi": 1.4})
        assert sweep.to_json(run_sweep(cfg)) == sweep.to_json(run_sweep(cfg))


class TestFigures:
    def test_all_presets_write(self, tmp_path):
        for fig in sweep.FIGURES:
            paths = sweep.reproduce_figure(fig, tmp_path)
            assert [p.name for p in paths] == [f"{fig}.csv", f"{fig}.json", f"{fig}.svg"]
            ET.fromstring(paths[2].read_text())

    def test_unknown(self):
        with pytest.raises(DomainError):
            sweep.figure_table("fig9")

    def test_fig4a_zero_at_poles(self):
        t = sweep.figure_table("fig4a")
        theta, v = t.column("theta"), t.column("V")
        assert np.all(v[(theta == 0) | (theta == np.pi)] < 1e-7)

    def test_fig4a_maxima_between_quarter_and_third(self):
        t = sweep.figure_table("fig4a")
        n, theta, v = t.column("n"), t.column("theta"), t.column("V")
        for k in range(3, 7):
            sel = (n == k) & (theta <= np.pi / 2)
            peak = theta[sel][np.argmax(v[sel])]
            assert np.pi / 4 - 0.02 < peak < np.pi / 3

    def test_fig6a_starts_at_ten_and_decreases(self):
        t = sweep.figure_table("fig6a")
        chi, r = t.column("chi"), t.column("R")
        for c in sweep.FIG_CHIS:
            curve = r[chi == c]
            assert curve[0] == pytest.approx(10.0, abs=1e-12)
            assert np.all(np.diff(curve) < 0)

    def test_ent_presets_stay_reachable(self):
        for fig in ("fig6b", "fig6c", "fig7a", "fig7b", "fig7c"):
            t = sweep.figure_table(fig)
            assert t.meta["pinned"]["theta"] == pytest.approx(np.pi / 2)
            assert np.all(np.isfinite(t.column(t.columns[-1])))

    def test_fig7_coupling_pinned(self):
        assert sweep.figure_table("fig7a").meta["pinned"]["J"] == 1.0


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=2, max_size=20))
def test_csv_round_trip_property(values):
    t = sweep.Table(["x", "y"], [(float(i), v) for i, v in enumerate(values)], {})
    text = sweep.to_csv(t)
    assert sweep.to_csv(sweep.from_csv(text)) == text
    assert [r[1] for r in sweep.from_csv(text).rows] == values
