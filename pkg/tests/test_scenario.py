"""Scenario schema, presets, pipeline outputs, deterministic exports.

Serialization is checked as an exact identity over seeded random configs:
JSON floats round-trip exactly, so parse(serialize(cfg)) == cfg with no
tolerance. Unit conversions are frozen by hand arithmetic. Export checks
freeze the CSV header bytes and require byte-identical files across fresh
pipeline runs.
"""

import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from blochpulse import (
    Oscillatory,
    RabiDecay,
    Rates,
    ScenarioConfig,
    Transfer,
    TransitionSpec,
    ValidationError,
    Window,
    export_all,
    export_csv,
    export_field_csv,
    export_svg,
    load_scenario,
    preset,
    preset_names,
    preset_note,
    run_scenario,
    save_scenario,
    scenario_from_dict,
    scenario_to_dict,
)

_EXPECTED_PRESETS = ["fig1_L1", "fig1_L2", "fig1_L3", "fig1_L4", "fig1_L5",
                     "fig2", "fig3", "fig4"]


def _base_dict():
    return {
        "name": "unit_case",
        "trajectory": {"family": "transfer", "inversion_start": -0.5,
                       "inversion_stop": 0.5, "switch_rate": 0.01,
                       "coherence_peak": 0.4, "peak_width": 100.0},
        "transition": {"kind": "constant", "value": 5e-3},
        "window": {"start": -60.0, "stop": 60.0, "samples": 201},
    }


def _random_config(rng, i):
    family = i % 3
    if family == 0:
        traj = Transfer(
            inversion_start=rng.uniform(-1, 1), inversion_stop=rng.uniform(-1, 1),
            switch_rate=rng.uniform(1e-3, 0.05), coherence_peak=rng.uniform(-1, 1),
            peak_width=rng.uniform(10, 200), peak_time=rng.uniform(-50, 50))
    elif family == 1:
        traj = Oscillatory(
            inversion_start=rng.uniform(-1, 1), inversion_stop=rng.uniform(-1, 1),
            switch_rate=rng.uniform(1e-3, 0.05), coherence_peak=rng.uniform(-1, 1),
            peak_width=rng.uniform(10, 200), ripple_amplitude=rng.uniform(-0.2, 0.2),
            ripple_frequency=rng.uniform(0, 0.2))
    else:
        traj = RabiDecay(
            inversion_amplitude=rng.uniform(-1, 1), decay_curvature=rng.uniform(0, 1e-6),
            inversion_frequency=rng.uniform(0, 0.02), chirp_rate=rng.uniform(-1e-5, 1e-5),
            coherence_amplitude=rng.uniform(-1, 1), coherence_frequency=rng.uniform(0, 0.02))
    closed = rng.random() < 0.5
    rates = Rates() if closed else Rates(dephasing=rng.uniform(0, 0.01),
                                         thermal=rng.uniform(0, 0.01),
                                         occupancy=rng.uniform(0, 3))
    if rng.random() < 0.5:
        transition = TransitionSpec.constant(rng.uniform(1e-3, 0.02))
    else:
        transition = TransitionSpec.ramp(rng.uniform(1e-3, 0.02), rng.uniform(1e-3, 0.02))
    start = rng.uniform(-200, 0)
    window = Window(start, start + rng.uniform(10, 400), int(rng.integers(2, 2000)))
    choices = ["effective-bloch", "interaction"] + (["lab"] if closed else [])
    n_pics = int(rng.integers(0, len(choices) + 1))
    pictures = tuple(rng.choice(choices, size=n_pics, replace=False))
    return ScenarioConfig(name=f"cfg_{i}", trajectory=traj, rates=rates,
                          transition=transition, window=window,
                          rtol=10.0 ** rng.uniform(-12, -6),
                          atol=10.0 ** rng.uniform(-14, -8),
                          pictures=pictures)


def test_serialization_round_trip_identity():
    rng = np.random.default_rng(51)
    for i in range(100):
        cfg = _random_config(rng, i)
        through_json = json.loads(json.dumps(scenario_to_dict(cfg)))
        assert scenario_from_dict(through_json) == cfg


def test_file_round_trip(tmp_path):
    cfg = preset("fig3")
    path = tmp_path / "fig3.json"
    save_scenario(cfg, path)
    assert load_scenario(path) == cfg


def test_load_rejects_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_scenario(path)


def test_unit_conversion_frozen():
    d = _base_dict()
    d["transition"] = {"kind": "constant", "value": {"value": 2.0, "unit": "GHz"}}
    d["window"] = {"start": {"value": -0.12, "unit": "ns"},
                   "stop": {"value": 0.12, "unit": "ns"}, "samples": 201}
    d["rates"] = {"dephasing": {"value": 1e9, "unit": "s^-1"},
                  "thermal": {"value": 10.0, "unit": "1/ns"}}
    d["trajectory"]["switch_rate"] = {"value": 10.0, "unit": "1/ns"}
    cfg = scenario_from_dict(d)
    assert cfg.transition.start == pytest.approx(2e-3, rel=1e-15)
    assert cfg.window.start == pytest.approx(-120.0, rel=1e-15)
    assert cfg.window.stop == pytest.approx(120.0, rel=1e-15)
    assert cfg.rates.dephasing == pytest.approx(1e-3, rel=1e-15)
    assert cfg.rates.thermal == pytest.approx(0.01, rel=1e-15)
    assert cfg.trajectory.switch_rate == pytest.approx(0.01, rel=1e-15)


def test_curvature_unit_frozen():
    d = _base_dict()
    d["trajectory"] = {"family": "rabi_decay", "inversion_amplitude": 0.9,
                       "decay_curvature": {"value": 5e16, "unit": "s^-2"},
                       "inversion_frequency": 3e-3, "chirp_rate": 0.0,
                       "coherence_amplitude": 0.3, "coherence_frequency": 3e-3}
    cfg = scenario_from_dict(d)
    assert cfg.trajectory.decay_curvature == pytest.approx(5e-8, rel=1e-15)


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(surprise=1),
    lambda d: d["trajectory"].update(family="spiral"),
    lambda d: d["trajectory"].update(wiggle=2.0),
    lambda d: d["trajectory"].pop("switch_rate"),
    lambda d: d.update(rates={"leak": 1e-3}),
    lambda d: d["window"].update(samples=1),
    lambda d: d["window"].update(samples=200.5),
    lambda d: d["window"].update(stop=-999.0),
    lambda d: d.update(transition={"kind": "wobble", "value": 1e-3}),
    lambda d: d.update(transition={"kind": "constant"}),
    lambda d: d.update(pictures=["heisenberg"]),
    lambda d: d.update(tolerances={"rtol": 0.0}),
    lambda d: d["trajectory"].update(
        coherence_peak={"value": 0.4, "unit": "GHz"}),
    lambda d: d["trajectory"].update(
        switch_rate={"value": 0.01, "unit": "parsec"}),
])
def test_bad_scenario_dicts_rejected(mutate):
    d = _base_dict()
    mutate(d)
    with pytest.raises(ValidationError):
        scenario_from_dict(d)


def test_lab_picture_requires_closed_rates():
    d = _base_dict()
    d["rates"] = {"dephasing": 1e-3}
    d["pictures"] = ["effective-bloch", "lab"]
    with pytest.raises(ValidationError):
        scenario_from_dict(d)


def test_preset_catalogue():
    assert preset_names() == _EXPECTED_PRESETS
    for name in preset_names():
        cfg = preset(name)
        assert cfg.name == name
        assert scenario_from_dict(scenario_to_dict(cfg)) == cfg
        assert preset_note(name)
    with pytest.raises(ValidationError):
        preset("nope")


def test_transition_values_endpoints():
    grid = np.linspace(-120.0, 120.0, 7)
    ramp = TransitionSpec.ramp(1e-3, 15e-3)
    vals = ramp.values(grid)
    assert vals[0] == 1e-3
    assert vals[-1] == 15e-3
    assert vals[3] == pytest.approx(8e-3, rel=1e-12)
    const = TransitionSpec.constant(5e-3).values(grid)
    assert np.all(const == 5e-3)
    with pytest.raises(ValidationError):
        TransitionSpec("constant", 1e-3, 2e-3)


def test_window_validation():
    with pytest.raises(ValidationError):
        Window(0.0, 0.0, 100)
    with pytest.raises(ValidationError):
        Window(0.0, 10.0, 1)
    assert Window(0.0, 10.0, 2).grid().tolist() == [0.0, 10.0]


_MINI = ScenarioConfig(
    name="mini",
    trajectory=Transfer(inversion_start=-0.5, inversion_stop=0.5, switch_rate=0.01,
                        coherence_peak=0.4, peak_width=100.0),
    rates=Rates(),
    transition=TransitionSpec.constant(5e-3),
    window=Window(-60.0, 60.0, 201),
    pictures=("effective-bloch",),
)


@pytest.fixture(scope="module")
def mini_run():
    return run_scenario(_MINI)


def test_run_scenario_populates_everything(mini_run):
    assert set(mini_run.results) == {"effective-bloch"}
    assert set(mini_run.reports) == {"effective-bloch"}
    assert mini_run.grid.shape == (201,)
    u, v, w = mini_run.prescribed
    assert u.shape == v.shape == w.shape == (201,)
    assert mini_run.reports["effective-bloch"].sup < 1e-6


def test_csv_export_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    export_csv(run_scenario(_MINI), a)
    export_csv(run_scenario(_MINI), b)
    data = a.read_bytes()
    assert data == b.read_bytes()
    lines = data.decode("ascii").split("\n")
    assert lines[0] == "t_ps,u,v,w,sx,sy,sz,omega_R,phi,omega0,delta"
    assert len(lines) == 203  # header + 201 rows + trailing newline
    assert lines[-1] == ""


def test_csv_export_header_only_without_pictures(tmp_path):
    import dataclasses

    bare = dataclasses.replace(_MINI, pictures=())
    path = tmp_path / "bare.csv"
    export_csv(run_scenario(bare), path)
    assert path.read_text(encoding="ascii") == \
        "t_ps,u,v,w,sx,sy,sz,omega_R,phi,omega0,delta\n"


def test_field_csv_export(mini_run, tmp_path):
    path = tmp_path / "field.csv"
    export_field_csv(mini_run.field, path)
    lines = path.read_text(encoding="ascii").split("\n")
    assert lines[0] == "t_ps,omega,delta,phi,omega_R,omega0"
    assert len(lines) == 203


def _tags(root):
    return [el.tag.rsplit("}", 1)[-1] for el in root.iter()]


@pytest.mark.parametrize("kind", ["pulse", "populations", "bloch3d"])
def test_svg_exports_parse(mini_run, tmp_path, kind):
    path = tmp_path / f"{kind}.svg"
    export_svg(mini_run, kind, path)
    root = ET.parse(path).getroot()
    assert root.tag.rsplit("}", 1)[-1] == "svg"
    assert "polyline" in _tags(root)


def test_svg_unknown_kind_rejected(mini_run, tmp_path):
    with pytest.raises(ValidationError):
        export_svg(mini_run, "scatter", tmp_path / "x.svg")


def test_export_all(mini_run, tmp_path):
    paths = export_all(mini_run, tmp_path / "out")
    assert [p.name for p in paths] == ["mini.csv"]
    paths = export_all(mini_run, tmp_path / "out", svg=True)
    assert [p.name for p in paths] == [
        "mini.csv", "mini.pulse.svg", "mini.populations.svg", "mini.bloch3d.svg"]
    for p in paths:
        assert p.exists()
