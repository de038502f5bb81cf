import json

import pytest

from mmwprop import cli
from mmwprop.sweeps import PRESETS


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fspl(capsys):
    assert run(capsys, "fspl", "--freq-ghz", "28", "--dist-km", "1") == (0, "121.39 dB\n", "")


def test_rain_zero(capsys):
    code, out, _ = run(capsys, "rain", "--freq-ghz", "28", "--rate", "0")
    assert (code, out) == (0, "0.0000 dB/km\n")


def test_rain_path(capsys):
    code, out, _ = run(capsys, "rain", "--freq-ghz", "28", "--rate", "25", "--dist-km", "2",
                       "--path")
    assert code == 0 and out.endswith(" dB\n")
    assert float(out.split()[0]) == pytest.approx(2 * 4.6236, abs=2e-3)


def test_fog_out_of_range(capsys):
    code, out, err = run(capsys, "fog", "--freq-ghz", "250", "--density", "0.1")
    assert code == 3 and out == ""
    assert "out of model range" in err and "200" in err


def test_fog_and_gas(capsys):
    code, out, _ = run(capsys, "fog", "--freq-ghz", "100", "--density", "0.5")
    assert code == 0 and out.endswith(" dB/km\n")
    code, out, _ = run(capsys, "gas", "--freq-ghz", "60")
    assert code == 0 and out.startswith("14.77")


@pytest.mark.parametrize("argv", [
    ("fspl", "--freq-ghz", "-1", "--dist-km", "1"),
    ("rain", "--freq-ghz", "28", "--rate", "-3"),
    ("budget",),
    ("sweep", "--quantity", "rain", "--range", "10:1:1", "--family", "1"),
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error: invalid input")


def test_rain_out_of_range(capsys):
    code, _, _ = run(capsys, "rain", "--freq-ghz", "2000", "--rate", "1")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ("fspl",),
    ("sweep", "--quantity", "rain", "--range", "1:10", "--family", "1"),
    ("preset", "fig9"),
])
def test_argparse_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        cli.main(list(argv))
    assert info.value.code == 2


def test_budget_json(capsys):
    code, out, _ = run(capsys, "budget", "--freq-ghz", "28", "--rate", "25", "--no-gas",
                       "--json")
    d = json.loads(out)
    assert code == 0
    assert d["total_db"] == pytest.approx(d["fspl_db"] + d["rain_db"])
    assert d["gas_db"] == 0.0


def test_budget_scenario(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"scenario": {"frequency_ghz": 28,
                                             "include": {"gas": False}}}))
    code, out, _ = run(capsys, "budget", "--scenario", str(path))
    assert code == 0 and "121.3932 dB" in out
    code, _, _ = run(capsys, "budget", "--scenario", str(tmp_path / "missing.json"))
    assert code == 4
    path.write_text('{"scenario": {"frequency_ghz": 28, "typo": 1}}')
    code, _, err = run(capsys, "budget", "--scenario", str(path))
    assert code == 2 and "typo" in err


def test_sweep_to_file(capsys, tmp_path):
    out = tmp_path / "rain.csv"
    code, _, _ = run(capsys, "sweep", "--quantity", "rain", "--range", "1:100:1",
                     "--family", "1,10", "-o", str(out))
    assert code == 0
    lines = [l for l in out.read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == "frequency_ghz,rain_db_per_km[R=1mm/h],rain_db_per_km[R=10mm/h]"
    assert len(lines) == 101


def test_sweep_scenario_file(capsys, tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"sweep": {"quantity": "gas-components", "axis": "frequency",
                                          "start": 50, "stop": 70, "step": 1,
                                          "family": ["oxygen", "total"]}}))
    code, out, _ = run(capsys, "sweep", "--scenario", str(path))
    assert code == 0
    assert "frequency_ghz,oxygen_db_per_km,total_db_per_km" in out


def test_unwritable_path_exit_4(capsys, tmp_path):
    target = tmp_path / "no" / "such" / "dir" / "out.csv"
    code, _, err = run(capsys, "preset", "fig3", "-o", str(target))
    assert code == 4 and err.startswith("error:")
    code, _, _ = run(capsys, "bands", "--csv", str(target))
    assert code == 4


def test_preset_stdout_matches_file(capsys, tmp_path):
    code, out, _ = run(capsys, "preset", "fig5")
    assert code == 0
    path = tmp_path / "fig5.csv"
    run(capsys, "preset", "fig5", "-o", str(path), "--jobs", "4")
    assert path.read_text() == out


def test_bands_default(capsys, tmp_path):
    csv = tmp_path / "bands.csv"
    code, out, _ = run(capsys, "bands", "--csv", str(csv))
    assert code == 0
    rows = [l.split(",") for l in csv.read_text().splitlines()[1:]]
    windows = [(float(a), float(b)) for a, b, c, *_ in rows if c == "window"]
    blocked = [(float(a), float(b)) for a, b, c, *_ in rows if c == "blocked"]
    assert any(a <= 28 and b >= 38 for a, b in windows)
    assert any(a <= 60 <= b for a, b in blocked)
    assert float(rows[0][0]) == 10 and float(rows[-1][1]) == 300


def test_bands_extreme_threshold(capsys):
    code, out, _ = run(capsys, "bands", "--gamma-low", "1e9")
    body = out.splitlines()[2:]
    assert code == 0 and len(body) == 1 and "window" in body[0]


def test_bands_total_basis(capsys):
    code, _, err = run(capsys, "bands", "--basis", "total", "--density", "0.5")
    assert code == 3 and "fog" in err
    code, out, _ = run(capsys, "bands", "--basis", "total", "--rate", "50", "--density", "0.5",
                       "--freq", "10:200:0.1")
    assert code == 0
    assert "window" not in out.split("\n", 2)[2]


def test_all_presets_listed():
    parser = cli.build_parser()
    sub = next(a for a in parser._actions if a.dest == "command")
    preset_parser = sub.choices["preset"]
    name = next(a for a in preset_parser._actions if a.dest == "name")
    assert sorted(name.choices) == sorted(PRESETS)
