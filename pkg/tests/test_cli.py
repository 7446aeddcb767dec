import json

import pytest

from kdist import linf, vec
from kdist.cli import run_command
from kdist.norms import norm_to_json
from kdist.spectrum import PointSet, pointset_to_json


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write


def _grid_points():
    return PointSet.of([vec(x, y) for x in range(3) for y in range(3)])


def test_spectrum_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    points = files("pts.json", pointset_to_json(_grid_points()))
    assert run_command(["spectrum", "--norm", norm, "--points", points]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["k"] == 2
    assert out["distances"] == [[1, 1], [2, 1]]


def test_chains_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    points = files("pts.json", pointset_to_json(_grid_points()))
    assert run_command(["chains", "--norm", norm, "--points", points]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["h"] == 2 and out["bound"] == 9 and out["observed"] == 9


def test_normalize2d_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    assert run_command(["normalize2d", "--norm", norm]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["conditions_ok"]
    assert out["x0"] == [[1, 1], [1, 1]]


def test_decompose_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(1)))
    pts = PointSet.of([vec(0), vec(1), vec(100), vec(101)])
    points = files("pts.json", pointset_to_json(pts))
    assert run_command(["decompose", "--norm", norm, "--points", points]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kind"] == "split" and out["size"] == 4


def test_search_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    ground = files("ground.json", pointset_to_json(_grid_points()))
    rc = run_command(["search", "--norm", norm, "--ground", ground,
                      "--k", "1", "--enumerate-optima"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["size"] == 4
    assert len(out["optima"]) == 5


def test_bound_command_linf(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    points = files("pts.json", pointset_to_json(_grid_points()))
    assert run_command(["bound", "--norm", norm, "--points", points]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["bound"] == "parallelotope-chain"
    assert out["pass"] and out["claimed"] == 9 and out["observed"] == 9
    assert out["inputs_digest"]


def test_bound_command_planar(files, capsys):
    from kdist import hexagon_gauge
    norm = files("norm.json", norm_to_json(hexagon_gauge()))
    pts = PointSet.of([vec(0, 0), vec(1, 0), vec(1, 1)])
    points = files("pts.json", pointset_to_json(pts))
    assert run_command(["bound", "--norm", norm, "--points", points]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["bound"] == "planar-two-cones"
    assert out["claimed"] == 4 and out["observed"] == 3


def test_conecover_command(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    rc = run_command(["conecover", "--norm", norm, "--samples", "1000",
                      "--trials", "50"])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out["m"] <= out["capacity"] == 20
    assert out["unassigned"] == 0 and out["halfwidth_ok"]
    assert out["max_halfwidth"] < 0.5


def test_missing_file_is_input_error(files, capsys):
    norm = files("norm.json", norm_to_json(linf(2)))
    assert run_command(["spectrum", "--norm", norm,
                        "--points", "/nonexistent.json"]) == 1


def test_malformed_norm_is_input_error(files, capsys):
    norm = files("norm.json", {"dim": 2, "kind": "nonsense"})
    points = files("pts.json", pointset_to_json(_grid_points()))
    assert run_command(["spectrum", "--norm", norm, "--points", points]) == 1


def test_dimension_mismatch_is_input_error(files, capsys):
    norm = files("norm.json", norm_to_json(linf(3)))
    points = files("pts.json", pointset_to_json(_grid_points()))
    assert run_command(["spectrum", "--norm", norm, "--points", points]) == 1
