import csv
import hashlib
import io
import json
import subprocess
import sys

import pytest

from thg_zigzag.cli import main
from thg_zigzag.datasets import toy_path


@pytest.fixture
def toy_file(tmp_path):
    path = tmp_path / "toy.json"
    path.write_text(toy_path().read_text())
    return path


def run_args(toy_file, tmp_path, *extra):
    return ["run", "--input", str(toy_file), "--window-size", "2", "--shift", "2",
            "--out", str(tmp_path / "bc.json"), *extra]


def test_run_toy(toy_file, tmp_path, capsys):
    assert main(run_args(toy_file, tmp_path, "--stats-out", str(tmp_path / "s.csv"),
                         "--svg", str(tmp_path / "b.svg"))) == 0
    out = capsys.readouterr()
    assert out.out == ""
    doc = json.loads((tmp_path / "bc.json").read_text())
    d0 = [(e["birth"], e["death"], e["open_end"]) for e in doc["dims"]["0"]]
    d1 = [(e["birth"], e["death"], e["open_end"]) for e in doc["dims"]["1"]]
    assert d0 == [(0, 0.5, False), (0, 4.5, True)]
    assert d1 == [(2, 3, False)]
    assert (tmp_path / "s.csv").read_text().startswith("window_index,mid_time,n_edges,n_vertices\n")
    assert (tmp_path / "b.svg").read_text().startswith("<?xml")


def test_run_time_axis(toy_file, tmp_path):
    assert main(run_args(toy_file, tmp_path, "--axis", "time")) == 0
    doc = json.loads((tmp_path / "bc.json").read_text())
    assert doc["axis"] == "time"
    assert [(e["birth"], e["death"]) for e in doc["dims"]["1"]] == [(5.0, 7.0)]


def test_single_event_points(tmp_path):
    log = tmp_path / "ev.csv"
    log.write_text("edge_id,node_id,timestamp\np80,x,3\n")
    out = tmp_path / "bc.json"
    assert main(["run", "--input", str(log), "--format", "event-csv", "--event-mode", "points",
                 "--window-size", "5", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["dims"]["0"] == [{"birth": 0, "death": 0.5, "birth_half": False, "death_half": True,
                                 "open_end": True}]


def test_deterministic(toy_file, tmp_path):
    digests = []
    for i in range(2):
        d = tmp_path / f"r{i}"
        d.mkdir()
        assert main(["run", "--input", str(toy_file), "-w", "2", "--out", str(d / "b.json"),
                     "--stats-out", str(d / "s.csv"), "--svg", str(d / "b.svg")]) == 0
        digests.append([hashlib.sha256((d / n).read_bytes()).hexdigest() for n in ("b.json", "s.csv", "b.svg")])
    assert digests[0] == digests[1]


def test_betti_command(toy_file, tmp_path):
    out = tmp_path / "betti.csv"
    assert main(["betti", "--input", str(toy_file), "-w", "2", "-s", "2", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert (rows[0]["b0"], rows[0]["b1"]) == ("2", "0")
    assert rows[2]["b1"] == "1"
    assert list(rows[0]) == ["window_index", "mid_time", "b0", "b1", "n_edges", "n_vertices"]


def test_betti_empty_window(toy_file, capsys):
    assert main(["betti", "--input", str(toy_file), "-w", "2", "--t0", "20", "--tf", "22"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert [rows[0][k] for k in ("b0", "b1", "n_edges", "n_vertices")] == ["0", "0", "0", "0"]


def test_stats_command(toy_file, capsys):
    assert main(["stats", "--input", str(toy_file), "-w", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "window_index,mid_time,n_edges,n_vertices"
    assert lines[3] == "2,5.0,3,4"


def test_render_command(toy_file, tmp_path):
    assert main(run_args(toy_file, tmp_path)) == 0
    svg = tmp_path / "r.svg"
    assert main(["render", "--input", str(tmp_path / "bc.json"), "--out", str(svg)]) == 0
    assert "<svg" in svg.read_text()


def test_cross_command_consistency(tmp_path):
    import random

    from oracles import random_raw_edges
    from thg_zigzag.io import thg_to_dict
    from thg_zigzag.core import build_temporal_hypergraph

    for seed in range(5):
        path = tmp_path / f"g{seed}.json"
        path.write_text(json.dumps(thg_to_dict(build_temporal_hypergraph(random_raw_edges(random.Random(seed))))))
        common = ["--input", str(path), "-w", "2", "-s", "1", "--dim", "2"]
        assert main(["run", *common, "--out", str(tmp_path / "b.json")]) == 0
        assert main(["betti", *common, "--out", str(tmp_path / "t.csv")]) == 0
        doc = json.loads((tmp_path / "b.json").read_text())
        for row in csv.DictReader((tmp_path / "t.csv").open()):
            i = int(row["window_index"])
            for p in range(3):
                alive = sum(1 for e in doc["dims"][str(p)] if e["birth"] <= i < e["death"])
                assert alive == int(row[f"b{p}"])


@pytest.mark.parametrize(
    "argv, code",
    [
        (["run", "-w", "2", "-s", "3"], 1),
        (["run", "-w", "0"], 1),
        (["run", "-w", "2", "--dim", "7"], 1),
        (["run", "-w", "2", "--mode", "both"], 1),
        (["run"], 1),
        (["run", "-w", "2", "--input", "/nonexistent/x.json"], 2),
    ],
)
def test_exit_codes(argv, code, toy_file, capsys):
    if "--input" not in argv:
        argv = argv + ["--input", str(toy_file)]
    assert main(argv) == code
    assert capsys.readouterr().err


def test_bad_input_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["run", "--input", str(bad), "-w", "1", "--out", str(tmp_path / "o.json")]) == 2


def test_console_script(toy_file):
    proc = subprocess.run([sys.executable, "-m", "thg_zigzag.cli", "run", "--input", str(toy_file), "-w", "2"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["mode"] == "union"
