import json
import subprocess
import sys

import numpy as np
import pytest

from posetramsey import io
from posetramsey.cli import main
from posetramsey.constructions import (construct_a3_lower, ramsey_bounds,
                                       verify_no_blue_antichain, verify_no_red_cube)
from posetramsey.embeddings import find_red_cube
from posetramsey.lattice import LatticeColoring, random_coloring
from posetramsey.pipeline import random_chain_coloring, theorem2_pipeline
from posetramsey.search import has_escaping_coloring, ramsey_exact


def test_coloring_hex_layout():
    c = LatticeColoring.from_blue(3, [0, 5])
    assert io.coloring_to_json(c) == {"n": 3, "blue": "12"}
    assert io.coloring_to_json(random_coloring(3, 42, 0.5)) == {"n": 3, "blue": "21"}
    assert io.coloring_to_json(LatticeColoring.all_red(0)) == {"n": 0, "blue": "0"}


def test_coloring_roundtrip():
    rng = np.random.default_rng(3)
    for n in range(0, 11):
        c = LatticeColoring(n, rng.random(1 << n) < 0.3)
        assert io.coloring_from_json(json.loads(io.dump(io.coloring_to_json(c)))) == c


@pytest.mark.parametrize("obj", [
    {"n": 3}, {"n": 3, "blue": "1"}, {"n": 3, "blue": "zz"}, {"n": 1, "blue": "4"},
    {"n": 30, "blue": "0"}, {"n": "3", "blue": "00"}, [1, 2]])
def test_coloring_rejects_malformed(obj):
    with pytest.raises(ValueError):
        io.coloring_from_json(obj)


def test_embedding_and_witness_roundtrip():
    e = find_red_cube(LatticeColoring.all_red(3), 2)
    assert io.embedding_from_json(json.loads(io.dump(io.embedding_to_json(e)))).tail == e.tail
    w = has_escaping_coloring(3, 3, 1)
    back = io.witness_from_json(json.loads(io.dump(io.witness_to_json(w))))
    assert back.kind == w.kind and back.coloring == w.coloring and back.nodes == w.nodes


def test_other_encoders_are_json():
    c = construct_a3_lower(1)
    for obj in (io.antichain_check_to_json(verify_no_blue_antichain(c, 3)),
                io.antichain_check_to_json(verify_no_blue_antichain(c, 2)),
                io.cube_check_to_json(verify_no_red_cube(LatticeColoring.all_red(3), 2)),
                io.bounds_to_json(ramsey_bounds(4, 3)),
                io.ramsey_result_to_json(ramsey_exact(2, 1, 4)),
                io.trace_to_json(theorem2_pipeline(random_chain_coloring(6, 2, 0), 3))):
        json.loads(io.dump(obj))


def run(capsys, *argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_cli_construct_and_verify(tmp_path, capsys):
    f = tmp_path / "a3.json"
    code, out = run(capsys, "construct", "a3", "--n", "2", "--out", str(f))
    assert code == 0 and all(cl["certified"] for cl in out["claims"])
    assert io.load_coloring(f) == construct_a3_lower(2)
    code, out = run(capsys, "verify", str(f), "--t", "3", "--n", "2")
    assert code == 0 and out["all_certified"]
    code, out = run(capsys, "verify", str(f), "--t", "2")
    assert code == 3 and not out["claims"][0]["certified"]


def test_cli_construct_layered_and_random(capsys):
    code, out = run(capsys, "construct", "layered", "--n", "2", "--r", "1")
    assert code == 0 and out["N"] == 5
    code, out = run(capsys, "construct", "random-chains", "--n", "3", "--chains", "2", "--seed", "4")
    assert code == 0 and out["claims"][0]["certified"]


def test_cli_search(tmp_path, capsys):
    f = tmp_path / "res.json"
    code, out = run(capsys, "search", "--t", "3", "--n", "1", "--out", str(f))
    assert code == 0 and out["value"] == 4
    assert out["witness"]["kind"] == "escaping-coloring"
    # a search result file is accepted wherever a coloring is expected
    code, out = run(capsys, "verify", str(f), "--t", "3", "--n", "1")
    assert code == 0


def test_cli_search_budget(capsys):
    code, out = run(capsys, "search", "--t", "3", "--n", "2", "--budget", "10")
    assert code == 2 and out["kind"] == "budget-exhausted"


def test_cli_pipeline(tmp_path, capsys):
    f = tmp_path / "c.json"
    io.dump(io.coloring_to_json(random_chain_coloring(6, 2, 1)), f)
    code, out = run(capsys, "pipeline", str(f), "--t", "3")
    assert code == 0 and len(out["result"]["tail"]) == 8
    code, out = run(capsys, "pipeline", str(f), "--t", "4")
    assert code == 1
    g = tmp_path / "a3.json"
    io.dump(io.coloring_to_json(construct_a3_lower(3)), g)
    code, out = run(capsys, "pipeline", str(g), "--t", "2")
    assert code == 1 and out["error"] == "blue antichain"


def test_cli_tools(tmp_path, capsys):
    code, out = run(capsys, "tools", "scd", "--n", "4")
    assert code == 0 and len(out["chains"]) == 6
    code, out = run(capsys, "tools", "bounds", "--n", "100", "--t", "3")
    assert code == 0 and out["exact"] == 103
    f = tmp_path / "c.json"
    io.dump(io.coloring_to_json(construct_a3_lower(1)), f)
    code, out = run(capsys, "tools", "dilworth", str(f))
    assert code == 0 and len(out["chains"]) == 2 == len(out["antichain"])
    code, out = run(capsys, "tools", "redcube", str(f), "--n", "1")
    assert code == 3 and out == {"found": False}
    o = tmp_path / "o.json"
    o.write_text(json.dumps({"orderings": [[0, 1, 2, 3, 4], [4, 3, 2, 1, 0]]}))
    code, out = run(capsys, "tools", "triple", str(o))
    assert code == 0 and len(out) == 3


@pytest.mark.parametrize("argv", [
    ["construct", "a2", "--n", "0"],
    ["construct", "layered", "--n", "2"],
    ["verify", "/nonexistent.json", "--t", "2"],
    ["search", "--t", "1", "--n", "1"],
    ["search", "--t", "2", "--n", "1", "--threads", "0"],
    ["tools", "dilworth"],
    ["bogus"],
])
def test_cli_input_errors(argv, capsys):
    assert main(argv) == 1
    capsys.readouterr()


def test_cli_verify_malformed_file(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"n": 2, "blue": "xyz"}')
    assert main(["verify", str(f), "--t", "2"]) == 1


def test_cli_text_output(capsys):
    assert main(["construct", "a2", "--n", "1"]) == 0
    out = capsys.readouterr().out
    assert "B" in out and "R" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posetramsey", "--format", "json",
                           "tools", "bounds", "--n", "3", "--t", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["exact"] == 5
