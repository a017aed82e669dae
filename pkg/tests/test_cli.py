import json
import subprocess
import sys

import jsonschema
import pytest

from unienergy.cli import RunConfig, main
from unienergy.families import build
from unienergy.graph import format_graph
from unienergy.schemas import SCHEMAS


@pytest.fixture
def a8(tmp_path):
    p = tmp_path / "a8.txt"
    p.write_text("# A_8\n" + format_graph(build("A", 8)) + "\n")
    return str(p)


@pytest.fixture
def b8(tmp_path):
    p = tmp_path / "b8.txt"
    p.write_text(format_graph(build("B", 8)) + "\n")
    return str(p)


def run_json(capsys, argv, schema):
    code = main(argv + ["--json"])
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, SCHEMAS[schema])
    return code, doc


def test_energy_family(capsys):
    code, doc = run_json(capsys, ["energy", "--family", "B", "--n", "8"], "energy")
    assert code == 0
    assert doc["value"] == pytest.approx(9.15298, abs=5e-5)


def test_energy_both_methods(capsys, a8):
    code, doc = run_json(capsys, ["energy", a8, "--method", "both"], "energy")
    assert code == 0 and doc["agree"]
    assert [r["method"] for r in doc["results"]] == ["EigenSum", "CoulsonIntegral"]


def test_charpoly(capsys, a8):
    code, doc = run_json(capsys, ["charpoly", a8], "charpoly")
    assert code == 0
    assert doc["results"][0]["a"] == [1, 0, -8, 0, 16, 0, -6, 0, 0]


def test_compare_identical(capsys, a8):
    code, doc = run_json(capsys, ["compare", a8, a8], "compare")
    assert code == 0 and doc["relation"] == "Equal"


def test_compare_dominance(capsys, a8, b8):
    code, doc = run_json(capsys, ["compare", b8, a8], "compare")
    assert doc["relation"] == "DominatesStrictly" and doc["witness_index"] == 6
    assert doc["E1"] > doc["E2"]


@pytest.mark.parametrize("emit", ["graph", "charpoly", "energy"])
def test_family(capsys, emit):
    code, _ = run_json(capsys, ["family", "--name", "A", "--n", "12", "--emit", emit], "family")
    assert code == 0


def test_family_text_is_graph_format(capsys):
    assert main(["family", "--name", "D", "--n", "10"]) == 0
    assert capsys.readouterr().out.strip() == format_graph(build("D", 10))


def test_transform_list_and_apply(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("6; 0 1; 1 2; 2 3; 3 4; 4 5\n")
    code, doc = run_json(capsys, ["transform", "--kind", "egt", str(p), "--list-anchors"], "transform-list")
    assert code == 0 and len(doc["anchors"]) == 6
    code, doc = run_json(capsys, ["transform", "--kind", "egt", str(p), "--apply", "0"], "transform-apply")
    assert code == 0 and doc["relation"] == "DominatesStrictly"
    assert main(["transform", "--kind", "egt", str(p), "--apply", "99"]) == 2


def test_enumerate(capsys, tmp_path):
    code, doc = run_json(capsys, ["enumerate", "--n", "8", "--verify", "all", "--out", str(tmp_path)], "enumerate")
    assert code == 0 and doc["count"] == 24
    assert all(r["verdict"] == "holds" for r in doc["reports"])
    assert list(tmp_path.glob("*/U_8.json"))


def test_enumerate_csv(capsys):
    assert main(["enumerate", "--n", "6", "--csv"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 8


def test_verify_paper(capsys, tmp_path):
    code, doc = run_json(capsys, ["verify-paper", "--max-n", "12", "--out", str(tmp_path)], "verify-paper")
    assert code == 0 and doc["verdict"] == "holds"
    assert (tmp_path / "verify-paper.json").exists()


def test_floats_have_ten_digits(capsys):
    main(["energy", "--family", "A", "--n", "6", "--json"])
    assert '"value": 6.602720496' in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["energy", "/nonexistent/graph.txt"],
    ["energy"],
    ["enumerate", "--n", "30"],
    ["family", "--name", "A", "--n", "7"],
    ["energy", "--family", "A", "--n", "8", "--tol", "-1"],
    ["verify-paper", "--max-n", "4"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_bad_graph_text(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3; 0 0\n")
    assert main(["charpoly", str(p)]) == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(0.0, 12, "json", None, 1)
    with pytest.raises(ValueError):
        RunConfig(1e-8, 4, "json", None, 1)


def test_env_tolerance(monkeypatch, capsys):
    monkeypatch.setenv("UNIENERGY_TOL", "1e-10")
    monkeypatch.setenv("UNIENERGY_JOBS", "2")
    assert main(["energy", "--family", "A", "--n", "8", "--method", "coulson"]) == 0


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "unienergy.cli", "energy", "--family", "B", "--n", "8"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.startswith("EigenSum: 9.152982445")
