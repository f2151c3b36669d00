import json
import subprocess
import sys

import pytest

from vramsey.cli import main
from vramsey.constructions import coloring_mixed
from vramsey.lattice import Domain
from vramsey.render import hasse_edges, to_dot, to_svg


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_ramsey_compute(capsys):
    assert run(capsys, "ramsey", "compute", "--targets", "V(1,1),V(1,1)") == (0, "3")


def test_rainbow_compute(capsys):
    assert run(capsys, "rainbow", "compute", "--p", "V(1,2)", "--q", "A(2)") == (0, "4")


def test_poset_commands(capsys):
    assert run(capsys, "poset", "dim2", "--pattern", "C(1)") == (0, "0")
    code, out = run(capsys, "poset", "info", "--pattern", "V(1,2)", "--json")
    info = json.loads(out)
    assert code == 0 and info["dim2"] == 3 and info["extremal_count"] == 1 and info["height"] == 3


def test_custom_poset_file(capsys, tmp_path):
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"size": 3, "covers": [[0, 1], [0, 2]]}))
    assert run(capsys, "poset", "dim2", "--pattern", f"@{f}") == (0, "2")


def test_exit_codes(capsys, tmp_path):
    assert run(capsys, "ramsey", "compute", "--targets", "Q(1,1)")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify-certificate", "--file", str(bad))[0] == 3
    assert run(capsys, "verify-certificate", "--file", str(tmp_path / "missing.json"))[0] == 3
    assert run(capsys, "ramsey", "compute", "--targets", "V(2,2),V(2,2)", "--node-budget", "50")[0] == 4
    assert run(capsys, "rainbow", "compute", "--p", "V(1,1)", "--q", "C(2)")[0] == 5
    assert run(capsys, "ramsey", "compute", "--targets", "V(2,2),V(2,2)", "--n-max", "3")[0] == 1


def test_single_direction(capsys):
    assert run(capsys, "ramsey", "verify-upper", "--n", "4", "--targets", "V(1,1),V(2,2)") == (0, "exhausted")
    assert run(capsys, "ramsey", "find-lower", "--n", "3", "--targets", "V(1,1),V(2,2)") == (0, "witness")
    assert run(capsys, "ramsey", "verify-upper", "--n", "3", "--targets", "V(1,1),V(2,2)")[0] == 1


def test_certificate_round_trip(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert run(capsys, "ramsey", "compute", "--targets", "V(1,1),V(2,2)", "-o", str(out))[0] == 0
    code, text = run(capsys, "verify-certificate", "--file", str(out))
    assert code == 0 and "FAILED" not in text
    doc = json.loads(out.read_text())
    doc["value"] = 5
    out.write_text(json.dumps(doc))
    assert run(capsys, "verify-certificate", "--file", str(out))[0] == 1


def test_output_is_deterministic(capsys, tmp_path):
    docs = []
    for w in ("1", "4"):
        out = tmp_path / f"r{w}.json"
        main(["ramsey", "compute", "--targets", "V(1,2),V(1,2)", "--workers", w, "-o", str(out)])
        doc = json.loads(out.read_text())
        for key in ("lower", "upper"):
            doc[key].pop("metadata")
            doc[key]["config"].pop("workers")
        docs.append(doc)
    capsys.readouterr()
    assert docs[0] == docs[1]


@pytest.mark.parametrize("rule, params", [
    ("layered", ["m=1", "n=2", "k=2"]), ("mixed", ["m=2", "n=2"]), ("theorem3", ["k=3", "S={1,2}"]),
    ("rainbow-lower", ["n=2", "k=3"]), ("prop8", ["P=B(2)"]),
])
def test_construct_coloring(capsys, tmp_path, rule, params):
    out = tmp_path / "c.json"
    code, text = run(capsys, "construct", "coloring", "--rule", rule, "--params", *params, "-o", str(out))
    assert (code, text) == (0, "good")
    doc = json.loads(out.read_text())
    assert doc["verdict"]["good"]


@pytest.mark.parametrize("rule, family", [
    ("chain-removal", {"n": 4, "family": ["{}", "{2}", "{2,3}"]}),
    ("antichain-removal", {"n": 4, "family": ["{1,2}", "{3}"]}),
    ("iterated", {"n": 5, "family": ["{1}", "{1,2}", "{3,4}"], "forbid_top": True}),
])
def test_construct_embedding(capsys, tmp_path, rule, family):
    f = tmp_path / "f.json"
    f.write_text(json.dumps(family))
    code, out = run(capsys, "construct", "embedding", "--rule", rule, "--input", str(f), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["valid"]


def test_minimal_commands(capsys, tmp_path):
    d = tmp_path / "d.json"
    d.write_text(json.dumps({"n": 3, "removed": ["{1,2,3}"]}))
    assert run(capsys, "minimal", "check", "--domain", str(d), "--targets", "V(1,1),V(1,1)") == (0, "minimal")
    assert run(capsys, "minimal", "enumerate", "--n", "3", "--targets", "V(1,1),V(1,1)") == (0, "B_3 - {{1,2,3}}")
    code, out = run(capsys, "minimal", "pairs", "--n", "4", "--targets", "V(1,1),V(2,2)")
    assert code == 0 and len(out.splitlines()) == 19


def test_lemma_and_conjecture(capsys):
    assert run(capsys, "ramsey", "lemma", "--m", "1", "--n", "2") == (0, "holds")
    code, out = run(capsys, "ramsey", "conjecture", "--ms", "1,1")
    assert code == 0 and out == "predicted 3, strong 3, weak 3"


def test_render(capsys, tmp_path):
    c = tmp_path / "c.json"
    c.write_text(json.dumps(coloring_mixed(1, 2).to_json()))
    code, out = run(capsys, "render", "hasse", "--coloring", str(c), "--format", "svg")
    assert code == 0 and out.startswith("<svg") and out.count("<circle") == 8
    code, out = run(capsys, "render", "hasse", "--n", "2")
    assert code == 0 and out.count(" -- ") == 4


def test_hasse_edges_skip_removed_levels():
    D = Domain(2, frozenset({1, 2}))
    assert hasse_edges(D) == [(0, 3)]
    assert "s0 -- s3" in to_dot(D)
    assert to_svg(Domain.full(3)).count("<line") == 12


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "vramsey", "poset", "dim2", "--pattern", "V(1,2)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
