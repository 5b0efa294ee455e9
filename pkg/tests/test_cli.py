import json
import subprocess
import sys

import pytest

from esgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_dot(capsys):
    code, out, _ = run(capsys, "build", "path:4", "--format", "dot")
    assert code == 0
    assert out.startswith("graph ") and out.count("[label=") == 7


def test_build_json_complete(capsys):
    code, out, _ = run(capsys, "build", "cycle:3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["order"] == 7 and data["size"] == 21
    assert set(data) == {"host", "epsilon", "order", "size", "vertices", "edges"}
    assert data["vertices"][0] == {"mask_hex": "0x1", "subset": "{e1}", "s": 1, "i": 1}


def test_build_single_vertex(capsys):
    code, out, _ = run(capsys, "build", "star:1")
    data = json.loads(out)
    assert data["order"] == 1 and data["edges"] == []


def test_build_table(capsys):
    code, out, _ = run(capsys, "build", "path:3", "--format", "table")
    assert code == 0 and "v(2,1)\t{e1,e2}\t2" in out


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", "path:4")
    data = json.loads(out)
    assert (data["Delta"], data["delta"], data["max_count"]) == (6, 4, 4)
    _, out, _ = run(capsys, "profile", "star:4")
    assert {r["degree"] for r in json.loads(out)["degrees"]} == {14}
    _, out, _ = run(capsys, "profile", "cycle:5")
    assert json.loads(out)["max_count"] == 11
    _, out, _ = run(capsys, "profile", "cycle:5", "--format", "table")
    assert "max_count   11" in out


@pytest.mark.parametrize("spec,number,index", [("cycle:6", 4, 6), ("path:6", 3, 1), ("complete:4", 2, 12)])
def test_ced(capsys, spec, number, index):
    code, out, _ = run(capsys, "ced", spec)
    data = json.loads(out)
    assert code == 0 and (data["ced_number"], data["ced_index"]) == (number, index)


def test_edge_degrees(capsys):
    code, out, _ = run(capsys, "edge-degrees", "path:5")
    assert code == 0 and json.loads(out)["total"] == 6


def test_setgraph_compare(capsys):
    code, out, _ = run(capsys, "setgraph-compare", "path:3")
    data = json.loads(out)
    assert (data["esg_sum"], data["setgraph_sum"], data["esg_exceeds"]) == (6, 4, True)


def test_edge_list_file_input(capsys, tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text("3 3\n1 2\n2 3\n1 3\n")
    code, out, _ = run(capsys, "profile", str(f))
    assert code == 0 and json.loads(out)["max_count"] == 7


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "ced", "path:4", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["ced_index"] == 1


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "profile", "foo:3")[0] == 2
    assert run(capsys, "profile", "cycle:2")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n1 2\n")
    code, _, err = run(capsys, "profile", str(bad))
    assert code == 2 and "input error" in err
    disconnected = tmp_path / "dis.txt"
    disconnected.write_text("4 2\n1 2\n3 4\n")
    assert run(capsys, "profile", str(disconnected))[0] == 2


def test_guard_errors(capsys):
    assert run(capsys, "build", "complete:6")[0] == 3
    assert run(capsys, "profile", "path:6", "--max-epsilon", "4")[0] == 3
    # an override never lifts the hard guard
    assert run(capsys, "build", "complete:6", "--max-epsilon", "99")[0] == 3


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "Prop3.1c", "--n", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data) == 1 and data[0]["status"] == "FAIL" and data[0]["verdict_only"]
    assert data[0]["computed"] == 80


def test_verify_table_and_json_output(capsys, tmp_path):
    target = tmp_path / "v.json"
    code, out, _ = run(capsys, "verify", "--claim", "Thm2.8", "--output", str(target))
    assert code == 0 and out.startswith("PASS")
    assert json.loads(target.read_text())[0]["claim_id"] == "Thm2.8"


def test_verify_quick_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--profile", "quick")
    # known gating failures keep the suite red
    assert code == 1
    assert "gating failure" in out


def test_verify_unknown_claim(capsys):
    assert run(capsys, "verify", "--claim", "Nope")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "esgraph", "ced", "cycle:4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ced_index"] == 4
