import json
import subprocess
import sys

import pytest

from g2grading.cli import main


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


@pytest.fixture
def t5(tmp_path, run):
    path = tmp_path / "t5.json"
    assert run("grading", "new", "--type", "5", "--group", "3", "--param", "g=[1]", "-o", str(path))[0] == 0
    return path


def test_selfcheck(run):
    code, out, err = run("selfcheck", "--samples", "20")
    assert code == 0
    report = json.loads(out)
    assert report["ok"]
    details = [line for c in report["checks"] for line in c["details"]]
    assert "dim Der(C) = 14" in details
    assert "64/64 table entries verified" in details
    assert "dim Der(C) = 14" in err


def test_new_type5(t5):
    data = json.loads(t5.read_text())
    assert [len(c["basis"]) for c in data["components"]] == [2, 3, 3]
    assert data["descriptor"] == {"type": 5, "params": {"g": [1]}}


def test_param_forms(run):
    code, out, _ = run("grading", "new", "--type", "8", "--group", "2,2", "--param", "g=1,0", "--param", "h=[0,1]")
    assert code == 0 and len(json.loads(out)["components"]) == 4


def test_induce_type9(tmp_path, run):
    src, dst = tmp_path / "t9.json", tmp_path / "l9.json"
    run("grading", "new", "--type", "9", "--group", "2,2,2",
        "--param", "g=[1,0,0]", "--param", "h=[0,1,0]", "--param", "k=[0,0,1]", "-o", str(src))
    assert run("grading", "induce", str(src), "-o", str(dst))[0] == 0
    data = json.loads(dst.read_text())
    assert data["ambient"] == "g2"
    assert [len(c["basis"]) for c in data["components"]] == [2] * 7
    assert [0, 0, 0] not in [c["label"] for c in data["components"]]


def test_iso_type6_type8(tmp_path, run):
    a, b = tmp_path / "t6.json", tmp_path / "t8.json"
    run("grading", "new", "--type", "6", "--group", "4", "--param", "g=[1]", "-o", str(a))
    run("grading", "new", "--type", "8", "--group", "2,2", "--param", "g=[1,0]", "--param", "h=[0,1]", "-o", str(b))
    code, out, _ = run("grading", "iso", str(a), str(b))
    assert code == 0 and json.loads(out)["verdict"] == "non_isomorphic"


def test_chars_type8(tmp_path, run):
    path = tmp_path / "t8.json"
    run("grading", "new", "--type", "8", "--group", "2,2", "--param", "g=[1,0]", "--param", "h=[0,1]", "-o", str(path))
    code, out, _ = run("chars", "--group", "2,2", "--grading", str(path))
    assert code == 0
    mats = [c["matrix"] for c in json.loads(out)["characters"]]
    assert len(mats) == 4
    for M in mats:
        assert all(M[i][j] == "0" for i in range(8) for j in range(8) if i != j)
        assert {M[i][i] for i in range(8)} <= {"1", "-1"}


def test_chars_group_mismatch(t5, run):
    assert run("chars", "--group", "4", "--grading", str(t5))[0] == 2


def test_chars_cyclotomic_values(run):
    code, out, _ = run("chars", "--group", "3")
    values = [c["values_on_generators"][0] for c in json.loads(out)["characters"]]
    assert values == ["1", "cyc(3):0,1", "cyc(3):-1,-1"]


def test_classify(t5, run):
    code, out, _ = run("grading", "classify", str(t5))
    assert code == 0 and json.loads(out)["type"] == 5


def test_verify_failure_exit_1(t5, tmp_path, run):
    data = json.loads(t5.read_text())
    data["components"][0]["basis"].append(data["components"][1]["basis"].pop())
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, out, _ = run("grading", "verify", str(bad))
    assert code == 1
    report = json.loads(out)
    assert not report["ok"] and "witness" in report
    # commands that need a valid grading refuse it with the same code
    assert run("grading", "classify", str(bad))[0] == 1


@pytest.mark.parametrize("argv", [
    ["grading", "new", "--type", "3", "--group", "4", "--param", "h=[1]"],
    ["grading", "new", "--type", "5", "--group", "3", "--param", "g"],
    ["grading", "new", "--type", "5", "--group", "1"],
    ["grading", "new", "--type", "10", "--group", "3"],
    ["grading", "verify", "/nonexistent/file.json"],
    ["chars", "--group", "a,b"],
    [],
])
def test_bad_input_exit_2(argv, run):
    assert run(*argv)[0] == 2


def test_malformed_json_exit_2(tmp_path, run):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run("grading", "verify", str(p))[0] == 2
    p.write_text('{"group": {"factors": [3]}}')
    assert run("grading", "verify", str(p))[0] == 2


def test_table_output(run):
    code, out, _ = run("table")
    assert code == 0 and "u1" in out
    code, out, _ = run("table", "--json")
    data = json.loads(out)
    assert data["table"][2][3] == "v3" and data["table"][5][6] == "-u3"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "g2grading", "table", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["basis"][0] == "e1"


@pytest.mark.parametrize("group, count", [("3", 3), ("", 1), ("2,2", 4)])
def test_chars_counts(group, count, run):
    code, out, _ = run("chars", "--group", group)
    assert code == 0 and len(json.loads(out)["characters"]) == count
