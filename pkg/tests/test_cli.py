import json

import pytest

from deligne.cli import main

EX8 = '{"dim": 2, "hyperplanes": [[1,0],[0,1],[1,1],[1,2]]}'
A2 = '{"dim": 2, "hyperplanes": [[1,0],[0,1],[1,1]]}'
DEGENERATE = '{"dim": 3, "hyperplanes": [[1,0,0]]}'
LABELS = "[[1,0],[0,1]]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def ex8_file(tmp_path):
    path = tmp_path / "ex8.json"
    path.write_text(EX8)
    return str(path)


def test_chambers(capsys, ex8_file):
    code, out, _ = run(capsys, "chambers", ex8_file)
    assert code == 0
    assert out.splitlines()[0] == "8 chambers"
    assert "++++" in out and "----" in out
    code, out, _ = run(capsys, "chambers", '{"dim": 2, "hyperplanes": [[1,0]]}')
    assert code == 0 and out.startswith("2 chambers")


def test_chambers_json(capsys):
    code, out, _ = run(capsys, "chambers", EX8, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["count"] == 8 and data["simplicial"]
    assert data["chambers"][0]["sign"] == "++++"


def test_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "chambers", str(bad))
    assert code == 2 and err.startswith("error:") and len(err.splitlines()) == 1
    code, _, _ = run(capsys, "chambers", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, _ = run(capsys, "chambers", '{"dim": 2, "hyperplanes": [[0,0]]}')
    assert code == 2
    code, _, _ = run(capsys, "nf", EX8, "--base", "++-+", "--word", "s1")
    assert code == 2
    code, _, _ = run(capsys, "nf", EX8, "--word", "s1.q")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["chambers"])
    assert exc.value.code == 2


def test_nf(capsys, ex8_file):
    args = ("nf", ex8_file, "--base", "++++", "--labeling", LABELS)
    assert run(capsys, *args, "--word", "s1.s2.s1.s2.s1")[1] == "(s2.s1.s2.s1)|(s1)\n"
    assert run(capsys, *args, "--word", "")[1] == "()\n"
    assert run(capsys, *args, "--word", "s2.s1.s2.s1")[1] == "(s2.s1.s2.s1)\n"
    code, out, _ = run(capsys, *args, "--word", "s1.s2.s1.s2.s1", "--format", "json")
    assert json.loads(out)["factors"] == ["s2.s1.s2.s1", "s1"]


def test_nf_budget_exhausted(capsys, monkeypatch):
    code, _, err = run(capsys, "nf", EX8, "--word", "s1.s2.s1.s2.s1", "--budget", "1")
    assert code == 3 and "budget" in err
    monkeypatch.setenv("DELIGNE_BUDGET", "1")
    assert run(capsys, "nf", EX8, "--word", "s1.s2.s1.s2.s1")[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", EX8)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7 and all(line.startswith("PASS") for line in lines)
    code, out, _ = run(capsys, "verify", A2)
    assert code == 0 and "m in 3" in out


def test_verify_degenerate(capsys):
    code, out, _ = run(capsys, "verify", DEGENERATE)
    lines = out.splitlines()
    assert code == 0
    assert lines[0].startswith("PASS chambers")
    assert all(line.startswith("SKIP") and "NotEssential" in line for line in lines[1:])


def test_skeleton(capsys):
    code, out, _ = run(capsys, "skeleton", EX8, "--labeling", LABELS, "--dot")
    assert code == 0 and out.startswith("digraph")
    assert '"++++" -> "-+++" [label="s1"];' in out
    assert out.count("->") == 16
    assert run(capsys, "skeleton", EX8, "--labeling", LABELS, "--format", "dot")[1] == out
    code, out, _ = run(capsys, "skeleton", EX8, "--format", "json")
    assert len(json.loads(out)["arrows"]) == 16


def test_atoms(capsys):
    code, out, _ = run(capsys, "atoms", EX8, "--labeling", LABELS, "--from", "++++", "--to=----")
    assert code == 0 and out.splitlines() == ["s1.s2.s1.s2", "s2.s1.s2.s1"]
    code, out, _ = run(capsys, "atoms", EX8, "--from", "++++", "--to", "++++")
    assert out.splitlines() == ["()"]


def test_equal(capsys):
    base = ("equal", EX8, "--labeling", LABELS)
    assert run(capsys, *base, "--word-a", "s2.s1.s2.s1", "--word-b", "s1.s2.s1.s2")[1] == "equal\n"
    assert run(capsys, *base, "--word-a", "s1.s2", "--word-b", "s2.s1")[1] == "unequal\n"
    assert run(capsys, *base, "--word-a", "s1~.s1", "--word-b", "")[1] == "equal\n"
    code, out, _ = run(capsys, *base, "--word-a", "s1.s1.s2~.s2~", "--word-b", "s2~.s2~.s1.s1",
                       "--budget", "50")
    assert (code, out) == (3, "inconclusive\n")


def test_braid(capsys):
    code, out, _ = run(capsys, "braid", EX8, "--i", "1", "--j", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["m"] == 4 and data["equivalent"] is True
    assert run(capsys, "braid", A2, "--i", "1", "--j", "2")[1].startswith("m = 3")


def test_gfan_export_and_reconstruct(capsys, tmp_path):
    code, out, _ = run(capsys, "gfan", "export", EX8, "--labeling", LABELS, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 2 and len(data["matrices"]) == 8
    assert data["matrices"][0]["rows"] == [[1, 0], [0, 1]]
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"dim": 2, "matrices": [m["rows"] for m in data["matrices"]]}))
    code, out, _ = run(capsys, "gfan", "reconstruct", str(path), "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["complete"]
    assert sorted(map(tuple, rec["hyperplanes"])) == [(0, 1), (1, 0), (1, 1), (1, 2)]


def test_output_is_byte_stable(capsys):
    for argv in (["skeleton", EX8, "--dot"], ["verify", A2], ["gfan", "export", EX8]):
        first = run(capsys, *argv)[1]
        assert all(run(capsys, *argv)[1] == first for _ in range(3))
