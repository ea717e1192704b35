import json
import subprocess
import sys

import pytest

from zdgraph.cli import main


def test_build_dot(tmp_path, capsys):
    out = tmp_path / "g.dot"
    assert main(["build", "--d", "1", "--case", "gamma2", "--n", "1", "--dot", str(out)]) == 0
    text = out.read_text()
    assert text.count("[label=") == 8


def test_build_json(tmp_path):
    out = tmp_path / "g.json"
    assert main(["build", "--d", "0", "--case", "gamma1", "--n", "1", "--json", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["vertices"]) == 4
    edges = {tuple(sorted(a)) for a in doc["arcs"]}
    assert len(edges) == 4
    assert all(doc["verdicts"].values())
    assert doc["config"]["d"] == 0


def test_build_is_byte_identical(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        main(["build", "--d", "3", "--case", "full", "--level", "1", "--box", "1", "--json", str(p),
              "--dot", str(p.with_suffix(".dot"))])
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].with_suffix(".dot").read_bytes() == paths[1].with_suffix(".dot").read_bytes()


@pytest.mark.parametrize("argv", [
    ["build", "--d", "4", "--case", "gamma1", "--n", "1"],
    ["build", "--d", "2", "--case", "gamma1", "--n", "0"],
    ["jordan", "--d", "2", "--nmax", "2"],
    ["verify", "--d", "8", "--n", "1"],
])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_pass(capsys):
    assert main(["verify", "--d", "3", "--n", "1"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_d1_n2_alpha(capsys):
    assert main(["verify", "--d", "1", "--n", "2", "-v"]) == 0
    assert "PASS gamma2(n=2) independence: expected 9, computed 9" in capsys.readouterr().out


def test_verify_negative_control(capsys):
    assert main(["verify", "--d", "2", "--n", "1", "--drop-edge"]) == 1
    out = capsys.readouterr().out
    assert "FAIL gamma2(n=1) degree_sequence" in out


def test_verify_json(tmp_path):
    p = tmp_path / "v.json"
    assert main(["verify", "--d", "2", "1", "--n", "1", "--json", str(p)]) == 0
    assert [r["d"] for r in json.loads(p.read_text())] == [2, 1]


def test_jordan(capsys):
    assert main(["jordan", "--d", "2", "--nmax", "4"]) == 0
    out = capsys.readouterr().out
    assert "bound=360" in out and "bound=20160" in out
    assert main(["jordan", "--d", "3", "--nmax", "3"]) == 0
    assert "bound=360" in capsys.readouterr().out


def test_budget_exit_code(monkeypatch):
    import zdgraph.cli as cli
    from zdgraph.errors import ResourceBudgetExceeded

    def boom(*a, **k):
        raise ResourceBudgetExceeded("too big", 1)

    monkeypatch.setattr(cli, "verify", boom)
    assert main(["verify", "--d", "2", "--n", "1"]) == 3


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "zdgraph", "jordan", "--d", "2", "--nmax", "3"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "bound=360" in res.stdout
