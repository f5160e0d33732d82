import json
import subprocess
import sys

import pytest

from simperm.cli import EXIT_CAP, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "4") == (EXIT_OK, "2 4 1 3\n3 1 4 2\n")
    assert run(capsys, "enumerate", "6", "--count-only") == (EXIT_OK, "46\n")
    assert run(capsys, "enumerate", "3", "--count-only") == (EXIT_OK, "0\n")
    code, out = run(capsys, "enumerate", "5", "--format", "json")
    assert len(json.loads(out)) == 6


def test_chain(capsys):
    code, out = run(capsys, "chain", "5 2 6 3 7 1 4", "3 1 4 2")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 4 and lines[-1] == "3 1 4 2"


def test_chain_not_a_pattern(capsys):
    assert run(capsys, "chain", "246135", "3142")[0] == EXIT_USAGE


def test_closure_json(capsys):
    code, out = run(capsys, "closure", "2 7 4 8 1 6 3 5", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK
    assert sum(len(v) for v in doc["levels"].values()) == 22
    assert doc["exceptional_edges"] == [["2 4 6 1 3 5", "2 4 1 3"]]


def test_closure_dot_to_file(tmp_path, capsys):
    target = tmp_path / "fig.dot"
    assert run(capsys, "closure", "27481635", "-o", str(target)) == (EXIT_OK, "")
    assert target.read_text().startswith("digraph patterns {")


def test_poset_deterministic(capsys):
    first = run(capsys, "poset", "6", "--format", "json")
    second = run(capsys, "poset", "6", "--format", "json")
    assert first == second and first[0] == EXIT_OK
    doc = json.loads(first[1])
    assert [len(doc["levels"][k]) for k in ("4", "5", "6")] == [2, 6, 46]


def test_stats(capsys):
    code, out = run(capsys, "stats", "6")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "n,s_n,k,S_n_k,D_n_num,D_n_den"
    assert "6,46,0,4,36,23" in out.splitlines()


@pytest.fixture
def basis_file(tmp_path):
    def make(*lines):
        path = tmp_path / "basis.txt"
        path.write_text("\n".join(lines) + "\n")
        return str(path)
    return make


def test_wreath_terminates(capsys, basis_file):
    code, out = run(capsys, "wreath", "--basis", basis_file("# finite", "2 4 1 3", "", "3 1 4 2"))
    assert code == EXIT_OK
    assert "# size 4: 0" in out and out.rstrip().endswith("# terminated")


def test_wreath_cap_reached(capsys, basis_file):
    code, out = run(capsys, "wreath", "--basis", basis_file("3 1 4 2"), "--cap", "6", "--out", "json")
    doc = json.loads(out)
    assert code == EXIT_CAP and doc["terminated"] is False
    assert doc["levels"]["5"] == ["2 5 3 1 4"]


def test_wreath_general(capsys, basis_file):
    code, out = run(capsys, "wreath", "--basis", basis_file("1 3 2"), "--cap", "6", "--general", "--out", "json")
    assert code == EXIT_OK and json.loads(out)["levels"]["4"] == []


def test_wreath_usage_errors(capsys, basis_file):
    assert run(capsys, "wreath", "--basis", basis_file("1 3 2"))[0] == EXIT_USAGE
    assert run(capsys, "wreath", "--basis", basis_file("1 3 2"), "--general")[0] == EXIT_USAGE
    assert run(capsys, "wreath", "--basis", "/nonexistent/basis")[0] == EXIT_USAGE


def test_verify(capsys):
    code, out = run(capsys, "verify", "--property", "indegree", "--max-n", "6")
    assert code == EXIT_OK and "indegree: sizes 4..6" in out and "ok" in out
    code, out = run(capsys, "verify", "--property", "unique-insertion", "--max-n", "5", "--json")
    assert json.loads(out)[0]["ok"] is True


def test_verify_counterexample_exit(capsys, monkeypatch):
    import simperm.oracle as oracle

    monkeypatch.setattr(oracle, "naive_extensions", lambda p: {})
    assert run(capsys, "verify", "--property", "indegree", "--max-n", "5")[0] == EXIT_COUNTEREXAMPLE


def test_verify_list(capsys):
    code, out = run(capsys, "verify", "--list")
    assert code == EXIT_OK and "exceptional-bridge" in out


def test_exceptional(capsys):
    assert run(capsys, "exceptional", "--type", "4", "--m", "5") == (EXIT_OK, "5 10 4 9 3 8 2 7 1 6\n")
    assert run(capsys, "exceptional", "--type", "1", "--m", "1")[0] == EXIT_USAGE


@pytest.mark.parametrize("argv", [[], ["enumerate"], ["enumerate", "x"], ["chain", "2 2 1", "1"],
                                  ["verify", "--all", "--property", "indegree"], ["exceptional", "--type", "5", "--m", "2"]])
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_USAGE


def test_help_documents_format(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "one-line notation" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "simperm", "enumerate", "5", "--count-only"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "6\n"
