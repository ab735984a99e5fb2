from __future__ import annotations

import json

import pytest

from posetshell.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_enumerate_counts(capsys):
    code, out = run(capsys, "enumerate", "--poset", "partial-involutions", "--n", "3")
    assert code == 0 and out.startswith("partial-involutions n=3: 14 elements")
    code, out = run(capsys, "enumerate", "--poset", "rooks", "--n", "3", "--k", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "poset-shell/1" and doc["count"] == doc["expected_count"] == 18
    code, out = run(capsys, "enumerate", "--poset", "rooks", "--n", "0")
    assert code == 0 and out.splitlines() == ["rooks n=0: 1 elements (expected 1)", "()"]


def test_enumerate_cap(capsys):
    with pytest.raises(SystemExit) as e:
        main(["enumerate", "--poset", "rooks", "--n", "7"])
    assert e.value.code == 2


def test_usage_errors_exit_2():
    for argv in (["bogus"], ["check", "el"], ["check", "nope", "--n", "3"],
                 ["enumerate", "--n", "3", "--k", "5"], ["enumerate", "--n", "3", "--format", "dot"],
                 ["check", "el", "--n", "3", "--poset", "rooks"], ["check", "el", "--n", "6"]):
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 2, argv


def test_hasse_dot_p3(capsys):
    code, out = run(capsys, "hasse", "--poset", "partial-involutions", "--n", "3", "--format", "dot")
    assert code == 0
    assert sum(1 for line in out.splitlines() if "[label=" in line and "->" not in line) == 14
    assert out.count("->") == 23 and out.count("fontcolor=red") == 23
    assert 'label="(3,3)"' in out


def test_hasse_highlight_r3(capsys):
    code, out = run(capsys, "hasse", "--poset", "rooks", "--n", "3", "--highlight-embedding",
                    "--format", "json")
    doc = json.loads(out)
    assert len(doc["elements"]) == 34 and len(doc["highlight"]) == 24
    code, out = run(capsys, "hasse", "--poset", "rooks", "--n", "3", "--highlight-embedding",
                    "--format", "dot")
    assert out.count("color=blue") == 58


def test_hasse_single_element(capsys):
    code, out = run(capsys, "hasse", "--poset", "rooks", "--n", "0", "--format", "json")
    doc = json.loads(out)
    assert len(doc["elements"]) == 1 and doc["edges"] == []


def test_check_el(capsys):
    code, out = run(capsys, "check", "el", "--n", "3")
    assert code == 0 and out.startswith("check el: PASS")
    code, out = run(capsys, "check", "el", "--n", "4", "--poset", "involutions", "--format", "json")
    assert code == 0 and json.loads(out)["intervals"] == 35


def test_check_el_reports_violations(capsys):
    code, out = run(capsys, "check", "el", "--n", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 1 and not doc["pass"] and len(doc["violations"]) == 8


def test_check_eulerian(capsys):
    code, out = run(capsys, "check", "eulerian", "--n", "4", "--all-k", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    verdicts = [(r["poset"], r["k"], r["eulerian"]) for r in doc["layers"]]
    assert verdicts == [(p, k, k >= 3) for p in ("rooks", "partial-involutions") for k in (1, 2, 3, 4)]


def test_check_iso(capsys):
    code, out = run(capsys, "check", "iso", "--n", "3", "--side", "involutions")
    assert code == 0 and "check iso: PASS" in out
    code, out = run(capsys, "check", "iso", "--n", "3", "--format", "json")
    assert [m["side"] for m in json.loads(out)["maps"]] == ["rooks", "involutions"]


def test_check_covers_shelling_mobius(capsys):
    assert run(capsys, "check", "covers", "--n", "4")[0] == 0
    assert run(capsys, "check", "shelling", "--n", "3")[0] == 0
    assert run(capsys, "check", "mobius-cross", "--n", "3")[0] == 0


def test_out_file(tmp_path, capsys):
    target = tmp_path / "p2.dot"
    code, out = run(capsys, "hasse", "--n", "2", "--format", "dot", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith('digraph "P_2"')


@pytest.mark.parametrize("argv", [
    ["check", "el", "--n", "4"],
    ["check", "eulerian", "--n", "4"],
    ["check", "covers", "--n", "3"],
    ["check", "iso", "--n", "3"],
    ["check", "shelling", "--n", "3"],
    ["check", "mobius-cross", "--n", "3"],
])
@pytest.mark.parametrize("fmt", ["text", "json"])
def test_output_independent_of_jobs(capsys, argv, fmt):
    a = run(capsys, *argv, "--format", fmt, "--jobs", "1")
    b = run(capsys, *argv, "--format", fmt, "--jobs", "4")
    assert a == b
