import json
import subprocess
import sys

import pytest

from chromsym.cli import main
from chromsym.suites import (
    census,
    fibonacci,
    fibonacci_offset,
    path_root_prediction,
    run_suite,
    suite_ordering_invariance,
    suite_unit_interval,
)


def run(capsys, *argv):
    code = main([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_csf_command(capsys):
    code, out = run(capsys, "csf", "--graph", '{"n":3,"edges":[[1,2],[2,3]]}', "--basis", "s")
    assert code == 0
    assert out["terms"] == [{"key": [2, 1], "coeff": "1"}, {"key": [1, 1, 1], "coeff": "4"}]
    assert out["nonnegative"] is True


def test_pointed_command(capsys):
    code, out = run(capsys, "pointed", "--graph", "P_2", "--root", "1")
    assert code == 0
    assert out["terms"] == [{"key": {"mu": [1], "k": 0}, "coeff": "1"}, {"key": {"mu": [], "k": 1}, "coeff": "-1"}]


def test_expand_command(capsys, tmp_path):
    code, out = run(capsys, "expand", "--graph", "P_2", "--root", "1", "--basis", "pointed-schur")
    assert out["terms"] == [{"lambda": [1, 1], "i": 1, "coeff": "1"}] and out["nonnegative"]
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"basis": "p", "terms": [{"key": [2], "coeff": "1"}]}))
    code, out = run(capsys, "expand", "--file", str(f), "--basis", "s")
    assert code == 0 and out["nonnegative"] is False and out["witness"] == [1, 1]


def test_spectrum_command(capsys):
    code, out = run(capsys, "spectrum", "--graph", "P_2")
    assert code == 0 and out["operator"] == "forest"
    assert out["semistable"] and out["semidefinite"] and out["diagonalizable"]
    assert [b["charpoly"] for b in out["blocks"]] == [["0", "1"], ["-4", "1"]]
    code, out = run(capsys, "spectrum", "--graph", "P_4", "--order", "[[1,2],[2,3],[3,4]]")
    assert out["diagonalizable"] is False
    code, out = run(capsys, "spectrum", "--graph", "K_3")
    assert out["operator"] == "chordal"


def test_fgl_command(capsys, tmp_path):
    code, out = run(capsys, "fgl", "--sequence", "permutations-ogf", "--degree", "5", "--basis", "s")
    assert code == 0 and out["nonnegative"]
    f = tmp_path / "seq.json"
    f.write_text(json.dumps({"sequence": [1, 2, 6, 24, 120], "kind": "ogf"}))
    code, out2 = run(capsys, "fgl", "--file", str(f), "--degree", "5")
    assert out2["terms"] == out["terms"]


def test_usage_errors(capsys):
    assert main(["csf"]) == 1
    assert main(["csf", "--graph", "{bad"]) == 1
    assert main(["pointed", "--graph", "P_3"]) == 1
    assert main(["expand", "--graph", "P_3", "--basis", "pointed-e"]) == 1
    assert main(["fgl", "--sequence", "permutations-ogf", "--degree", "9"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["csf", "--basis", "q"])
    assert exc.value.code == 1


def test_console_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "chromsym", "verify", "ordering-invariance", "--max-n", "3", "--json"], capture_output=True, text=True)
    assert ok.returncode == 0 and json.loads(ok.stdout)["ok"]
    bad = subprocess.run([sys.executable, "-m", "chromsym", "nope"], capture_output=True, text=True)
    assert bad.returncode == 1


def test_verify_failure_exit_code(monkeypatch, capsys):
    import chromsym.cli as cli

    failing = {"suite": "x", "items": [{"name": "a", "ok": False, "optional": False, "kind": "check"}], "ok": False}
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: failing)
    assert main(["verify", "fgl-positivity"]) == 2
    capsys.readouterr()


def test_census_command(capsys):
    code, out = run(capsys, "census", "--max-n", "5")
    assert code == 0
    assert [r["counts"]["unlabeled_trees"] for r in out["rows"]] == [1, 1, 1, 1, 2]


def test_verify_is_deterministic():
    a = run_suite("forest-operator", max_n=5)
    b = run_suite("forest-operator", max_n=5)
    assert json.dumps(a) == json.dumps(b)
    assert "seconds" not in a
    assert "seconds" in run_suite("fgl-positivity", timing=True)


def test_ordering_invariance_p4():
    import itertools

    from chromsym.graphs import path
    from chromsym.group_algebra import identity_coeff_powers

    g = path(4)
    seqs = {tuple(identity_coeff_powers(g, order, 10)) for order in itertools.permutations(g.edges)}
    assert len(seqs) == 1
    report = suite_ordering_invariance(max_n=4)
    assert report["ok"] and all(x["ok"] for x in report["items"])


def test_unit_interval_n3():
    report = suite_unit_interval(max_n=3)
    assert sum(x["name"].startswith("m=[") and len(json.loads(x["name"][2:])) == 3 for x in report["items"]) == 5
    assert report["ok"]


def test_census_values():
    data = census(6)
    row4 = data["rows"][3]
    # the star on four vertices has a negative eigenvalue, so only the path counts
    assert row4["trees"] == 2 and row4["counts"]["unlabeled_trees"] == 1
    assert data["fibonacci_offset"]["unlabeled_forests"] == 1
    assert [fibonacci(k) for k in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
    assert fibonacci_offset([1, 2, 3, 5, 8]) == 1
    assert fibonacci_offset([1, 4]) is None


def test_path_root_prediction():
    assert path_root_prediction(4, 2) and not path_root_prediction(6, 2)
    assert path_root_prediction(5, 3) and path_root_prediction(4, 3) and not path_root_prediction(7, 2)
    assert path_root_prediction(6, 4) and not path_root_prediction(7, 4)
    assert path_root_prediction(1, 1) and path_root_prediction(2, 2)


def test_suite_items_have_witness_on_failure():
    for name in ("fibonacci-census", "path-root-pattern"):
        report = run_suite(name, max_n=5)
        assert report["ok"]
        for item in report["items"]:
            if not item["ok"]:
                assert item["optional"] and "detail" in item
