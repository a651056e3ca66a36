import io
import json
import subprocess
import sys

import pytest

from dspringer import cli
from dspringer.verify import Check


def run_json(*argv):
    buf = io.StringIO()
    code = cli.run(list(argv), out=buf)
    return code, (json.loads(buf.getvalue()) if buf.getvalue() else None)


def test_union_example():
    code, doc = run_json("union", "--n", "5", "--pairs", "2,3", "4,4")
    assert code == 0
    assert doc["schema"] == "1" and doc["verb"] == "union"
    assert doc["coeffs"] == ["1", "5", "14", "26", "35", "36", "28", "16", "6", "1"]
    assert doc["dyck_sum"] == ["1", "2", "3", "1"]
    assert doc["oracle_agrees"] is True


def test_components_example():
    code, doc = run_json("components", "--n", "4", "--s", "3")
    assert code == 0
    assert sorted(r["word"] for r in doc["components"]) == ["3216", "3261", "3621"]
    assert len(doc["components"]) == 3


def test_verify_example():
    code, doc = run_json("verify", "--n", "3", "--p", "2")
    assert code == 0
    assert doc["status"] == "PASS"
    assert all(c["status"] == "PASS" for c in doc["checks"])
    names = " ".join(c["check"] for c in doc["checks"])
    for part in ("dyck", "hilbert", "osp", "point_counts", "classification"):
        assert part in names


def test_verify_skew_skips_straight_only_checks():
    code, doc = run_json("verify", "--n", "3", "--s", "4", "--p", "2")
    assert code == 0
    assert not any("hilbert" in c["check"] for c in doc["checks"])


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setattr(cli, "run_verify",
                        lambda *a, **k: [Check("forced", False, {"why": "test"})])
    code, doc = run_json("verify", "--n", "3")
    assert code == 1
    assert doc["status"] == "FAIL"
    assert doc["checks"][0]["detail"] == {"why": "test"}


@pytest.mark.parametrize("argv", [
    ["union", "--n", "5", "--pairs", "1,3"],
    ["union", "--n", "5", "--s", "6", "--pairs", "1,3"],
    ["hilbert", "--n", "3", "--i", "1"],
    ["hilbert", "--n", "3", "--s", "4", "--i", "2"],
    ["classify", "--n", "3"],
    ["components", "--n", "4", "--s", "2"],
    ["pointcount", "--n", "3", "--p", "4"],
    ["nonsense"],
    ["components"],
])
def test_invalid_arguments_exit_2(argv, capsys):
    assert cli.run(argv, out=io.StringIO()) == 2


def test_budget_exit_3():
    code, doc = run_json("pointcount", "--n", "4", "--budget", "5")
    assert code == 3 and doc is None


def test_other_verbs():
    code, doc = run_json("fillings", "--n", "3", "--s", "3")
    assert code == 0 and doc["count"] == 12
    code, doc = run_json("classify", "--n", "4", "--i", "3")
    assert doc["count"] == 24 and doc["membership_agrees"]
    code, doc = run_json("poincare", "--n", "4", "--i", "3")
    assert doc["results"][0]["poincare"] == ["1", "4", "7", "7", "4", "1"]
    assert doc["results"][0]["dimension"] == 5
    code, doc = run_json("intersect", "--n", "5", "--pairs", "2,3", "4")
    assert doc["pair"] == [2, 4]
    code, doc = run_json("poset", "--n", "4", "--pairs", "2,4", "3")
    assert doc["compare"] == {"a": [2, 4], "b": [3, 3], "a_in_b": True, "b_in_a": False}
    assert len(doc["hasse"]) == 6
    code, doc = run_json("hilbert", "--n", "3", "--i", "2")
    assert doc["hilbert"] == ["1", "2", "1", "0"]
    assert set(doc["checks"].values()) == {"PASS"}
    code, doc = run_json("pointcount", "--n", "4", "--i", "3")
    assert doc["results"][0]["count"] == "189" and doc["results"][0]["agrees"]


def test_output_is_deterministic():
    a = io.StringIO()
    b = io.StringIO()
    cli.run(["poset", "--n", "5"], out=a)
    cli.run(["poset", "--n", "5"], out=b)
    assert a.getvalue() == b.getvalue()


def test_table_format():
    buf = io.StringIO()
    assert cli.run(["components", "--n", "4", "--format", "table"], out=buf) == 0
    text = buf.getvalue()
    assert "3621" in text and "schema: 1" in text


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "dspringer", "union", "--n", "5",
                          "--pairs", "2,3", "4,4"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["coeffs"][5] == "36"
