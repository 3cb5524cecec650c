import json
import subprocess
import sys

from tlj.cli import main
from tlj.nets import theta_net
from tlj.skein import read_spine


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_jw(capsys):
    code, out, _ = run(capsys, "jw", "--n", "2")
    assert code == 0
    assert out.strip() == "-(q)/(1 + q^2) * U_1 + id"
    code, out, _ = run(capsys, "jw", "--n", "2", "--pairs")
    # points are numbered bottom first, then top
    assert out.strip() == "-(q)/(1 + q^2) * [(0,1),(2,3)] + [(0,2),(1,3)]"


def test_jw_json_and_root(capsys):
    code, out, _ = run(capsys, "--json", "jw", "--n", "3")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 3 and doc["root"] is None
    assert len(doc["terms"]) == 5
    code, out, _ = run(capsys, "jw", "--n", "2", "--root", "4", "--json")
    assert json.loads(out)["root"] == 4


def test_theta(capsys):
    code, out, _ = run(capsys, "theta", "--a", "1", "--b", "1", "--c", "2")
    assert code == 0 and out.strip() == "q^-2 + 1 + q^2"
    # [3] vanishes at n = 3
    code, out, _ = run(capsys, "theta", "--a", "1", "--b", "1", "--c", "2", "--root", "3")
    assert out.strip() == "0"


def test_theta_inadmissible_is_usage_error(capsys):
    code, _, err = run(capsys, "theta", "--a", "1", "--b", "1", "--c", "1")
    assert code == 2 and "NotAdmissible" in err


def test_net_eval(tmp_path, capsys):
    f = tmp_path / "theta.json"
    f.write_text(json.dumps(theta_net(1, 1, 2).to_json()))
    code, out, _ = run(capsys, "net", "eval", str(f))
    assert code == 0 and out.strip() == "q^-2 + 1 + q^2"
    code, out, _ = run(capsys, "--json", "net", "eval", str(f), "--root", "4")
    # [3] = sin(3 pi/4) / sin(pi/4) = 1
    assert json.loads(out)["value"] == "1"


def test_net_eval_errors(tmp_path, capsys):
    code, _, err = run(capsys, "net", "eval", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "net", "eval", str(bad))[0] == 2


def test_fuse(capsys):
    code, out, _ = run(capsys, "fuse", "--a", "1", "--b", "1")
    assert code == 0
    assert out.splitlines() == ["0: (q)/(1 + q^2)", "2: 1"]
    code, out, _ = run(capsys, "fuse", "--a", "1", "--b", "1", "--root", "3")
    assert out.splitlines() == ["0: 1"]
    code, _, err = run(capsys, "fuse", "--a", "2", "--b", "1", "--root", "3")
    assert code == 2 and "LabelOutOfRange" in err


def test_sixj(capsys):
    code, out, _ = run(capsys, "sixj", "--a", "1", "--b", "1", "--i", "2", "--c", "1", "--d", "1", "--j", "0")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(
        capsys, "--json", "sixj", "--a", "1", "--b", "1", "--i", "0", "--c", "1", "--d", "1", "--j", "0"
    )
    assert json.loads(out)["value"] == "(q)/(1 + q^2)"


def test_skein_dim_and_basis(capsys):
    code, out, _ = run(capsys, "skein", "dim", "two_holed_theta", "--root", "3")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "skein", "dim", "examples/two_holed_dumbbell.json", "--root", "3")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "skein", "basis", "two_holed_dumbbell", "--root", "3")
    assert out.splitlines() == ["0 0 0", "0 0 1", "0 1 0", "0 1 1"]
    code, out, _ = run(capsys, "skein", "dim", "annulus", "--root", "6", "--json")
    assert json.loads(out)["dimension"] == 5


def test_skein_spine_file(tmp_path, capsys):
    f = tmp_path / "s.json"
    f.write_text(json.dumps(read_spine("two_holed_theta").to_json()))
    code, out, _ = run(capsys, "skein", "dim", str(f), "--root", "4")
    # q-admissible triples with labels <= 2: 1 + 3 + 3 + 3
    assert code == 0 and out.strip() == "10"


def test_skein_boundary(capsys):
    code, out, _ = run(capsys, "skein", "dim", "four_point_disk", "--root", "4")
    assert out.strip() == "2"
    zeros = json.dumps({str(e): 0 for e in read_spine("four_point_disk").boundary_edges()})
    code, out, _ = run(capsys, "skein", "dim", "four_point_disk", "--root", "4", "--boundary", zeros)
    assert out.strip() == "1"
    code, out, _ = run(capsys, "skein", "dim", "four_point_disk", "--root", "3", "--sum-boundary")
    # middle label 0 or 1, then two choices at each vertex
    assert code == 0 and out.strip() == "8"
    code, _, err = run(capsys, "skein", "dim", "four_point_disk", "--root", "4", "--boundary", "[1]")
    assert code == 2


def test_skein_hi(capsys):
    code, out, _ = run(capsys, "skein", "hi", "two_holed_dumbbell", "--edge", "0", "--root", "3")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 4 and all(r.startswith("[") and r.count(",") == 3 for r in rows)
    code, out, _ = run(capsys, "--json", "skein", "hi", "two_holed_dumbbell", "--edge", "0", "--root", "3")
    doc = json.loads(out)
    assert len(doc["matrix"]) == 4 and len(doc["source"]) == 4
    code, _, err = run(capsys, "skein", "hi", "two_holed_dumbbell", "--edge", "1", "--root", "3")
    assert code == 2 and "InvalidEdge" in err
    assert run(capsys, "skein", "hi", "two_holed_dumbbell", "--root", "3")[0] == 2


def test_skein_transport(tmp_path, capsys):
    moves = tmp_path / "moves.json"
    moves.write_text(json.dumps([{"edge": 0, "orient": 0}, {"edge": 0, "orient": 1}]))
    code, out, _ = run(capsys, "skein", "transport", "two_holed_theta", "--moves", str(moves), "--root", "4")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 10
    for i, r in enumerate(rows):
        cells = r.strip("[]").split(", ")
        assert cells == ["1" if j == i else "0" for j in range(10)]
    code, out, _ = run(
        capsys, "--json", "skein", "transport", "two_holed_theta", "--moves", '[{"edge": 0}]', "--root", "3"
    )
    doc = json.loads(out)
    assert doc["moves"] == [{"edge": 0, "orient": 0}]
    assert "vertices" in doc["target_spine"]


def test_skein_requires_root(capsys):
    assert run(capsys, "skein", "dim", "annulus")[0] == 2
    code, _, err = run(capsys, "skein", "dim", "annulus", "--root", "1")
    assert code == 2 and "--root" in err
    code, _, err = run(capsys, "skein", "dim", "no_such_spine", "--root", "3")
    assert code == 2 and "no_such_spine" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    code, _, err = run(capsys, "jw", "--n", "-1")
    assert code == 2 and "non-negative" in err
    assert run(capsys, "jw", "--n", "two")[0] == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "jw", "--max-n", "6")
    assert code == 0 and out.strip().endswith("all passed")
    code, out, _ = run(capsys, "verify", "theta", "--max-label", "5")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "--json", "verify", "skein", "--root", "3")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    names = [c["name"] for c in doc["checks"]]
    assert "skein.doubly_holed_dim4" in names and names == sorted(names)


def test_verify_failure_exit_code(capsys, monkeypatch):
    import tlj.verify as verify_mod
    from tlj.diagram import identity

    # the identity is not killed by caps once n >= 2
    monkeypatch.setattr(verify_mod, "jw", lambda n, root=None: identity(n))
    code, out, _ = run(capsys, "verify", "jw", "--max-n", "3")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "--json", "skein", "hi", "two_holed_theta", "--edge", "0", "--root", "4")[1]
    second = run(capsys, "--json", "skein", "hi", "two_holed_theta", "--edge", "0", "--root", "4")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tlj", "theta", "--a", "1", "--b", "1", "--c", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "q^-2 + 1 + q^2"
    proc = subprocess.run([sys.executable, "-m", "tlj", "jw"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "--n" in proc.stderr
