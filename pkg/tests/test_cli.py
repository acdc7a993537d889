"""Command line driver: outputs, file emission, exit codes, determinism."""

import json

import pytest

from sgcones.builders import fixture
from sgcones.cli import main
from sgcones.semigroup import from_table_text, to_table_text


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- verify text output ---------------------------------------------------------


def test_verify_b2_text(capsys):
    code, out, err = run(capsys, "verify", "--fixture", "b2")
    assert code == 0
    assert out.startswith(
        "input b2: order 5, regular=yes, inverse=yes, clifford=no, semilattice=no\n"
    )
    assert "|TL| = 7, |S| = 5" in out
    assert "theorem6           N-A " in out
    assert "cone-hom-law       PASS" in out
    assert "tl-wellformed      PASS" in out
    assert out.rstrip().endswith("result: OK")
    assert err == ""


def test_verify_cl5_rows(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "cl5")
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln and not ln.startswith(("input", "result"))]
    assert len(rows) == 11
    for ln in rows:
        if ln.startswith("semilattice-suite"):
            assert " N-A " in ln
            assert "input is not a semilattice" in ln
        else:
            assert " PASS " in ln, ln


def test_verify_chain3_semilattice_row(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "chain3")
    assert code == 0
    assert "semilattice-suite  PASS" in out
    assert "result: OK" in out


def test_verify_row_order_is_fixed(capsys):
    _, out, _ = run(capsys, "verify", "--fixture", "z2")
    names = [ln.split()[0] for ln in out.splitlines()[1:-1]]
    assert names == [
        "prop2", "prop3", "prop4", "prop5", "theorem6", "theorem7", "theorem8",
        "degeneration", "cone-hom-law", "tl-wellformed", "semilattice-suite",
    ]


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "b2", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["input"] == "b2"
    assert report["order"] == 5
    assert not report["clifford"]
    assert [r["check"] for r in report["checks"]][:4] == [
        "prop2", "prop3", "prop4", "prop5",
    ]
    statuses = {r["check"]: r["status"] for r in report["checks"]}
    assert statuses["cone-hom-law"] == "PASS"
    assert statuses["theorem6"] == "N-A"
    assert report["checks"][4]["report"]["tl_order"] == 7


def test_verify_is_deterministic(capsys):
    for name in ("b2", "s3", "chain4"):
        first = run(capsys, "verify", "--fixture", name, "--format", "text,json")
        second = run(capsys, "verify", "--fixture", name, "--format", "text,json")
        assert first == second


def test_verify_all_parallel_matches_serial(capsys):
    code1, serial, _ = run(capsys, "verify", "--fixture", "all")
    code2, parallel, _ = run(capsys, "verify", "--fixture", "all", "--jobs", "2")
    assert code1 == code2 == 0
    assert serial == parallel
    headers = [ln for ln in serial.splitlines() if ln.startswith("input ")]
    assert len(headers) == 33


# --- build ------------------------------------------------------------------------


def test_build_stdout_table_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--fixture", "b2")
    assert code == 0
    table_text, _, analysis = out.partition("order:")
    S = from_table_text(table_text)
    assert S == fixture("b2")
    assert "clifford: no" in "order:" + analysis


def test_build_json_analysis(capsys):
    code, out, _ = run(capsys, "build", "--fixture", "z3", "--format", "json")
    assert code == 0
    info = json.loads(out)
    assert info["order"] == 3
    assert info["clifford"] is True
    assert info["semilattice"] is False


def test_build_out_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--fixture", "z3", "--out", str(tmp_path))
    assert code == 0
    table = tmp_path / "z3.table.txt"
    analysis = tmp_path / "z3.analysis.json"
    assert table.exists() and analysis.exists()
    assert f"wrote {table}" in out
    assert from_table_text(table.read_text()) == fixture("z3")
    assert json.loads(analysis.read_text())["order"] == 3


def test_build_output_reingests_identically(capsys, tmp_path):
    # build output table fed back through --table gives the same analysis
    run(capsys, "build", "--fixture", "s3", "--out", str(tmp_path))
    code, out, _ = run(
        capsys, "build", "--table", str(tmp_path / "s3.table.txt"), "--format", "json"
    )
    assert code == 0
    _, direct, _ = run(capsys, "build", "--fixture", "s3", "--format", "json")
    assert json.loads(out) == json.loads(direct)


# --- category and cones -------------------------------------------------------------


def test_category_text(capsys):
    code, out, _ = run(capsys, "category", "--fixture", "cl5")
    assert code == 0
    assert "left category of cl5: 2 objects (0 2)" in out
    assert "right category of cl5: 2 objects (0 2)" in out
    assert "  inclusion: 2 in 0" in out
    assert "  hom 0 0: 0 1 2 3 4" in out


def test_category_dot_files(capsys, tmp_path):
    code, out, _ = run(
        capsys, "category", "--fixture", "chain3", "--format", "dot",
        "--out", str(tmp_path),
    )
    assert code == 0
    for side in ("L", "R"):
        path = tmp_path / f"chain3.{side}.dot"
        assert path.exists()
        assert "digraph" in path.read_text()


def test_cones_text_b2(capsys):
    code, out, _ = run(capsys, "cones", "--fixture", "b2")
    assert code == 0
    assert "cones over the left category of b2: 7" in out
    assert "  apex 1 components (0 1 3) not principal" in out
    assert "  apex 1 components (0 0 3) principal, a=3" in out


def test_cones_json(capsys):
    code, out, _ = run(capsys, "cones", "--fixture", "chain3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [c["apex"] for c in data["cones"]] == [0, 1, 2]
    assert all(c["principal"] for c in data["cones"])


# --- alternate inputs ------------------------------------------------------------------


def test_table_input(capsys, tmp_path):
    path = tmp_path / "mine.txt"
    path.write_text(to_table_text(fixture("b2")))
    code, out, _ = run(capsys, "verify", "--table", str(path))
    assert code == 0
    assert out.startswith("input mine:")
    assert "|TL| = 7, |S| = 5" in out


def test_slg_input(capsys, tmp_path):
    spec = {
        "semilattice": [[0, 1], [1, 1]],
        "groups": [[[0, 1], [1, 0]], [[0, 1, 2], [1, 2, 0], [2, 0, 1]]],
        "homs": [{"from": 0, "to": 1, "map": [0, 0]}],
    }
    path = tmp_path / "mix.json"
    path.write_text(json.dumps(spec))
    code, out, _ = run(capsys, "verify", "--slg", str(path))
    assert code == 0
    assert out.startswith("input mix: order 5")
    assert "clifford=yes" in out
    assert "result: OK" in out


# --- exit codes ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["verify", "--fixture", "nope"], "unknown fixture 'nope'"),
        (["build", "--fixture", "all"], "--fixture all is only supported by verify"),
        (["cones", "--fixture", "all"], "--fixture all is only supported by verify"),
        (["build", "--fixture", "z2", "--format", "dot"], "not available for build"),
        (["verify", "--fixture", "z2", "--budget", "0"], "--budget must be positive"),
        (["verify", "--fixture", "z2", "--jobs", "0"], "--jobs must be positive"),
        (["verify", "--table", "/does/not/exist.txt"], "No such file"),
    ],
)
def test_exit_2_inputs(capsys, argv, fragment):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert fragment in err
    assert err.startswith("error:")


def test_exit_2_bad_slg_names_json_path(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"semilattice": [[0]], "groups": [[[0]]],'
        ' "homs": [{"from": 0, "to": 0, "map": [9]}]}'
    )
    code, _, err = run(capsys, "verify", "--slg", str(path))
    assert code == 2
    assert "homs[0].map" in err


def test_exit_2_unparseable_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "verify", "--slg", str(path))
    assert code == 2


def test_exit_3_budget(capsys):
    code, _, err = run(capsys, "verify", "--fixture", "s3", "--budget", "2")
    assert code == 3
    assert "budget exceeded" in err


def test_exit_4_on_genuine_failure(capsys, monkeypatch):
    import sgcones.cli as cli

    def broken(C):
        return {"name": "cone-hom-law", "passed": False, "pairs": 0, "witness": [0, 0]}

    monkeypatch.setattr(cli, "check_principal_homomorphism", broken)
    code, out, _ = run(capsys, "verify", "--fixture", "z2")
    assert code == 4
    assert "cone-hom-law       FAIL" in out
    assert "result: FAIL cone-hom-law" in out


# --- timing output ---------------------------------------------------------------------------


def test_timings_go_to_stderr_only(capsys):
    plain = run(capsys, "verify", "--fixture", "z2")
    timed_code, timed_out, timed_err = run(
        capsys, "verify", "--fixture", "z2", "--timings"
    )
    assert timed_code == 0
    assert timed_out == plain[1]
    assert "timing:" in timed_err
    assert plain[2] == ""
