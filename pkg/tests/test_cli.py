import json

import jsonschema
import pytest

from sharpsets.cli import main, shipped_group_path


def load_schema():
    from importlib import resources

    with resources.files("sharpsets").joinpath("report_schema.json").open() as fh:
        return json.load(fh)


SCHEMA = load_schema()


def run_cli(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--out", str(out)])
    report = json.loads(out.read_text()) if out.exists() else None
    return code, report


def test_verify_alt_refuted(tmp_path):
    code, report = run_cli(tmp_path, "verify", "alt", "--n", "6")
    assert code == 0
    assert report["conclusion"] == "refuted"
    jsonschema.validate(report, SCHEMA)


def test_verify_alt_gate_still_exits_zero(tmp_path):
    code, report = run_cli(tmp_path, "verify", "alt", "--n", "5")
    assert code == 0
    assert report["conclusion"] == "hypothesis-not-met"
    jsonschema.validate(report, SCHEMA)


def test_design_check_report(tmp_path):
    code, report = run_cli(tmp_path, "design-check", "--v", "7", "--k", "3", "--lambda", "1")
    assert code == 0
    assert report["conclusion"] == "refuted"
    assert report["steps"][0]["ok"] is False
    jsonschema.validate(report, SCHEMA)


def test_design_check_trivial(tmp_path):
    code, report = run_cli(tmp_path, "design-check", "--v", "4", "--k", "3", "--lambda", "2")
    assert code == 0
    assert report["conclusion"] == "trivial-inapplicable"
    jsonschema.validate(report, SCHEMA)


def test_search_sharp_report(tmp_path):
    code, report = run_cli(tmp_path, "search-sharp", "--group", str(shipped_group_path("c5")), "--t", "1")
    assert code == 0
    assert report["status"] == "found"
    assert report["witness"] == [0, 1, 2, 3, 4]
    jsonschema.validate(report, SCHEMA)


def test_linsys_report(tmp_path):
    code, report = run_cli(tmp_path, "linsys", "--group", str(shipped_group_path("c5")), "--ring", "z")
    assert code == 0
    assert report["status"] == "solvable"
    assert report["witness"] == [1, 1, 1, 1, 1]
    jsonschema.validate(report, SCHEMA)


def test_linsys_fp_needs_p(tmp_path):
    with pytest.raises(SystemExit):
        main(["linsys", "--group", str(shipped_group_path("c5")), "--ring", "f_p"])


def test_linsys_probe_and_export(tmp_path):
    export = tmp_path / "system.txt"
    code, report = run_cli(
        tmp_path,
        "linsys",
        "--group",
        str(shipped_group_path("c5")),
        "--ring",
        "z",
        "--probe",
        "keep=5,trials=3,seed=1",
        "--export-system",
        str(export),
    )
    assert code == 0
    assert report["status"] == "solvable"
    assert export.read_text().splitlines()[0] == "25 5"
    jsonschema.validate(report, SCHEMA)


def test_verify_m22_family_report(tmp_path):
    code, report = run_cli(tmp_path, "verify", "m22")
    assert code == 0
    assert report["conclusion"] == "refuted"
    assert report["B_size"] == 7 and report["C_size"] == 15 and report["p"] == 2
    assert set(report["spectrum"]) == {"0", "4", "6"}
    jsonschema.validate(report, SCHEMA)


def test_verify_mclaughlin_report_and_export(tmp_path):
    graph_path = tmp_path / "mcl.graph"
    code, report = run_cli(tmp_path, "verify", "mclaughlin", "--export-graph", str(graph_path))
    assert code == 0
    assert report["conclusion"] == "refuted"
    assert graph_path.read_text().splitlines()[0] == "275"
    jsonschema.validate(report, SCHEMA)


def test_verify_sp_report(tmp_path):
    code, report = run_cli(tmp_path, "verify", "sp", "--n", "2", "--q", "2")
    assert code == 0
    assert report["conclusion"] == "refuted"
    assert set(report["spectrum"]) <= {"0", "2"}
    jsonschema.validate(report, SCHEMA)


def test_verify_m23_report(tmp_path):
    code, report = run_cli(tmp_path, "verify", "m23")
    assert code == 0
    assert report["mode"] == "reduction"
    jsonschema.validate(report, SCHEMA)


def test_selftest_ok(tmp_path):
    code, report = run_cli(tmp_path, "selftest")
    assert code == 0
    assert report["conclusion"] == "ok"
    jsonschema.validate(report, SCHEMA)


def test_missing_group_file_exit_3(tmp_path, capsys):
    code = main(["search-sharp", "--group", str(tmp_path / "nope.grp"), "--t", "1"])
    assert code == 3


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "alt", "--bogus"])
    assert exc.value.code == 2


def test_reports_byte_identical_modulo_timing(tmp_path):
    def strip(path):
        data = json.loads(path.read_text())
        data.pop("elapsed_ms")
        return json.dumps(data, sort_keys=True)

    runs = [
        ["verify", "alt", "--n", "6"],
        ["verify", "sp", "--n", "2", "--q", "2"],
        ["linsys", "--group", str(shipped_group_path("c5")), "--ring", "z",
         "--probe", "keep=4,trials=5,seed=9"],
    ]
    for i, argv in enumerate(runs):
        out1 = tmp_path / f"a{i}.json"
        out2 = tmp_path / f"b{i}.json"
        main([*argv, "--out", str(out1)])
        main([*argv, "--out", str(out2)])
        assert strip(out1) == strip(out2), argv


def test_verify_sp_modulus_override(tmp_path):
    code, report = run_cli(tmp_path, "verify", "sp", "--n", "2", "--q", "2", "--modulus", "3")
    assert code == 0
    assert report["conclusion"] == "refuted"


def test_export_design_matches_construction(tmp_path):
    design_path = tmp_path / "w23.dsn"
    code, report = run_cli(tmp_path, "verify", "m22", "--export-design", str(design_path))
    assert code == 0
    from sharpsets import designs

    again = designs.read_design(design_path)
    assert again.v == 23 and again.k == 7 and again.b == 253
