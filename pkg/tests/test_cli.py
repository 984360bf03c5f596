"""Command-line interface: dispatch, formats, exit codes, byte stability."""

import json

from qproduct.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_csv(capsys):
    code, out, _ = run(capsys, "expand", "--s", "1", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "exponent,coefficient"
    assert len(lines) == 8
    assert lines[1] == "0,1" and lines[-1] == "6,-1"


def test_expand_json_decimal_strings(capsys):
    code, out, _ = run(capsys, "expand", "--s", "2", "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == ["1", "-2", "-1", "4", "-1", "-2", "1"]
    assert payload["degree"] == 6


def test_progsum_methods_agree(capsys):
    records = {}
    for method in ("oracle", "character", "trig"):
        code, out, _ = run(
            capsys, "progsum", "--s", "1", "--n", "4", "--N", "5", "--j", "0",
            "--method", method,
        )
        assert code == 0
        records[method] = json.loads(out)
    assert {r["value"] for r in records.values()} == {"4"}
    assert records["oracle"]["precision_bits"] == 0
    assert records["character"]["precision_bits"] >= 53
    assert set(records["oracle"]) >= {"s", "n", "N", "j", "value", "method", "precision_bits"}


def test_progsum_csv(capsys):
    code, out, _ = run(
        capsys, "progsum", "--s", "1", "--n", "4", "--N", "5", "--j", "1",
        "--format", "csv",
    )
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[:5] == ["s", "n", "N", "j", "value"]
    assert row.split(",")[4] == "-1"


def test_coeff(capsys):
    code, out, _ = run(capsys, "coeff", "--s", "1", "--n", "3", "--j", "6")
    assert code == 0
    assert json.loads(out)["value"] == "-1"


def test_coeff_character_method(capsys):
    code, out, _ = run(
        capsys, "coeff", "--s", "2", "--n", "3", "--j", "6", "--method", "character"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["method"] == "character"
    assert payload["value"] == "-6"


def test_verify_main1_passes(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "main1", "--smax", "1", "--nmax", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["checks"][0]["label"] == "main1"
    assert payload["checks"][0]["cases"] == 2 + 3 + 4 + 5


def test_verify_jacobi_conventions(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "jacobi", "--convention", "as-printed", "--max", "0"
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["passed"] is False
    assert payload["checks"][0]["failures"][0]["exponent"] == 0
    code, _, _ = run(
        capsys, "verify", "--theorem", "jacobi", "--convention", "standard", "--max", "12"
    )
    assert code == 0


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--smax", "1", "--nmax", "4")
    assert code == 0
    payload = json.loads(out)
    labels = [c["label"] for c in payload["checks"]]
    assert labels == [
        "main00", "main0000", "main000", "main0", "main1", "main00cor",
        "div1", "peak1", "tau", "maxpeak", "pentagonal", "jacobi", "hecke-rogers",
    ]
    assert payload["passed"] is True


def test_series_csv(capsys):
    code, out, _ = run(capsys, "series", "--name", "pentagonal", "--max", "5",
                       "--format", "csv")
    assert code == 0
    assert out.strip().splitlines() == [
        "exponent,coefficient", "0,1", "1,-1", "2,-1", "5,1",
    ]


def test_series_json_jacobi(capsys):
    code, out, _ = run(capsys, "series", "--name", "jacobi", "--max", "3",
                       "--convention", "standard")
    assert code == 0
    payload = json.loads(out)
    assert payload["convention"] == "standard"
    assert payload["terms"][-1] == {"exponent": 3, "coefficient": "5"}


def test_tau_rows(capsys):
    code, out, _ = run(capsys, "tau", "--n", "2")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert rows[0]["value"] == str(2 * 3**23)
    assert rows[1]["value"] == str(-(3**23))


def test_kconst(capsys):
    code, out, _ = run(capsys, "kconst")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["value"] - payload["K_ref"]) < 5e-5


def test_maxfit(capsys):
    code, out, _ = run(capsys, "maxfit", "--s", "1", "--nmin", "40", "--nmax", "60",
                       "--step", "10")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["slope_over_s"] - payload["K_ref"]) < 0.05


def test_usage_errors_exit_2(capsys):
    assert run(capsys, "verify", "--theorem", "nonsense")[0] == 2
    assert run(capsys, "expand", "--s", "1")[0] == 2
    assert run(capsys, "nosuchcommand")[0] == 2
    # domain errors surface as usage errors too
    code, _, err = run(capsys, "progsum", "--s", "1", "--n", "3", "--N", "4", "--j", "9")
    assert code == 2 and "residue" in err
    code, _, _ = run(capsys, "verify", "--smax", "1", "--nmax", "2")  # no theorem, no --all
    assert code == 2


def test_resource_error_exit_3(capsys, monkeypatch):
    monkeypatch.setenv("QPRODUCT_COEFF_CAP", "16")
    code, _, err = run(capsys, "expand", "--s", "1", "--n", "10")
    assert code == 3
    assert "cap" in err


def test_precision_error_exit_3(capsys):
    code, _, err = run(
        capsys, "progsum", "--s", "4000", "--n", "1", "--N", "3", "--j", "0",
        "--method", "character",
    )
    assert code == 3
    assert "certified" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "expand", "--s", "1", "--n", "2", "--format", "json",
                       "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["coefficients"] == ["1", "-1", "-1", "1"]


def test_output_is_byte_stable(capsys):
    first = run(capsys, "verify", "--theorem", "main00", "--smax", "1", "--nmax", "3")
    second = run(capsys, "verify", "--theorem", "main00", "--smax", "1", "--nmax", "3")
    assert first == second
    a = run(capsys, "kconst")[1]
    b = run(capsys, "kconst")[1]
    assert a == b
