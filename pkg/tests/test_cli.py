"""Command-line surface: exit codes, formats, determinism, schema agreement."""

import json

import pytest

from charsums.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run(capsys, [])
    assert code == 1
    assert err


def test_unknown_subcommand(capsys):
    code, _, _ = run(capsys, ["frobnicate"])
    assert code == 1


@pytest.mark.parametrize(
    "field", ["3,1", "3;1;2", "a,b,c", "3,1,2,9"]
)
def test_malformed_field_flag(capsys, field):
    code, _, err = run(capsys, ["knormal", "--field", field])
    assert code == 1
    assert "--field" in err


def test_verify_bounds_rows(capsys):
    code, out, _ = run(capsys, ["verify-bounds", "--field", "3,1,2"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 7 * 13 * 6  # characters x spaces x theorems
    for row in rows:
        assert set(row) == {
            "theorem",
            "field",
            "chi_index",
            "set",
            "lhs",
            "rhs",
            "slack",
            "hypothesis_met",
            "holds",
        }
        # a bound only binds when its hypothesis is met
        assert row["holds"] or not row["hypothesis_met"]


def test_census_csv_header_and_booleans(capsys):
    code, out, _ = run(
        capsys, ["knormal", "--field", "2,1,3", "--format", "csv"]
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "count,degree,divisor,free_of_binomials,phi_q,primitive_witness"
    assert len(lines) == 1 + 4
    import csv as _csv

    rows = list(_csv.DictReader(lines))
    assert set(r["free_of_binomials"] for r in rows) <= {"true", "false"}
    assert [r["divisor"] for r in rows] == ["1", "1,1", "1,1,1", "1,0,0,1"]


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "census.json"
    code, out, _ = run(
        capsys, ["knormal", "--field", "3,1,2", "--out", str(target)]
    )
    assert code == 0
    assert out == ""
    rows = json.loads(target.read_text())
    assert [r["divisor"] for r in rows] == ["1", "1,1", "2,1", "2,0,1"]


def test_knormal_search_row(capsys):
    code, out, _ = run(capsys, ["knormal", "--field", "3,1,4", "--k", "1"])
    assert code == 0
    (row,) = json.loads(out)
    assert row["found"] and row["k"] == 1
    assert row["witness"] == "1,0,1,0"


def test_knormal_no_divisor_is_conclusive_not_an_error(capsys):
    code, out, _ = run(capsys, ["knormal", "--field", "2,1,4", "--k", "2"])
    assert code == 0
    (row,) = json.loads(out)
    assert row["no_divisor"] and not row["found"]
    assert "detail" in row


def test_knormal_bad_k(capsys):
    code, _, err = run(capsys, ["knormal", "--field", "2,1,4", "--k", "9"])
    assert code == 1
    assert err


def test_artin_schreier_exit_codes(capsys):
    code, out, _ = run(capsys, ["artin-schreier", "--p", "3"])
    assert code == 0
    (row,) = json.loads(out)
    assert row["theta_knormal"] == 1 and row["p"] == 3
    code, _, _ = run(capsys, ["artin-schreier", "--p", "4"])
    assert code == 1
    code, _, _ = run(capsys, ["artin-schreier", "--p", "17"])
    assert code == 2  # over the enumeration cap, not an input error


def test_scan_primitive_space_and_translate(capsys):
    code, out, _ = run(
        capsys,
        ["scan-primitive", "--field", "3,1,2", "--space", "u=0,0;V=1,0"],
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["count"] == 0 and not row["contains_primitive"]

    code, _, err = run(
        capsys, ["scan-primitive", "--field", "3,1,2", "--space", "garbage"]
    )
    assert code == 1 and err

    code, out, _ = run(
        capsys, ["scan-primitive", "--field", "3,1,2", "--translate"]
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["failures"] == [] and row["exhaustive"]


def test_scan_primitive_full_scan_exit(capsys):
    code, out, _ = run(capsys, ["scan-primitive", "--field", "3,1,2"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 13


def test_digits_prescription_parsing(capsys):
    code, out, _ = run(
        capsys, ["digits", "--field", "3,1,2", "--prescribe", "0:1"]
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["found"] is True

    for bad in ("0:1,0:2", "5:0", "0:9", "0-1", ":"):
        code, _, err = run(
            capsys, ["digits", "--field", "3,1,2", "--prescribe", bad]
        )
        assert code == 1, bad
        assert err


def test_digits_custom_basis(capsys):
    code, out, _ = run(
        capsys,
        [
            "digits",
            "--field",
            "3,1,2",
            "--basis",
            "1,0|0,1",
            "--prescribe",
            "1:0",
        ],
    )
    assert code == 0
    (row,) = json.loads(out)
    assert row["found"] is False  # digit 1 = 0 pins the subfield F_3


def test_grassmann_row(capsys):
    code, out, _ = run(capsys, ["grassmann", "--field", "3,1,2"])
    assert code == 0
    (row,) = json.loads(out)
    assert row["complete"] and row["lower"] == row["upper"] == 1
    assert row["witness"]


def test_fqp_exit_codes(capsys):
    code, out, _ = run(capsys, ["fqp", "--q", "4", "--p", "2"])
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 1 and rows[0]["q"] == 4 and rows[0]["found"]
    code, _, err = run(capsys, ["fqp", "--q", "4", "--p", "3"])
    assert code == 1 and err


def test_reruns_are_byte_identical(capsys):
    argv = [
        "verify-bounds",
        "--field",
        "2,1,4",
        "--mode",
        "sampled",
        "--samples",
        "25",
        "--seed",
        "11",
    ]
    _, first, _ = run(capsys, argv)
    _, second, _ = run(capsys, argv)
    assert first == second and first


def test_emitted_keys_match_schema(capsys):
    defs = json.loads(open("schemas/report.schema.json").read())["$defs"]

    def required(name):
        d = defs[name]
        keys = set(d.get("required", ()))
        for part in d.get("allOf", ()):
            ref = part.get("$ref", "")
            if ref.startswith("#/$defs/"):
                keys |= required(ref.split("/")[-1])
            keys |= set(part.get("required", ()))
        return keys

    checks = [
        (["verify-bounds", "--field", "3,1,2"], "boundReport"),
        (["scan-primitive", "--field", "3,1,2"], "primitiveScanRow"),
        (["scan-primitive", "--field", "3,1,2", "--translate"], "translateRow"),
        (["knormal", "--field", "3,1,2"], "censusRow"),
        (["knormal", "--field", "3,1,4", "--k", "1"], "knormalSearchRow"),
        (["knormal", "--field", "2,1,4", "--k", "2"], "knormalNoDivisorRow"),
        (["fqp", "--q", "4", "--p", "2"], "fqpRow"),
        (["digits", "--field", "3,1,2", "--prescribe", "0:1"], "digitsRow"),
        (["grassmann", "--field", "3,1,2"], "grassmannRow"),
        (["artin-schreier", "--p", "3"], "artinSchreierRow"),
    ]
    for argv, def_name in checks:
        code, out, _ = run(capsys, argv)
        assert code == 0, argv
        for row in json.loads(out):
            assert set(row) == required(def_name), (argv, def_name)
