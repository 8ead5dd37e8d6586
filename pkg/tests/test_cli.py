import io
import json
import contextlib

import pytest

from symext.catalog import get_group
from symext.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_VERIFY,
    OutputDocument,
    dump_group_spec,
    load_group_spec,
    main,
)


def run_cli(argv):
    out = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def test_decompose_sym_degree6():
    code, out, _ = run_cli(
        ["decompose", "--group", "S3", "--char", "chi3", "--op", "sym", "--degree", "6"]
    )
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].split() == ["degree", "chi1", "chi2", "chi3"]
    assert lines[-1].split() == ["6", "2", "1", "2"]


def test_decompose_ext_degree2():
    code, out, _ = run_cli(
        ["decompose", "--group", "S3", "--char", "chi3", "--op", "ext", "--degree", "2"]
    )
    assert code == EXIT_OK
    rows = [ln.split()[1:] for ln in out.strip().splitlines()[1:]]
    assert rows == [["1", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]


def test_decompose_degree0_is_trivial_row():
    code, out, _ = run_cli(
        ["decompose", "--group", "A4", "--char", "chi4", "--op", "sym", "--degree", "0"]
    )
    assert code == EXIT_OK
    assert out.strip().splitlines()[1].split() == ["0", "1", "0", "0", "0"]


def test_decompose_input_errors():
    code, _, err = run_cli(
        ["decompose", "--group", "S3", "--char", "nope", "--op", "sym"]
    )
    assert code == EXIT_INPUT and "unknown character" in err
    code, _, err = run_cli(
        ["decompose", "--group", "Nope99", "--char", "chi1", "--op", "sym"]
    )
    assert code == EXIT_INPUT
    code, _, err = run_cli(
        ["decompose", "--group", "S3", "--char", "chi1", "--degree", "-2"]
    )
    assert code == EXIT_INPUT


def test_genfun_rational_and_series():
    code, out, _ = run_cli(
        ["genfun", "--group", "S3", "--char", "chi3", "--irr", "1", "--op", "sym"]
    )
    assert code == EXIT_OK
    assert "1 / (1-t^3)(1-t^2)" in out
    code, out, _ = run_cli(
        ["genfun", "--group", "S3", "--char", "regular", "--irr", "3",
         "--op", "sym", "--series", "10", "--check-consistency"]
    )
    assert code == EXIT_OK
    coeffs = [ln.split()[1] for ln in out.strip().splitlines()[1:]]
    assert coeffs == ["0", "2", "7", "18", "42", "84", "153", "264", "429", "666", "1001"]


def test_genfun_ext_zero_column():
    code, out, _ = run_cli(
        ["genfun", "--group", "S4", "--char", "chi3", "--irr", "chi5", "--op", "ext"]
    )
    assert code == EXIT_OK
    assert "display      0" in out


def test_closedform_regular():
    code, out, _ = run_cli(
        ["closedform", "--group", "S3", "--spec", "regular", "--degree", "5"]
    )
    assert code == EXIT_OK
    assert "(1+t)^6" in out
    assert "42*chi1 + 42*chi2 + 84*chi3" in out


def test_closedform_central_and_onedim():
    code, out, _ = run_cli(
        ["closedform", "--group", "Hp:3", "--spec", "central:zeta_1", "--degree", "3"]
    )
    assert code == EXIT_OK
    assert "ext^2" in out and "tau_2" in out
    # the third exterior power collapses onto the trivial character
    line = next(ln for ln in out.splitlines() if ln.startswith("ext^3"))
    assert line.split()[-1] == "chi_0_0"
    code, out, _ = run_cli(
        ["closedform", "--group", "S3", "--spec", "onedim:chi1"]
    )
    assert code == EXIT_OK
    assert "1 / (1-t)" in out
    code, _, err = run_cli(["closedform", "--group", "S3", "--spec", "central:x"])
    assert code == EXIT_INPUT


def test_verify_builtin_groups():
    for group in ["S3", "A4", "Q4n:2"]:
        code, out, _ = run_cli(["verify", "--group", group, "--degree", "6"])
        assert code == EXIT_OK
        assert "FAIL" not in out


def test_verify_reports_failures_with_exit_1(monkeypatch):
    import symext.cli as cli

    monkeypatch.setattr(
        cli, "_verify_checks", lambda ctx, degree: [
            {"check": "forced", "ok": False, "detail": "boom"}
        ]
    )
    code, out, _ = run_cli(["verify", "--group", "S3"])
    assert code == EXIT_VERIFY
    assert "FAIL" in out


def test_output_determinism_and_machine_round_trip():
    args = ["decompose", "--group", "A4", "--char", "chi4", "--op", "sym",
            "--degree", "8", "--format", "machine"]
    code1, out1, _ = run_cli(args)
    code2, out2, _ = run_cli(args)
    assert code1 == code2 == EXIT_OK
    assert out1 == out2  # byte-identical
    doc = OutputDocument.parse_machine(out1)
    assert doc.kind == "table"
    assert doc.payload["rows"][0] == [1, 0, 0, 0]
    assert OutputDocument.parse_machine(doc.to_machine()) == doc


def test_csv_format():
    code, out, _ = run_cli(
        ["decompose", "--group", "S3", "--char", "chi3", "--op", "sym",
         "--degree", "2", "--format", "csv"]
    )
    assert code == EXIT_OK
    assert out.splitlines()[0] == "degree,chi1,chi2,chi3"
    assert out.splitlines()[3] == "2,1,0,1"


def test_group_spec_round_trip(tmp_path):
    doc = dump_group_spec(get_group("G21"))
    doc["normal_subgroups"] = {"C7": [0, 1, 2]}
    path = tmp_path / "g21.json"
    path.write_text(json.dumps(doc))
    ctx = load_group_spec(str(path))
    assert ctx.table == get_group("G21")
    assert "C7" in ctx.subgroups
    code, out, _ = run_cli(["verify", "--group", str(path), "--degree", "5"])
    assert code == EXIT_OK and "FAIL" not in out


def test_group_spec_with_generators_and_central(tmp_path):
    doc = dump_group_spec(get_group("S3"), generators=["(0 1)", "(0 1 2)"])
    # the 3-cycle class is inverse-closed, so only the trivial zeta is a
    # well-defined class-level assignment on A3 inside S3
    doc["normal_subgroups"] = {"A3": [0, 2]}
    doc["central_chars"] = {
        "coset": {"subgroup": "A3", "zeta": {"0": 0, "2": 0}, "multiplier": 2}
    }
    path = tmp_path / "s3.json"
    path.write_text(json.dumps(doc))
    ctx = load_group_spec(str(path))
    assert ctx.natural is not None
    assert [v.to_rational() for v in ctx.natural.values] == [3, 1, 0]
    assert "coset" in ctx.central
    code, out, _ = run_cli(
        ["decompose", "--group", str(path), "--char", "natural", "--op", "sym",
         "--degree", "3"]
    )
    assert code == EXIT_OK


def test_group_spec_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(["verify", "--group", str(bad)])
    assert code == EXIT_INPUT and "invalid JSON" in err

    doc = dump_group_spec(get_group("S3"))
    doc["irreducibles"][2]["values"][1] = [[0, 1, 1]]  # corrupt one value
    path = tmp_path / "corrupt.json"
    path.write_text(json.dumps(doc))
    code, _, err = run_cli(["verify", "--group", str(path)])
    assert code == EXIT_INPUT and "validation failed" in err

    doc = dump_group_spec(get_group("S3"))
    doc["root_order"] = 4  # not a multiple of the exponent
    path2 = tmp_path / "badroot.json"
    path2.write_text(json.dumps(doc))
    code, _, err = run_cli(["verify", "--group", str(path2)])
    assert code == EXIT_INPUT and "root_order" in err

    doc = dump_group_spec(get_group("G21"))
    for cls in doc["classes"]:
        cls["prime_powers"].pop("7", None)  # drop a required dividing prime
    path3 = tmp_path / "noprime.json"
    path3.write_text(json.dumps(doc))
    code, _, err = run_cli(["verify", "--group", str(path3)])
    assert code == EXIT_INPUT and "7" in err


def test_generators_route():
    code, out, _ = run_cli(["verify", "--generators", "(0 1);(0 1 2)"])
    assert code == EXIT_OK
    code, _, err = run_cli(
        ["decompose", "--generators", "(0 1)", "--char", "regular"]
    )
    assert code == EXIT_INPUT and "character table" in err
    code, _, err = run_cli(["decompose", "--char", "chi1"])
    assert code == EXIT_INPUT


def test_generators_combined_with_table():
    # generators supplied next to a builtin table attach a natural character
    code, out, _ = run_cli(
        ["decompose", "--group", "S3", "--generators", "(0 1);(0 1 2)",
         "--char", "natural", "--op", "ext", "--degree", "1"]
    )
    assert code == EXIT_OK
    assert out.strip().splitlines()[2].split() == ["1", "1", "0", "1"]
    code, _, err = run_cli(
        ["decompose", "--group", "S4", "--generators", "(0 1);(0 1 2)",
         "--char", "natural"]
    )
    assert code == EXIT_INPUT and "do not realize" in err


def test_natural_character_through_cli():
    code, out, _ = run_cli(
        ["decompose", "--group", "S4", "--char", "natural", "--op", "sym",
         "--degree", "2"]
    )
    assert code == EXIT_OK
    assert out.strip().splitlines()[1].split() == ["0", "1", "0", "0", "0", "0"]
