import io
import json

from planeparts.cli import main


def run_cli(argv):
    import contextlib

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_gf_text():
    code, out = run_cli(["gf", "--family", "dspp", "--profile", "++", "--order", "5"])
    assert code == 0
    assert out.strip() == "1,1,2,4,6,9"


def test_gf_classical():
    code, out = run_cli(["gf", "--family", "pp", "--order", "0"])
    assert code == 0 and out.strip() == "1"
    code, out = run_cli(["gf", "--family", "pp", "--order", "5"])
    assert out.strip() == "1,1,3,6,13,24"


def test_gf_scp_minus_profile_forms():
    for spelling in ("--profile=--", "--profile=-1,-1"):
        code, out = run_cli(["gf", "--family", "scp", spelling, "--order", "5"])
        assert code == 0
        assert out.strip().endswith(",4")


def test_gf_json_big_ints_as_strings():
    code, out = run_cli(
        ["gf", "--family", "dspp", "--profile", "++", "--order", "5", "--format", "json"]
    )
    payload = json.loads(out)
    assert payload["coefficients"] == ["1", "1", "2", "4", "6", "9"]
    assert payload["profile"] == "++"
    assert payload["order"] == 5
    assert payload["multisets"] == [
        {"base": 3, "residues": {"1": 1, "2": 1, "3": 1}},
        {"base": 6, "residues": {"3": 1}},
    ]


def test_count_matches_gf():
    code, out = run_cli(["count", "--family", "dspp", "--profile", "++", "--order", "10"])
    assert code == 0
    assert out.strip().split(",")[10] == "64"
    code, out = run_cli(["count", "--family", "dspp", "--profile", "", "--order", "4"])
    assert out.strip() == "1,1,2,3,5"
    code, out = run_cli(["count", "--family", "cp", "--profile", "+-", "--order", "4"])
    assert out.strip() == "1,1,2,3,5"


def test_count_csv():
    code, out = run_cli(
        ["count", "--family", "scp", "--profile=--", "--order", "3", "--format", "csv"]
    )
    lines = out.strip().splitlines()
    assert lines[0] == "index,coefficient"
    assert lines[1] == "0,1" and lines[-1] == "3,2"


def test_cp_empty_profile_is_usage_error():
    code, _ = run_cli(["gf", "--family", "cp", "--profile", "", "--order", "3"])
    assert code == 2
    code, _ = run_cli(["count", "--family", "cp", "--profile", "", "--order", "3"])
    assert code == 2


def test_asym_json():
    code, out = run_cli(["asym", "--family", "dspp", "--profile", "++", "--n", "5", "20"])
    assert code == 0
    payload = json.loads(out)
    assert payload["estimates"] == {"5": 10, "20": 1325}
    assert abs(payload["params"]["b"] - 0.25) < 1e-15
    code, out = run_cli(["asym", "--family", "dspp", "--m", "3", "--n", "5"])
    payload = json.loads(out)
    assert payload["profile"] == "--"
    code, _ = run_cli(["asym", "--family", "scp", "--m", "3"])
    assert code == 2


def test_table_values():
    code, out = run_cli(["table", "--format", "json"])
    assert code == 0
    rows = {r["family"]: r for r in json.loads(out)["rows"]}
    assert rows["dspp"]["exact"] == ["9", "64", "314", "1244"]
    assert rows["dspp"]["estimate"] == [10, 70, 336, 1325]
    assert rows["scp"]["exact"] == ["4", "17", "56", "161"]
    assert rows["scp"]["estimate"] == [4, 18, 59, 169]


def test_table_custom_n():
    code, out = run_cli(["table", "--n", "1", "--format", "json"])
    assert code == 0
    rows = {r["family"]: r for r in json.loads(out)["rows"]}
    assert rows["dspp"]["exact"] == ["1"]
    assert isinstance(rows["dspp"]["estimate"][0], int)


def test_verify_exit_codes_and_fault_injection():
    code, out = run_cli(["verify", "--max-len", "1", "--order", "5"])
    assert code == 0
    lines = out.strip().splitlines()
    summary = json.loads(lines[-1])
    assert summary["failures"] == 0 and summary["cases"] == len(lines) - 1
    for line in lines[:-1]:
        assert json.loads(line)["passed"] is True

    code, out = run_cli(["verify", "--max-len", "1", "--order", "5", "--inject-fault", "0"])
    assert code == 1
    lines = out.strip().splitlines()
    assert json.loads(lines[-1])["failures"] == 1
    failing = [json.loads(line) for line in lines[:-1] if not json.loads(line)["passed"]]
    assert len(failing) == 1 and failing[0]["first_mismatch"] == 0


def test_verify_depth_shrinks_cases():
    _, out_small = run_cli(["verify", "--max-len", "1", "--order", "4"])
    _, out_big = run_cli(["verify", "--max-len", "2", "--order", "4"])
    small = json.loads(out_small.strip().splitlines()[-1])["cases"]
    big = json.loads(out_big.strip().splitlines()[-1])["cases"]
    assert small < big


def test_output_deterministic():
    argvs = (
        ["gf", "--family", "scp", "--profile=-+", "--order", "9", "--format", "json"],
        ["table", "--format", "json"],
        ["asym", "--family", "scp", "--profile=--", "--n", "7"],
        ["verify", "--max-len", "1", "--order", "4"],
    )
    for argv in argvs:
        code1, out1 = run_cli(list(argv))
        code2, out2 = run_cli(list(argv))
        assert (code1, out1) == (code2, out2)


def test_gf_and_count_agree_through_the_cli():
    for family in ("dspp", "cp", "scp"):
        for profile in ("+", "-", "++", "+-", "-+", "--"):
            argv_tail = ["--family", family, "--profile=%s" % profile, "--order", "8"]
            _, gf_out = run_cli(["gf"] + argv_tail)
            _, count_out = run_cli(["count"] + argv_tail)
            assert gf_out == count_out, (family, profile)


def test_usage_error_exit_code():
    import pytest

    with pytest.raises(SystemExit) as exc:
        run_cli(["gf", "--family", "bogus", "--order", "3"])
    assert exc.value.code == 2
