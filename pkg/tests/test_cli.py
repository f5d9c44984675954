import json

import pytest

from hoffmanzeta.cli import main
from hoffmanzeta.numerics import agree_digits

ZETA3 = "1.2020569031595942853997381615114499907649862923405"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_h(capsys):
    code, out, _ = run(capsys, "eval", "h", "--r", "0", "--s", "0")
    d = json.loads(out)
    assert code == 0 and d["quantity"] == "H(0,0)" and d["route"] == "zagier"
    assert agree_digits(d["value"], ZETA3, 50) == 50


def test_eval_t_lyh(capsys):
    code, out, _ = run(capsys, "eval", "t", "--r", "1", "--s", "0", "--route", "lyh", "--digits", "20")
    d = json.loads(out)
    assert code == 0 and d["digits"] == 20 and d["terms_used"] > 0


def test_eval_h_direct(capsys):
    code, out, _ = run(capsys, "eval", "h", "--r", "1", "--s", "0", "--route", "direct", "--cutoff", "1000")
    d = json.loads(out)
    assert code == 0 and d["terms_used"] == 1000 and float(d["tail_bound"]) > 0


def test_eval_zeta_and_lupu(capsys):
    _, out, _ = run(capsys, "eval", "zeta", "--m", "3")
    assert agree_digits(json.loads(out)["value"], ZETA3, 50) == 50
    _, out, _ = run(capsys, "eval", "zeta", "--m", "3", "--route", "euler-maclaurin")
    assert agree_digits(json.loads(out)["value"], ZETA3, 50) == 50
    _, a, _ = run(capsys, "eval", "lupu", "--p", "3", "--route", "direct")
    _, b, _ = run(capsys, "eval", "lupu", "--p", "3", "--route", "closed")
    assert agree_digits(json.loads(a)["value"], json.loads(b)["value"], 50) >= 45


@pytest.mark.parametrize("argv", [
    ["eval", "zeta", "--m", "1"],
    ["eval", "lupu", "--p", "0"],
    ["eval", "h", "--r", "-1", "--s", "0"],
    ["eval", "h", "--r", "0", "--s", "0", "--digits", "5"],
    ["verify", "grid", "--routes", "zagier,bogus"],
    ["verify", "grid", "--rmax", "-1"],
    ["verify", "lemmas", "--pf-max", "0"],
    ["frobnicate"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_help_is_success(capsys):
    assert run(capsys, "--help")[0] == 0


def test_io_error(capsys, tmp_path):
    target = tmp_path / "missing" / "out.json"
    code, _, err = run(capsys, "verify", "grid", "--rmax", "0", "--smax", "0", "--routes", "zagier,lyh",
                       "--out", str(target))
    assert code != 0 and "I/O error" in err


def test_verify_grid_csv_to_file(capsys, tmp_path):
    target = tmp_path / "g.csv"
    code, out, _ = run(capsys, "verify", "grid", "--rmax", "1", "--smax", "1", "--routes", "zagier,lyh",
                       "--format", "csv", "--out", str(target))
    assert code == 0 and out == ""
    assert len(target.read_text().splitlines()) == 5


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "lemmas", "--bin-rmax", "4", "--bin-smax", "2",
                       "--shift-rmax", "2", "--shift-smax", "2", "--delta-cases", "10")
    d = json.loads(out)
    assert code == 0 and d["summary"]["failed"] == 0 and d["records"] == []


def test_grid_jobs_identical(capsys):
    argv = ["verify", "grid", "--rmax", "1", "--smax", "1", "--routes", "zagier,lyh,murakami,t-lyh,b,d",
            "--digits", "30"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    a, b = json.loads(serial), json.loads(parallel)
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
