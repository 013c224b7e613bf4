import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from math import isqrt

import pytest

from alttangles import golden
from alttangles.cli import FUNCTIONS, main, series_records


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_gamma_tilde_csv():
    code, text = run("series", "--function", "Gamma_tilde", "--order", "7", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert text.splitlines()[0] == "function,degree,value"
    assert [int(r["degree"]) for r in rows] == list(range(1, 8))
    assert [Fraction(r["value"]) for r in rows] == golden.GAMMA_TILDE[1:]
    assert rows[0]["value"] == "1/1"


def test_f1_text():
    code, text = run("series", "--function", "F1", "--order", "6")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "g^2: 1/4"
    assert lines[-1] == "g^6: 91/12"
    assert len(lines) == 5


def test_text_drops_unit_denominator():
    _, text = run("series", "--function", "Gamma", "--order", "3")
    assert text.splitlines() == ["g^1: 1", "g^2: 2", "g^3: 6"]


def test_f_order_zero_is_empty():
    assert run("series", "--function", "F", "--order", "0", "--format", "json") == (0, "")


def test_json_round_trip_and_decimal():
    code, text = run("series", "--function", "F", "--order", "4", "--format", "json", "--digits", "3")
    rows = [json.loads(line) for line in text.splitlines()]
    assert [Fraction(r["value"]) for r in rows] == golden.F_BARE[1:]
    assert list(rows[0]) == ["function", "degree", "value", "decimal"]
    assert rows[1]["decimal"] == "1.125"


def test_json_has_no_decimal_without_digits():
    _, text = run("series", "--function", "a2", "--order", "2", "--format", "json")
    assert all("decimal" not in json.loads(line) for line in text.splitlines())


def test_bivariate_json_ordering():
    _, text = run("series", "--function", "Gamma_template", "--order", "2", "--format", "json")
    rows = [json.loads(line) for line in text.splitlines()]
    assert [(r["m"], r["n"]) for r in rows] == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert [r["value"] for r in rows] == ["1/1", "1/1", "2/1", "4/1", "2/1"]


def test_bivariate_csv_header():
    _, text = run("series", "--function", "Gamma_tilde_template", "--order", "2", "--format", "csv")
    assert text.splitlines()[0] == "function,m,n,value"


@pytest.mark.parametrize("name", sorted(FUNCTIONS))
def test_every_function_is_deterministic(name):
    a = run("series", "--function", name, "--order", "5", "--format", "json")
    b = run("series", "--function", name, "--order", "5", "--format", "json")
    assert a == b and a[0] == 0
    assert len(list(series_records(name, 5))) > 0


def test_asymptotics_links():
    code, text = run("asymptotics", "--which", "links")
    assert code == 0
    assert "growth   27/4 = 6.75" in text


def test_asymptotics_tangles_digits():
    _, text = run("asymptotics", "--which", "tangles", "--digits", "6")
    assert "(101+sqrt(21001))/40 = 6.147930" in text


def test_asymptotics_twelve_digits():
    _, text = run("asymptotics", "--which", "tangles", "--digits", "12", "--format", "json")
    row = json.loads(text)
    # independent rendering: isqrt of 21001 * 10^26 gives a guard digit
    scaled = (101 * 10**13 + isqrt(21001 * 10**26)) // 40
    rounded = (scaled + 5) // 10
    assert row["growth_decimal"] == f"{rounded // 10**12}.{rounded % 10**12:012d}"
    assert row["growth"] == "(101+sqrt(21001))/40"


@pytest.mark.parametrize(
    "target, n, shown",
    [("free-energy", 2, "oracle 9/8, analytic 9/8"), ("tangles", 3, "oracle 6, analytic 6"), ("2pi", 3, "oracle 0, analytic 0")],
)
def test_oracle_match(target, n, shown):
    code, text = run("oracle", "--target", target, "--n", str(n))
    assert code == 0
    assert shown in text and text.rstrip().endswith("MATCH")


def test_oracle_two_point_parallel():
    code, text = run("oracle", "--target", "two-point", "--n", "2", "--parallel", "2")
    assert code == 0 and "oracle 9, analytic 9" in text


def test_oracle_cap_needs_force():
    assert run("oracle", "--target", "tangles", "--n", "5")[0] == 2
    assert run("oracle", "--target", "free-energy", "--n", "1", "--force")[0] == 0


def test_verify_passes():
    code, text = run("verify", "--order", "10")
    assert code == 0
    assert "FAIL" not in text


def test_verify_order_six_includes_gamma_tilde():
    code, text = run("verify", "--order", "6")
    assert code == 0
    assert "PASS golden Gamma~(g)" in text


@pytest.mark.parametrize("inject", ["zeta", "drop-g-gamma-tilde", "golden"])
def test_verify_injections_fail(inject):
    code, text = run("verify", "--order", "10", "--inject", inject)
    assert code == 1
    assert text.count("FAIL") == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["series", "--function", "nope"],
        ["series", "--function", "F", "--order", "-1"],
        ["asymptotics", "--digits", "0"],
        ["oracle", "--target", "knots", "--n", "2"],
        ["verify", "--order", "5"],
        [],
    ],
)
def test_usage_errors_exit_two(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv, out=io.StringIO())
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "alttangles", "oracle", "--target", "tangles", "--n", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "MATCH" in proc.stdout
