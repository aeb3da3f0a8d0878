"""Tests for the command-line interface: JSON payloads, exit codes, and the
size-bound environment override for each subcommand.
"""

import json
import subprocess

import pytest
from click.testing import CliRunner

import cyclokit.oracle as oracle_mod
from cyclokit.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def invoke_json(runner, args, **kwargs):
    result = runner.invoke(main, args, **kwargs)
    assert result.exit_code == 0, result.stderr
    return json.loads(result.stdout)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


def test_analyze_finite_two_high_minus(runner):
    payload = invoke_json(runner, ["analyze", "--field", "q:23", "--n", "16"])
    assert payload["command"] == "analyze"
    assert payload["field"] == "q:23"
    r = payload["results"]
    assert r["n"] == 16
    assert r["degree"] == 2
    assert r["quadratic"] is True
    assert r["in_field"] is False
    assert r["n_F"] == 2
    assert r["order_of_zeta"] == 8
    assert r["t_nF"] == 16
    mp = r["min_poly"]
    assert mp["case"] == "TwoHighMinus"
    assert mp["yogh"] == 7
    assert mp["trace_symbolic"] == "z(16,1) + z(16,7)"
    assert mp["norm_symbolic"] == "-z(1,0)"
    assert mp["trace_concrete"] == [19, 0]
    assert mp["norm_concrete"] == [22, 0]
    assert r["min_poly_rendered"] == "x^2 - (z(16,1) + z(16,7))*x + (-z(1,0))"
    assert r["trace_shape"] == "z(2,1)*(z(16,1) - z(16,1)^-1)"
    gen = r["generator"]
    assert gen["type"] == "radical"
    assert gen["expression"] == "z(16,1) - z(16,7)"
    assert gen["square_value"] == [20, 0]
    kappa = r["kappa"]
    assert kappa["branch"] == "MinusBranch"
    assert kappa["representative"] == "z(16,1) + z(16,7)"
    assert kappa["in_field"] is True
    assert payload["oracle_checked"] is True
    assert payload["mismatches"] == []


def test_analyze_rational_radical(runner):
    payload = invoke_json(runner, ["analyze", "--field", "Q", "--n", "4"])
    r = payload["results"]
    assert r["min_poly"]["case"] == "Radical"
    assert r["min_poly_rendered"] == "x^2 - (0)*x + (z(1,0))"
    assert r["integer_min_poly"] == "x^2 + 1"
    gen = r["generator"]
    assert gen["expression"] == "2*z(4,1)"
    assert gen["square"] == "-4*z(1,0)"
    assert gen["square_value"] == "-4"
    assert r["kappa"]["branch"] == "TwoTimesBranch"
    assert payload["oracle_checked"] is True


def test_analyze_non_quadratic_reports_degree_only(runner):
    payload = invoke_json(runner, ["analyze", "--field", "q:5", "--n", "7"])
    r = payload["results"]
    assert r["degree"] == 6
    assert r["quadratic"] is False
    assert "min_poly" not in r
    assert payload["oracle_checked"] is False


def test_analyze_root_already_in_field(runner):
    payload = invoke_json(runner, ["analyze", "--field", "q:5", "--n", "4"])
    r = payload["results"]
    assert r["degree"] == 1
    assert r["in_field"] is True


def test_analyze_characteristic_divides_order(runner):
    result = runner.invoke(main, ["analyze", "--field", "q:5", "--n", "10"])
    assert result.exit_code == 3
    assert "characteristic 5 divides" in result.stderr
    assert result.stdout == ""


def test_analyze_rejects_malformed_field(runner):
    result = runner.invoke(main, ["analyze", "--field", "q:6", "--n", "3"])
    assert result.exit_code == 2
    assert "must be prime" in result.stderr


def test_analyze_exits_one_on_oracle_mismatch(runner, monkeypatch):
    real = oracle_mod.brute_min_poly

    def swapped(p, k, n):
        trace, norm = real(p, k, n)
        return norm, trace

    monkeypatch.setattr(oracle_mod, "brute_min_poly", swapped)
    result = runner.invoke(main, ["analyze", "--field", "q:23", "--n", "16"])
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["mismatches"] == [{"n": 16, "check": "min_poly_concrete"}]


# ---------------------------------------------------------------------------
# moduli
# ---------------------------------------------------------------------------


def test_moduli_global_finite(runner):
    payload = invoke_json(runner, ["moduli", "--field", "q:5"])
    r = payload["results"]
    assert r["full_moduli"]["presentation"] == "mu(24) - mu(4)"
    assert r["full_moduli"]["cardinality"] == 20
    (cls,) = r["s_max"]["classes"]
    assert cls["primes"] == [2, 3]
    assert cls["representative_n"] == 24
    assert cls["presentation"] == "(mu(8) * mu(3) * mu(1)) - (mu(4) * mu(1) * mu(1))"
    assert cls["cardinality"] == 20
    assert r["order_two"]["presentation"] == "prim(8) * mu(1)"
    assert r["order_two"]["cardinality"] == 4
    assert r["order_two"]["classes"][0]["minpoly"] == "x^2 - (0)*x + (-z(4,1))"


def test_moduli_global_rational(runner):
    payload = invoke_json(runner, ["moduli", "--field", "Q"])
    r = payload["results"]
    assert r["full_moduli"]["presentation"] == "prim(3) | prim(4) | prim(6)"
    assert r["full_moduli"]["cardinality"] == 6
    classes = r["s_max"]["classes"]
    assert [c["primes"] for c in classes] == [[2], [3]]
    assert [c["cardinality"] for c in classes] == [2, 4]
    assert classes[0]["presentation"] == "(mu(4) * mu(1)) - (mu(2) * mu(1))"
    assert classes[1]["presentation"] == "(mu(3) * mu(2)) - (mu(1) * mu(2))"
    assert r["order_two"]["cardinality"] == 2


def test_moduli_per_prime(runner):
    payload = invoke_json(runner, ["moduli", "--field", "q:23", "--prime", "2"])
    r = payload["results"]
    assert r["per_prime"]["presentation"] == "mu(16) - mu(2)"
    assert r["per_prime"]["cardinality"] == 14
    assert r["per_prime"]["classes"][0]["representative_n"] == 4
    assert r["nu"] == 4
    assert r["nu_plus"] == 3
    assert r["ell"] == 1
    assert r["c2"] == 4


def test_moduli_prime_equal_to_characteristic(runner):
    result = runner.invoke(main, ["moduli", "--field", "q:5", "--prime", "5"])
    assert result.exit_code == 3
    assert "characteristic" in result.stderr


def test_moduli_rejects_composite_prime(runner):
    result = runner.invoke(main, ["moduli", "--field", "q:23", "--prime", "4"])
    assert result.exit_code == 2
    assert "must be prime" in result.stderr


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_small_field(runner):
    payload = invoke_json(runner, ["verify", "--field", "q:5"])
    assert payload["results"] == {"max_n": 24, "orders_checked": 8}
    assert payload["oracle_checked"] is True
    assert payload["mismatches"] == []


def test_verify_respects_max_n(runner):
    payload = invoke_json(runner, ["verify", "--field", "q:2^2", "--max-n", "15"])
    assert payload["results"] == {"max_n": 15, "orders_checked": 4}
    assert payload["mismatches"] == []


def test_verify_medium_field_clean(runner):
    payload = invoke_json(runner, ["verify", "--field", "q:23"])
    assert payload["results"] == {"max_n": 528, "orders_checked": 20}
    assert payload["mismatches"] == []


def test_verify_rejects_rational_field(runner):
    result = runner.invoke(main, ["verify", "--field", "Q"])
    assert result.exit_code == 3
    assert "requires a finite field" in result.stderr


def test_verify_size_bound_default(runner):
    result = runner.invoke(main, ["verify", "--field", "q:1031"])
    assert result.exit_code == 4
    assert "exceeds CYCLOKIT_MAX_Q=1024" in result.stderr


def test_verify_size_bound_env_override(runner):
    result = runner.invoke(
        main, ["verify", "--field", "q:23"], env={"CYCLOKIT_MAX_Q": "16"}
    )
    assert result.exit_code == 4
    assert "exceeds CYCLOKIT_MAX_Q=16" in result.stderr


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def test_classify_rational(runner):
    payload = invoke_json(runner, ["classify", "--field", "Q"])
    r = payload["results"]
    assert r["kind"] == "rational"
    assert r["characteristic"] == 0
    assert [c["primes"] for c in r["s_max"]["classes"]] == [[2], [3]]
    assert r["order_two"]["cardinality"] == 2
    assert r["quad_moduli_summary"]["inseparable"] == 0
    assert r["nu"] == {"2": 2, "3": 1}
    assert r["c2"] is None


def test_classify_finite(runner):
    payload = invoke_json(runner, ["classify", "--field", "q:23"])
    r = payload["results"]
    assert r["kind"] == "finite"
    assert r["characteristic"] == 23
    assert r["q"] == 23
    (cls,) = r["s_max"]["classes"]
    assert cls["primes"] == [2, 3]
    assert cls["representative_n"] == 12
    assert cls["cardinality"] == 506
    assert r["order_two"]["presentation"] == "prim(4) * mu(11)"
    assert r["order_two"]["cardinality"] == 22
    assert r["quad_moduli_summary"] == {"separable": 1, "inseparable": 0}
    assert r["nu"] == {"2": 4, "3": 1}
    assert r["c2"] == 4


# ---------------------------------------------------------------------------
# installed entry point
# ---------------------------------------------------------------------------


def test_installed_entry_point_runs():
    proc = subprocess.run(
        ["cyclokit", "analyze", "--field", "Q", "--n", "4"],
        capture_output=True,
        text=True,
        timeout=30,
    )
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["results"]["integer_min_poly"] == "x^2 + 1"
