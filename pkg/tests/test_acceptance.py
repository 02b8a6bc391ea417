"""End-to-end acceptance gate.

Each test exercises one headline guarantee at full scale, prints a single
PASS/FAIL line to the terminal, and enforces the documented time budget.
Run with `pytest tests/test_acceptance.py -v` for the full report.
"""

import json
import os
import subprocess
import sys
import time
from fractions import Fraction

from appellpoly import (
    apostol_euler_constants,
    bernoulli_moments,
    bernoulli_order_constants,
    bstar_constants,
    gen_bernoulli_constants,
    oracle_constants,
    uniform01,
)
from appellpoly.verification import (
    T_GRID,
    check_classical_reduction,
    check_derivative_identity,
    check_derivative_representation,
    check_four_route_equality,
    check_generating_identity,
    check_iterate_subset_agreement,
    check_step_symmetry,
    check_three_route_equality,
    check_uniform_representation,
    check_vanishing,
)

CLI = [sys.executable, "-m", "appellpoly"]


def clean_env(**extra):
    env = dict(os.environ)
    env.pop("APPELL_FAULT_INJECT", None)
    env.pop("APPELL_MAX_N", None)
    env.update(extra)
    return env


def report(capsys, number, label, ok, elapsed, bound):
    within = bound is None or elapsed < bound
    status = "PASS" if ok and within else "FAIL"
    with capsys.disabled():
        print(f"[criterion {number}] {status} {label} ({elapsed:.2f}s)")
    return within


def test_criterion_1_four_route_constants(capsys):
    start = time.perf_counter()
    result = check_four_route_equality(20)
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 1, "four-route constant agreement, n <= 20, full grid",
        result.passed, elapsed, 30.0,
    )
    assert result.passed, result.detail
    assert within, f"took {elapsed:.2f}s, budget 30s"


def test_criterion_2_classical_bernoulli_numbers(capsys):
    start = time.perf_counter()
    production = bernoulli_order_constants(1, 19)
    closed = gen_bernoulli_constants(1, 1, 19)
    oracle = oracle_constants(uniform01(19), 1, 19)
    ok = production == closed == oracle
    ok = ok and production[2] == Fraction(1, 6)
    ok = ok and production[4] == Fraction(-1, 30)
    ok = ok and production[12] == Fraction(-691, 2730)
    ok = ok and all(production[n] == 0 for n in range(3, 20, 2))
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 2, "classical Bernoulli numbers from the uniform order-1 family",
        ok, elapsed, 1.0,
    )
    assert ok, (production[:13], closed[:13], oracle[:13])
    assert within, f"took {elapsed:.2f}s, budget 1s"


def test_criterion_3_three_route_stirling(capsys):
    start = time.perf_counter()
    result = check_three_route_equality(12)
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 3, "three-route Stirling agreement, n <= 12, all distributions",
        result.passed, elapsed, 10.0,
    )
    assert result.passed, result.detail
    assert within, f"took {elapsed:.2f}s, budget 10s"


def test_criterion_4_uniform_representation_and_reduction(capsys):
    start = time.perf_counter()
    rep = check_uniform_representation(15)
    red = check_classical_reduction(20)
    ok = rep.passed and red.passed
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 4, "uniform-sum representation (n <= 15) and classical reduction (n <= 20)",
        ok, elapsed, 5.0,
    )
    assert ok, (rep.detail, red.detail)
    assert within, f"took {elapsed:.2f}s, budget 5s"


def test_criterion_5_family_reductions(capsys):
    start = time.perf_counter()
    euler = apostol_euler_constants(1, Fraction(1, 2), 20)
    euler_oracle = oracle_constants(bernoulli_moments(Fraction(1, 2), 20), 1, 20)
    ok = euler == euler_oracle
    for t in T_GRID:
        reference = bernoulli_order_constants(t, 20)
        ok = ok and bstar_constants(t, 1, 20) == reference
        ok = ok and gen_bernoulli_constants(t, 1, 20) == reference
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 5, "named-family reductions to classical sequences, n <= 20",
        ok, elapsed, 10.0,
    )
    assert ok
    assert within, f"took {elapsed:.2f}s, budget 10s"


def test_criterion_6_appell_axioms(capsys):
    start = time.perf_counter()
    derivative = check_derivative_identity(12)
    generating = check_generating_identity(12)
    ok = derivative.passed and generating.passed
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 6, "derivative and generating-function axioms, n <= 12, full grid",
        ok, elapsed, 10.0,
    )
    assert ok, (derivative.detail, generating.detail)
    assert within, f"took {elapsed:.2f}s, budget 10s"


def test_criterion_7_difference_operator_suite(capsys):
    start = time.perf_counter()
    results = [
        check_vanishing(8, 50),
        check_step_symmetry(8, 50),
        check_iterate_subset_agreement(8, 50),
        check_derivative_representation(8, 50),
    ]
    ok = all(r.passed for r in results)
    elapsed = time.perf_counter() - start
    within = report(
        capsys, 7, "randomized difference-operator identities, 200 cases",
        ok, elapsed, 5.0,
    )
    assert ok, [r.detail for r in results if not r.passed]
    assert within, f"took {elapsed:.2f}s, budget 5s"


def test_criterion_8_cli_contract(capsys):
    start = time.perf_counter()
    clean = subprocess.run(
        CLI + ["verify", "--suite", "all", "--n", "12"],
        capture_output=True, text=True, env=clean_env(),
    )
    ok = clean.returncode == 0 and "# overall: pass" in clean.stdout

    faulted_sum = subprocess.run(
        CLI + ["verify", "--suite", "all", "--n", "8"],
        capture_output=True, text=True,
        env=clean_env(APPELL_FAULT_INJECT="sum-moments:3,5"),
    )
    ok = ok and faulted_sum.returncode == 1
    ok = ok and "FAIL" in faulted_sum.stdout and "5,3" in faulted_sum.stdout

    faulted_triangle = subprocess.run(
        CLI + ["verify", "--suite", "all", "--n", "8"],
        capture_output=True, text=True,
        env=clean_env(APPELL_FAULT_INJECT="stirling:6,3"),
    )
    ok = ok and faulted_triangle.returncode == 1
    ok = ok and "FAIL" in faulted_triangle.stdout

    runs = [
        subprocess.run(
            CLI + ["coeffs", "--family", "classical-bernoulli", "--n", "20",
                   "--format", "json"],
            capture_output=True, text=True, env=clean_env(),
        )
        for _ in range(2)
    ]
    ok = ok and runs[0].returncode == runs[1].returncode == 0
    ok = ok and runs[0].stdout == runs[1].stdout
    ok = ok and json.loads(runs[0].stdout)["constants"][12] == "-691/2730"

    elapsed = time.perf_counter() - start
    report(capsys, 8, "CLI verify, fault injection, byte-identical output",
           ok, elapsed, None)
    assert clean.returncode == 0, clean.stdout + clean.stderr
    assert faulted_sum.returncode == 1
    assert "5,3" in faulted_sum.stdout
    assert faulted_triangle.returncode == 1
    assert "FAIL" in faulted_triangle.stdout
    assert runs[0].stdout == runs[1].stdout
    assert ok
