"""Executable identity checks, grouped into the suites behind `verify`.

Each check compares two or more independent computations of the same exact
quantity and reports the first mismatching entry with both values.  Checks
are deterministic (randomized ones use a fixed seed) and the report is
ordered by check name, so identical invocations produce identical output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .differences import (
    delta_derivative_form,
    delta_steps,
    delta_steps_subset_sum,
    expected_delta_monomial,
)
from .egf import TruncatedEGF, egf_from_moments, egf_mul, egf_one, egf_pow
from .families import (
    apostol_euler_constants,
    bernoulli_order_constants,
    bstar_constants,
    c_mnk,
    gen_bernoulli_constants,
)
from .moments import (
    MomentSequence,
    bernoulli_moments,
    bernoulli_times_uniform_moments,
    beta_moments,
    point_mass_one,
    sum_moment_table,
    uniform01,
)
from .polynomials import Polynomial
from .sequences import (
    build_polynomials,
    constants_binomial_route,
    constants_moment_form,
    constants_stirling_form,
    oracle_constants,
)
from .stirling import (
    stirling_classical,
    stirling_prob_defsum,
    stirling_prob_gf,
    stirling_prob_lemma2,
)

SUITES = ("all", "stirling", "appell", "families", "diffops")

T_GRID = (
    Fraction(-2),
    Fraction(-1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(3),
)
BETA_GRID = (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))
SHAPE_GRID = (1, 2, 3, 4, 5)
RANDOM_SEED = 1729

BERNOULLI_NUMBERS = (
    Fraction(1),
    Fraction(-1, 2),
    Fraction(1, 6),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(1, 42),
    Fraction(0),
    Fraction(-1, 30),
    Fraction(0),
    Fraction(5, 66),
    Fraction(0),
    Fraction(-691, 2730),
)
EULER_CONSTANTS = (
    Fraction(1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 4),
    Fraction(0),
    Fraction(-1, 2),
)


def named_distributions(order: int) -> list[MomentSequence]:
    """The standard grid: point mass, beta(1..5), Bernoulli and product laws."""
    dists = [point_mass_one(order)]
    dists.extend(beta_moments(m, order) for m in SHAPE_GRID)
    dists.extend(
        bernoulli_moments(b, order)
        for b in (Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))
    )
    dists.extend(
        bernoulli_times_uniform_moments(b, order)
        for b in (Fraction(1, 3), Fraction(1, 2), Fraction(1))
    )
    return dists


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: str
    passed: bool
    detail: str = ""


def _result(name: str, params: str, detail: str | None) -> CheckResult:
    if detail is None:
        return CheckResult(name, params, True)
    return CheckResult(name, params, False, detail)


# stirling suite


def check_three_route_equality(
    n_max: int, extra: tuple[MomentSequence, ...] = ()
) -> CheckResult:
    name = "stirling/three-route-equality"
    dists = named_distributions(n_max) + list(extra)
    params = f"{len(dists)} distributions, 0 <= m <= n <= {n_max}"
    for mu in dists:
        for n in range(n_max + 1):
            for m in range(n + 1):
                a = stirling_prob_defsum(mu, n, m)
                b = stirling_prob_gf(mu, n, m, n_max)
                c = stirling_prob_lemma2(mu, n, m)
                if not a == b == c:
                    return _result(
                        name,
                        params,
                        f"{mu.tag} S_Y({n},{m}): definition-sum={a} "
                        f"generating-function={b} lemma2-expansion={c}",
                    )
    return _result(name, params, None)


def check_classical_reduction(n_max: int) -> CheckResult:
    name = "stirling/classical-reduction"
    params = f"Y = 1, 0 <= m <= n <= {n_max}"
    mu = point_mass_one(n_max)
    for n in range(n_max + 1):
        for m in range(n + 1):
            a = stirling_prob_defsum(mu, n, m)
            b = Fraction(stirling_classical(n, m))
            if a != b:
                return _result(
                    name,
                    params,
                    f"S({n},{m}): definition-sum={a} recurrence={b}",
                )
    return _result(name, params, None)


def check_uniform_representation(n_max: int) -> CheckResult:
    """S(n,m) = C(n,m) E(U_1+...+U_m)^(n-m) with uniform-sum moments."""
    name = "stirling/classical-uniform-representation"
    params = f"0 <= m <= n <= {n_max}"
    table = sum_moment_table(uniform01(n_max), n_max)
    for n in range(n_max + 1):
        for m in range(n + 1):
            a = Fraction(stirling_classical(n, m))
            b = comb(n, m) * table.value(m, n - m)
            if a != b:
                return _result(
                    name, params, f"S({n},{m}): recurrence={a} uniform-moment={b}"
                )
    return _result(name, params, None)


def check_bernoulli_scaling(n_max: int) -> CheckResult:
    """S_X(n,m) = beta^m S(n,m) for an indicator X with P(X=1) = beta."""
    name = "stirling/bernoulli-scaling"
    betas = (Fraction(1), Fraction(1, 2), Fraction(1, 3))
    params = f"beta in {{1, 1/2, 1/3}}, 0 <= m <= n <= {n_max}"
    for beta in betas:
        mu = bernoulli_moments(beta, n_max)
        for n in range(n_max + 1):
            for m in range(n + 1):
                a = stirling_prob_defsum(mu, n, m)
                b = beta**m * stirling_classical(n, m)
                if a != b:
                    return _result(
                        name,
                        params,
                        f"beta={beta} ({n},{m}): definition-sum={a} scaled={b}",
                    )
    return _result(name, params, None)


def check_product_scaling(n_max: int) -> CheckResult:
    """S_{XY}(n,m) = beta^m S_Y(n,m) for Y uniform and X an indicator."""
    name = "stirling/product-scaling"
    betas = (Fraction(1), Fraction(1, 2), Fraction(1, 3))
    params = f"Y uniform, beta in {{1, 1/2, 1/3}}, 0 <= m <= n <= {n_max}"
    uniform = uniform01(n_max)
    for beta in betas:
        mu = bernoulli_times_uniform_moments(beta, n_max)
        for n in range(n_max + 1):
            for m in range(n + 1):
                a = stirling_prob_defsum(mu, n, m)
                b = beta**m * stirling_prob_defsum(uniform, n, m)
                if a != b:
                    return _result(
                        name,
                        params,
                        f"beta={beta} ({n},{m}): definition-sum={a} scaled={b}",
                    )
    return _result(name, params, None)


def run_stirling_suite(
    n_max: int, extra: tuple[MomentSequence, ...] = ()
) -> list[CheckResult]:
    return [
        check_three_route_equality(n_max, extra),
        check_classical_reduction(n_max),
        check_uniform_representation(n_max),
        check_bernoulli_scaling(n_max),
        check_product_scaling(n_max),
    ]


# appell suite


def check_four_route_equality(
    n_max: int, extra: tuple[MomentSequence, ...] = ()
) -> CheckResult:
    name = "appell/four-route-equality"
    dists = named_distributions(n_max) + list(extra)
    params = f"{len(dists)} distributions, {len(T_GRID)} orders, n <= {n_max}"
    for mu in dists:
        for t in T_GRID:
            routes = {
                "stirling-form": constants_stirling_form(mu, t, n_max),
                "moment-form": constants_moment_form(mu, t, n_max),
                "binomial-route": constants_binomial_route(mu, t, n_max),
                "series-oracle": oracle_constants(mu, t, n_max),
            }
            reference = routes["series-oracle"]
            for label, values in routes.items():
                for n in range(n_max + 1):
                    if values[n] != reference[n]:
                        return _result(
                            name,
                            params,
                            f"{mu.tag} t={t} n={n}: {label}={values[n]} "
                            f"series-oracle={reference[n]}",
                        )
    return _result(name, params, None)


def check_derivative_identity(n_max: int) -> CheckResult:
    name = "appell/derivative-identity"
    dists = named_distributions(n_max)
    params = f"{len(dists)} distributions, {len(T_GRID)} orders, n <= {n_max}"
    for mu in dists:
        for t in T_GRID:
            polys = build_polynomials(constants_stirling_form(mu, t, n_max), n_max)
            for n in range(1, n_max + 1):
                lhs = polys[n].derivative()
                rhs = n * polys[n - 1]
                if lhs != rhs:
                    return _result(
                        name,
                        params,
                        f"{mu.tag} t={t} n={n}: A_{n}' = {lhs.render()} but "
                        f"{n}*A_{n - 1} = {rhs.render()}",
                    )
    return _result(name, params, None)


def check_generating_identity(n_max: int) -> CheckResult:
    """A_n(t;x) equals the binomial convolution of constants with monomials."""
    name = "appell/generating-identity"
    dists = named_distributions(n_max)
    params = f"{len(dists)} distributions, {len(T_GRID)} orders, n <= {n_max}"
    for mu in dists:
        for t in T_GRID:
            constants = constants_stirling_form(mu, t, n_max)
            polys = build_polynomials(constants, n_max)
            for n in range(n_max + 1):
                product = Polynomial.from_coeffs([0])
                for k in range(n + 1):
                    product = product + constants[k] * Polynomial.monomial(
                        n - k, comb(n, k)
                    )
                if product != polys[n]:
                    return _result(
                        name,
                        params,
                        f"{mu.tag} t={t} n={n}: convolution={product.render()} "
                        f"direct={polys[n].render()}",
                    )
    return _result(name, params, None)


def check_order_additivity(n_max: int) -> CheckResult:
    """Constants for t1+t2 are the EGF product of the t1 and t2 constants."""
    name = "appell/order-additivity"
    pairs = (
        (Fraction(1), Fraction(1)),
        (Fraction(1, 2), Fraction(1, 2)),
        (Fraction(-1), Fraction(2)),
        (Fraction(1, 2), Fraction(-2)),
    )
    dists = (
        uniform01(n_max),
        beta_moments(3, n_max),
        bernoulli_moments(Fraction(1, 2), n_max),
        bernoulli_times_uniform_moments(Fraction(1, 2), n_max),
    )
    params = f"{len(dists)} distributions, {len(pairs)} order pairs, n <= {n_max}"
    for mu in dists:
        for t1, t2 in pairs:
            a = TruncatedEGF(tuple(constants_stirling_form(mu, t1, n_max)))
            b = TruncatedEGF(tuple(constants_stirling_form(mu, t2, n_max)))
            combined = egf_mul(a, b)
            direct = constants_stirling_form(mu, t1 + t2, n_max)
            for n in range(n_max + 1):
                if combined.coefficient(n) != direct[n]:
                    return _result(
                        name,
                        params,
                        f"{mu.tag} t1={t1} t2={t2} n={n}: "
                        f"product={combined.coefficient(n)} direct={direct[n]}",
                    )
    return _result(name, params, None)


def run_appell_suite(
    n_max: int, extra: tuple[MomentSequence, ...] = ()
) -> list[CheckResult]:
    return [
        check_four_route_equality(n_max, extra),
        check_derivative_identity(n_max),
        check_generating_identity(n_max),
        check_order_additivity(n_max),
    ]


# families suite


def _family_grid(n_max: int):
    """(label, closed-form constants, moment sequence, t) for every family."""
    for t in T_GRID:
        for m in SHAPE_GRID:
            yield (
                f"gen-bernoulli:{t},{m}",
                gen_bernoulli_constants(t, m, n_max),
                beta_moments(m, n_max),
                t,
            )
        yield (
            f"bernoulli-order:{t}",
            bernoulli_order_constants(t, n_max),
            uniform01(n_max),
            t,
        )
        for beta in BETA_GRID:
            yield (
                f"apostol-euler:{t},{beta}",
                apostol_euler_constants(t, beta, n_max),
                bernoulli_moments(beta, n_max),
                t,
            )
            yield (
                f"bstar:{t},{beta}",
                bstar_constants(t, beta, n_max),
                bernoulli_times_uniform_moments(beta, n_max),
                t,
            )


def check_family_pipeline_agreement(n_max: int) -> CheckResult:
    name = "families/closed-form-matches-pipeline"
    params = (
        f"t grid {len(T_GRID)}, shapes 1..5, beta grid {len(BETA_GRID)}, "
        f"n <= {n_max}"
    )
    for label, closed, mu, t in _family_grid(n_max):
        production = constants_stirling_form(mu, t, n_max)
        oracle = oracle_constants(mu, t, n_max)
        for n in range(n_max + 1):
            if not closed[n] == production[n] == oracle[n]:
                return _result(
                    name,
                    params,
                    f"{label} n={n}: closed-form={closed[n]} "
                    f"stirling-form={production[n]} series-oracle={oracle[n]}",
                )
    return _result(name, params, None)


def check_apostol_euler_generating(n_max: int) -> CheckResult:
    """Constants' EGF times (1 + beta(e^z - 1))^t must be the constant 1."""
    name = "families/apostol-euler-generating-identity"
    params = f"t grid {len(T_GRID)}, beta grid {len(BETA_GRID)}, order {n_max}"
    one = egf_one(n_max)
    for t in T_GRID:
        for beta in BETA_GRID:
            constants = TruncatedEGF(tuple(apostol_euler_constants(t, beta, n_max)))
            mgf = egf_from_moments(bernoulli_moments(beta, n_max), n_max)
            product = egf_mul(constants, egf_pow(mgf, t))
            for n in range(n_max + 1):
                if product.coefficient(n) != one.coefficient(n):
                    return _result(
                        name,
                        params,
                        f"t={t} beta={beta} n={n}: "
                        f"product={product.coefficient(n)} expected={one.coefficient(n)}",
                    )
    return _result(name, params, None)


def check_family_reductions(n_max: int) -> CheckResult:
    """bstar at beta = 1 and gen-bernoulli at m = 1 both collapse to order-t."""
    name = "families/reductions"
    params = f"t grid {len(T_GRID)}, n <= {n_max}"
    for t in T_GRID:
        order_t = bernoulli_order_constants(t, n_max)
        collapsed = bstar_constants(t, Fraction(1), n_max)
        shaped = gen_bernoulli_constants(t, 1, n_max)
        for n in range(n_max + 1):
            if collapsed[n] != order_t[n]:
                return _result(
                    name,
                    params,
                    f"t={t} n={n}: bstar(beta=1)={collapsed[n]} "
                    f"bernoulli-order={order_t[n]}",
                )
            if shaped[n] != order_t[n]:
                return _result(
                    name,
                    params,
                    f"t={t} n={n}: gen-bernoulli(m=1)={shaped[n]} "
                    f"bernoulli-order={order_t[n]}",
                )
    return _result(name, params, None)


def check_beta_sum_moments(n_max: int) -> CheckResult:
    """C(m,n,k) from the factorial sum equals the beta(m) iid-sum moment."""
    name = "families/beta-sum-moment-table"
    bound = min(n_max, 12)
    params = f"shapes 1..5, 0 <= k, n <= {bound}"
    for m in SHAPE_GRID:
        table = sum_moment_table(beta_moments(m, bound), bound)
        for k in range(bound + 1):
            for n in range(bound + 1):
                a = c_mnk(m, n, k)
                b = table.value(k, n)
                if a != b:
                    return _result(
                        name,
                        params,
                        f"m={m} k={k} n={n}: factorial-sum={a} convolution={b}",
                    )
    return _result(name, params, None)


def check_classical_values(n_max: int) -> CheckResult:
    """Frozen classical constants: Bernoulli numbers and Euler E_n(0)."""
    name = "families/classical-values"
    params = f"Bernoulli through {min(n_max, 12)}, Euler through {min(n_max, 5)}"
    bernoulli = bernoulli_order_constants(Fraction(1), n_max)
    for n in range(min(n_max, 12) + 1):
        if bernoulli[n] != BERNOULLI_NUMBERS[n]:
            return _result(
                name,
                params,
                f"B_{n}: computed={bernoulli[n]} expected={BERNOULLI_NUMBERS[n]}",
            )
    for n in range(3, min(n_max, 19) + 1, 2):
        if bernoulli[n] != 0:
            return _result(name, params, f"B_{n}: computed={bernoulli[n]} expected=0")
    euler = apostol_euler_constants(Fraction(1), Fraction(1, 2), n_max)
    for n in range(min(n_max, 5) + 1):
        if euler[n] != EULER_CONSTANTS[n]:
            return _result(
                name,
                params,
                f"E_{n}(0): computed={euler[n]} expected={EULER_CONSTANTS[n]}",
            )
    return _result(name, params, None)


def run_families_suite(n_max: int) -> list[CheckResult]:
    return [
        check_family_pipeline_agreement(n_max),
        check_apostol_euler_generating(n_max),
        check_family_reductions(n_max),
        check_beta_sum_moments(n_max),
        check_classical_values(n_max),
    ]


# diffops suite


def _random_fraction(rng: random.Random, allow_zero: bool = True) -> Fraction:
    numerator = rng.randint(-6, 6)
    if not allow_zero:
        while numerator == 0:
            numerator = rng.randint(-6, 6)
    return Fraction(numerator, rng.randint(1, 6))


def _random_poly(rng: random.Random, degree: int) -> Polynomial:
    coeffs = [_random_fraction(rng) for _ in range(degree)]
    coeffs.append(_random_fraction(rng, allow_zero=False))
    return Polynomial(tuple(coeffs))


def check_vanishing(n_max: int, cases: int) -> CheckResult:
    """m = deg + 1 steps annihilate a polynomial, whatever the steps are."""
    name = "diffops/vanishing"
    params = f"{cases} cases, degree <= 8, seed {RANDOM_SEED}"
    rng = random.Random(RANDOM_SEED)
    for case in range(cases):
        degree = rng.randint(0, 8)
        p = _random_poly(rng, degree)
        steps = [_random_fraction(rng, allow_zero=False) for _ in range(degree + 1)]
        x = _random_fraction(rng)
        value = delta_steps(p, steps, x)
        if value != 0:
            return _result(
                name,
                params,
                f"case {case}: degree={degree} steps={steps} x={x} value={value}",
            )
    return _result(name, params, None)


def check_step_symmetry(n_max: int, cases: int) -> CheckResult:
    name = "diffops/step-permutation-symmetry"
    params = f"{cases} cases, degree <= 8, m <= 4, seed {RANDOM_SEED}"
    rng = random.Random(RANDOM_SEED + 1)
    for case in range(cases):
        p = _random_poly(rng, rng.randint(0, 8))
        steps = [_random_fraction(rng) for _ in range(rng.randint(0, 4))]
        shuffled = steps[:]
        rng.shuffle(shuffled)
        x = _random_fraction(rng)
        a = delta_steps(p, steps, x)
        b = delta_steps(p, shuffled, x)
        if a != b:
            return _result(
                name,
                params,
                f"case {case}: steps={steps} shuffled={shuffled} x={x}: {a} vs {b}",
            )
    return _result(name, params, None)


def check_iterate_subset_agreement(n_max: int, cases: int) -> CheckResult:
    name = "diffops/iterate-subset-agreement"
    params = f"{cases} cases, degree <= 8, m <= 4, seed {RANDOM_SEED}"
    rng = random.Random(RANDOM_SEED + 2)
    for case in range(cases):
        p = _random_poly(rng, rng.randint(0, 8))
        steps = [_random_fraction(rng) for _ in range(rng.randint(0, 4))]
        x = _random_fraction(rng)
        a = delta_steps(p, steps, x)
        b = delta_steps_subset_sum(p, steps, x)
        if a != b:
            return _result(
                name,
                params,
                f"case {case}: steps={steps} x={x}: iterate={a} subset-sum={b}",
            )
    return _result(name, params, None)


def check_derivative_representation(n_max: int, cases: int) -> CheckResult:
    name = "diffops/derivative-representation"
    params = f"{cases} cases, degree <= 8, m <= 4, seed {RANDOM_SEED}"
    rng = random.Random(RANDOM_SEED + 3)
    for case in range(cases):
        p = _random_poly(rng, rng.randint(0, 8))
        steps = [_random_fraction(rng) for _ in range(rng.randint(0, 4))]
        x = _random_fraction(rng)
        a = delta_steps(p, steps, x)
        b = delta_derivative_form(p, steps, x)
        if a != b:
            return _result(
                name,
                params,
                f"case {case}: steps={steps} x={x}: iterate={a} derivative-form={b}",
            )
    return _result(name, params, None)


def check_lemma2_bridge(n_max: int) -> CheckResult:
    """E D_{Y_1..Y_m} x^n at 0 equals m! S_Y(n,m), and 0 for m = n+1."""
    name = "diffops/lemma2-bridge"
    bound = min(n_max, 12)
    params = f"named distributions, 0 <= m <= n <= {bound}, plus m = n+1"
    for mu in named_distributions(bound + 1):
        for n in range(bound + 1):
            for m in range(n + 1):
                a = expected_delta_monomial(mu, n, m)
                b = factorial(m) * stirling_prob_defsum(mu, n, m)
                if a != b:
                    return _result(
                        name,
                        params,
                        f"{mu.tag} ({n},{m}): delta-form={a} stirling-form={b}",
                    )
            overshoot = expected_delta_monomial(mu, n, n + 1)
            if overshoot != 0:
                return _result(
                    name,
                    params,
                    f"{mu.tag} n={n} m={n + 1}: expected 0, got {overshoot}",
                )
    return _result(name, params, None)


def run_diffops_suite(n_max: int, cases: int = 50) -> list[CheckResult]:
    return [
        check_vanishing(n_max, cases),
        check_step_symmetry(n_max, cases),
        check_iterate_subset_agreement(n_max, cases),
        check_derivative_representation(n_max, cases),
        check_lemma2_bridge(n_max),
    ]


def run_suite(
    suite: str,
    n_max: int,
    cases: int = 50,
    extra: tuple[MomentSequence, ...] = (),
) -> list[CheckResult]:
    """Run one suite (or all) and return results sorted by check name."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; known: {SUITES}")
    results: list[CheckResult] = []
    if suite in ("all", "stirling"):
        results.extend(run_stirling_suite(n_max, extra))
    if suite in ("all", "appell"):
        results.extend(run_appell_suite(n_max, extra))
    if suite in ("all", "families"):
        results.extend(run_families_suite(n_max))
    if suite in ("all", "diffops"):
        results.extend(run_diffops_suite(n_max))
    return sorted(results, key=lambda r: r.name)


def report_document(suite: str, n_max: int, results: list[CheckResult]) -> dict:
    """JSON-ready report: every check with parameters, status, and detail."""
    return {
        "command": "verify",
        "suite": suite,
        "n": n_max,
        "passed": all(r.passed for r in results),
        "checks": [
            {
                "name": r.name,
                "params": r.params,
                "status": "pass" if r.passed else "fail",
                "detail": r.detail,
            }
            for r in results
        ],
    }


def render_report_text(suite: str, n_max: int, results: list[CheckResult]) -> str:
    lines = [f"# verify suite={suite} n={n_max}"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.name} ({r.params})"
        if not r.passed:
            line += f": {r.detail}"
        lines.append(line)
    overall = "pass" if all(r.passed for r in results) else "FAIL"
    lines.append(f"# overall: {overall}")
    return "\n".join(lines) + "\n"
