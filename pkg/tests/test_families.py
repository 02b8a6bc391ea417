from fractions import Fraction
from math import comb, factorial

import pytest

from appellpoly.combinatorics import compositions
from appellpoly.errors import DomainError
from appellpoly.families import (
    FamilySpec,
    apostol_euler_constants,
    bernoulli_order_constants,
    bstar_constants,
    c_mnk,
    gen_bernoulli_constants,
    parse_family,
)
from appellpoly.moments import beta_moments, sum_moment_table
from appellpoly.sequences import constants_stirling_form, oracle_constants
from appellpoly.stirling import stirling_classical

BERNOULLI = [
    Fraction(1),
    Fraction(-1, 2),
    Fraction(1, 6),
    Fraction(0),
    Fraction(-1, 30),
]


def c_mnk_enumerated(m, n, k):
    """Literal term-by-term sum over compositions; small instances only."""
    total = Fraction(0)
    for parts in compositions(n, k):
        term = Fraction(1)
        for j in parts:
            term /= factorial(m + j)
        total += term
    return factorial(n) * Fraction(factorial(m)) ** k * total


class TestCmnk:
    def test_k_zero_is_delta(self):
        assert c_mnk(2, 0, 0) == 1
        for n in range(1, 5):
            assert c_mnk(2, n, 0) == 0

    def test_shape_one_closed_form(self):
        for n in range(8):
            for k in range(8):
                expected = Fraction(stirling_classical(n + k, k), comb(n + k, n))
                assert c_mnk(1, n, k) == expected

    def test_single_summand_is_moment(self):
        assert c_mnk(2, 3, 1) == Fraction(1, 10)

    def test_matches_literal_enumeration(self):
        for m in (1, 2, 3):
            for n in range(6):
                for k in range(6):
                    assert c_mnk(m, n, k) == c_mnk_enumerated(m, n, k)

    def test_matches_sum_moment_table(self):
        for m in (1, 2, 4):
            table = sum_moment_table(beta_moments(m, 8), 8)
            for k in range(9):
                for n in range(9):
                    assert c_mnk(m, n, k) == table.value(k, n)

    def test_shape_validated(self):
        with pytest.raises(DomainError):
            c_mnk(0, 1, 1)
        with pytest.raises(ValueError):
            c_mnk(1, -1, 0)


class TestGenBernoulli:
    def test_order_zero(self):
        assert gen_bernoulli_constants(0, 3, 5) == [1, 0, 0, 0, 0, 0]

    def test_shape_one_order_one_is_classical(self):
        assert gen_bernoulli_constants(1, 1, 4) == BERNOULLI

    def test_order_two_matches_oracle(self):
        expected = oracle_constants(beta_moments(1, 6), 2, 6)
        assert gen_bernoulli_constants(2, 1, 6) == expected

    def test_matches_pipeline_on_grid(self):
        for t in (Fraction(-1), Fraction(1, 2), Fraction(3)):
            for m in (1, 2, 5):
                mu = beta_moments(m, 8)
                assert gen_bernoulli_constants(t, m, 8) == constants_stirling_form(
                    mu, t, 8
                )

    def test_shape_validated(self):
        with pytest.raises(DomainError):
            gen_bernoulli_constants(1, 0, 3)


class TestBernoulliOrder:
    def test_order_one_is_classical(self):
        values = bernoulli_order_constants(1, 12)
        assert values[:5] == BERNOULLI
        assert values[12] == Fraction(-691, 2730)

    def test_odd_entries_vanish(self):
        values = bernoulli_order_constants(1, 19)
        for n in range(3, 20, 2):
            assert values[n] == 0

    def test_equals_shape_one_family(self):
        for t in (Fraction(-2), Fraction(1, 2), Fraction(3)):
            assert bernoulli_order_constants(t, 8) == gen_bernoulli_constants(
                t, 1, 8
            )

    def test_half_order_matches_pipeline(self):
        mu = beta_moments(1, 8)
        assert bernoulli_order_constants(Fraction(1, 2), 8) == constants_stirling_form(
            mu, Fraction(1, 2), 8
        )


class TestApostolEuler:
    def test_degenerate_probability_gives_monomials(self):
        assert apostol_euler_constants(1, 0, 5) == [1, 0, 0, 0, 0, 0]

    def test_classical_euler_values(self):
        values = apostol_euler_constants(1, Fraction(1, 2), 5)
        assert values == [
            Fraction(1),
            Fraction(-1, 2),
            Fraction(0),
            Fraction(1, 4),
            Fraction(0),
            Fraction(-1, 2),
        ]

    def test_probability_range_enforced(self):
        with pytest.raises(DomainError):
            apostol_euler_constants(1, Fraction(3, 2), 3)


class TestBstar:
    def test_probability_one_collapses_to_bernoulli(self):
        assert bstar_constants(1, 1, 12) == bernoulli_order_constants(1, 12)
        assert bstar_constants(Fraction(-1, 2), 1, 8) == bernoulli_order_constants(
            Fraction(-1, 2), 8
        )

    def test_degenerate_probability_gives_monomials(self):
        assert bstar_constants(2, 0, 5) == [1, 0, 0, 0, 0, 0]

    def test_half_probability_matches_oracle(self):
        from appellpoly.moments import bernoulli_times_uniform_moments

        mu = bernoulli_times_uniform_moments(Fraction(1, 2), 10)
        assert bstar_constants(1, Fraction(1, 2), 10) == oracle_constants(mu, 1, 10)

    def test_frozen_half_probability_values(self):
        values = bstar_constants(1, Fraction(1, 2), 6)
        assert values == [
            Fraction(1),
            Fraction(-1, 4),
            Fraction(-1, 24),
            Fraction(1, 32),
            Fraction(17, 480),
            Fraction(-1, 384),
            Fraction(-251, 5376),
        ]

    def test_probability_range_enforced(self):
        with pytest.raises(DomainError):
            bstar_constants(1, Fraction(-1, 3), 3)


class TestFamilySpec:
    @pytest.mark.parametrize(
        "selector, kind, t",
        [
            ("classical-bernoulli", "classical-bernoulli", Fraction(1)),
            ("classical-euler", "classical-euler", Fraction(1)),
            ("bernoulli-order:1/2", "bernoulli-order", Fraction(1, 2)),
            ("gen-bernoulli:-2,3", "gen-bernoulli", Fraction(-2)),
            ("apostol-euler:1,1/3", "apostol-euler", Fraction(1)),
            ("bstar:2,1", "bstar", Fraction(2)),
        ],
    )
    def test_parse_round_trip(self, selector, kind, t):
        spec = parse_family(selector)
        assert spec.kind == kind
        assert spec.t == t
        assert parse_family(spec.label) == spec

    def test_moment_sequence_mapping(self):
        assert parse_family("gen-bernoulli:1,3").moment_sequence(4) == beta_moments(3, 4)
        assert parse_family("classical-bernoulli").moment_sequence(4) == beta_moments(1, 4)
        euler = parse_family("classical-euler").moment_sequence(4)
        assert euler.tag == "bernoulli:1/2"
        bstar = parse_family("bstar:1,1/3").moment_sequence(4)
        assert bstar.tag == "bernoulli-times-uniform:1/3"

    def test_closed_forms_match_pipeline(self):
        selectors = (
            "classical-bernoulli",
            "classical-euler",
            "gen-bernoulli:1/2,2",
            "bernoulli-order:-1",
            "apostol-euler:2,1/3",
            "bstar:-1/2,1/2",
        )
        for selector in selectors:
            spec = parse_family(selector)
            mu = spec.moment_sequence(8)
            assert spec.closed_form_constants(8) == constants_stirling_form(
                mu, spec.t, 8
            ), selector

    @pytest.mark.parametrize(
        "selector",
        [
            "mystery",
            "classical-bernoulli:1",
            "classical-euler:1,2",
            "bernoulli-order",
            "bernoulli-order:1,2",
            "gen-bernoulli:1",
            "apostol-euler:1",
            "bstar:1,2,3",
            "gen-bernoulli:1,0.5",
        ],
    )
    def test_malformed_selectors_are_usage_errors(self, selector):
        with pytest.raises(ValueError):
            parse_family(selector)

    def test_domain_violations_are_flagged(self):
        with pytest.raises(DomainError):
            parse_family("apostol-euler:1,5/4")
        with pytest.raises(DomainError):
            parse_family("gen-bernoulli:1,3/2")
        with pytest.raises(DomainError):
            parse_family("gen-bernoulli:1,0")
        with pytest.raises(DomainError):
            FamilySpec("bstar", t=Fraction(1), beta=Fraction(2))

    def test_labels_are_canonical(self):
        assert parse_family("apostol-euler:2/4,1/2").label == "apostol-euler:1/2,1/2"
        assert parse_family("classical-euler").label == "classical-euler"
