from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from appellpoly.differences import (
    delta_derivative_form,
    delta_steps,
    delta_steps_subset_sum,
    difference_poly,
    expected_delta_monomial,
)
from appellpoly.moments import point_mass_one, uniform01
from appellpoly.polynomials import Polynomial
from appellpoly.stirling import stirling_prob_defsum
from appellpoly.verification import named_distributions

coeff = st.fractions(min_value=-6, max_value=6, max_denominator=6)
poly = st.lists(coeff, min_size=1, max_size=9).map(Polynomial.from_coeffs)
steps = st.lists(coeff, min_size=0, max_size=4)
point = st.fractions(min_value=-4, max_value=4, max_denominator=5)


class TestBasics:
    def test_single_step_on_square(self):
        p = Polynomial.monomial(2)
        assert delta_steps(p, [Fraction(1)], 0) == 1

    def test_triple_unit_step_on_cube(self):
        p = Polynomial.monomial(3)
        assert delta_steps(p, [1, 1, 1], 0) == 6

    def test_no_steps_is_identity(self):
        p = Polynomial.from_coeffs([1, 2, 3])
        x = Fraction(5, 7)
        assert delta_steps(p, [], x) == p.evaluate(x)
        assert delta_steps_subset_sum(p, [], x) == p.evaluate(x)

    def test_difference_poly_drops_degree(self):
        p = Polynomial.from_coeffs([0, 0, 0, 1])
        q = difference_poly(p, [Fraction(1, 2)])
        assert q.degree == 2

    def test_equal_steps_reduce_to_classical_difference(self):
        p = Polynomial.from_coeffs([2, -1, Fraction(1, 3), 5])
        alpha = Fraction(2, 3)
        x = Fraction(-1, 2)
        for m in range(5):
            classical = sum(
                comb(m, k) * Fraction(-1) ** (m - k) * p.evaluate(x + alpha * k)
                for k in range(m + 1)
            )
            assert delta_steps(p, [alpha] * m, x) == classical

    def test_annihilates_lower_degree(self):
        for degree in range(5):
            p = Polynomial.monomial(degree, Fraction(3, 2))
            steps_list = [Fraction(j + 1, 3) for j in range(degree + 1)]
            assert delta_steps(p, steps_list, Fraction(1, 4)) == 0

    def test_leading_term_survives_exactly(self):
        # after deg(p) differences only a1*...*am * lead * m! remains
        p = Polynomial.from_coeffs([4, 0, 0, Fraction(5, 2)])
        steps_list = [Fraction(1, 2), Fraction(2), Fraction(-1, 3)]
        value = delta_steps(p, steps_list, Fraction(7))
        product = Fraction(1, 2) * 2 * Fraction(-1, 3)
        assert value == product * Fraction(5, 2) * factorial(3)


class TestFormAgreement:
    @given(poly, steps, point)
    @settings(deadline=None, max_examples=60)
    def test_iterate_equals_subset_sum(self, p, step_list, x):
        assert delta_steps(p, step_list, x) == delta_steps_subset_sum(
            p, step_list, x
        )

    @given(poly, steps, point)
    @settings(deadline=None, max_examples=60)
    def test_iterate_equals_derivative_form(self, p, step_list, x):
        assert delta_steps(p, step_list, x) == delta_derivative_form(
            p, step_list, x
        )

    @given(poly, steps, point, st.randoms(use_true_random=False))
    @settings(deadline=None, max_examples=60)
    def test_step_order_irrelevant(self, p, step_list, x, rng):
        shuffled = step_list[:]
        rng.shuffle(shuffled)
        assert delta_steps(p, step_list, x) == delta_steps(p, shuffled, x)


class TestExpectedMonomial:
    def test_zero_steps_is_delta(self):
        mu = uniform01(5)
        assert expected_delta_monomial(mu, 0, 0) == 1
        for n in range(1, 5):
            assert expected_delta_monomial(mu, n, 0) == 0

    def test_point_mass_example(self):
        assert expected_delta_monomial(point_mass_one(4), 4, 2) == 14

    def test_one_step_beyond_degree_vanishes(self):
        for mu in (uniform01(7), point_mass_one(7)):
            for n in range(7):
                assert expected_delta_monomial(mu, n, n + 1) == 0

    def test_matches_scaled_stirling(self):
        for mu in named_distributions(8):
            for n in range(9):
                for m in range(n + 1):
                    assert expected_delta_monomial(mu, n, m) == factorial(
                        m
                    ) * stirling_prob_defsum(mu, n, m), (mu.tag, n, m)

    def test_negative_indices_rejected(self):
        with pytest.raises(ValueError):
            expected_delta_monomial(uniform01(3), -1, 0)
        with pytest.raises(ValueError):
            expected_delta_monomial(uniform01(3), 0, -1)
