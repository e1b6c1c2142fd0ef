"""Degenerate Bernoulli numbers and polynomials: all routes against each other
and against frozen exact values."""

from fractions import Fraction
from math import comb

import pytest

from degenbern.bernoulli import (
    carlitz_beta,
    carlitz_beta_gf,
    classical_bernoulli,
    gen_beta,
    gen_beta_classical_limit,
    gen_beta_eulerian,
    gen_beta_gf,
    gen_beta_integral,
    gen_beta_poly,
    gen_beta_poly_derivative,
    gen_beta_poly_gf,
    gen_beta_poly_stirling,
    gen_beta_rstirling,
    gen_beta_rstirling_simplified,
    gen_beta_stirling_sum,
    verify_remark_identities,
)
from degenbern.exactcore import PolyLambda, PolyXOverLambda
from degenbern.triangles import falling_lambda

LAM = PolyLambda.lam()
X = PolyXOverLambda.x()


def pl(*coeffs):
    return PolyLambda([Fraction(c) for c in coeffs])


class TestCarlitzNumbers:
    def test_frozen_values(self):
        assert carlitz_beta(0) == PolyLambda.one()
        assert carlitz_beta(1) == pl(Fraction(-1, 2), Fraction(1, 2))
        assert carlitz_beta(2) == pl(Fraction(1, 6), 0, Fraction(-1, 6))

    def test_generating_function_route(self):
        for n in range(13):
            assert carlitz_beta_gf(n) == carlitz_beta(n)

    def test_gf_order_must_cover_n(self):
        assert carlitz_beta_gf(3, order=3) == carlitz_beta(3)
        with pytest.raises(ValueError, match="insufficient series order"):
            carlitz_beta_gf(5, order=4)

    def test_lambda_degree_bound(self):
        for n in range(15):
            assert carlitz_beta(n).degree <= n

    def test_classical_limit_matches_recurrence(self):
        for n in range(21):
            assert carlitz_beta(n).evaluate(Fraction(0)) == classical_bernoulli(n)

    def test_classical_bernoulli_values(self):
        assert classical_bernoulli(0) == 1
        assert classical_bernoulli(1) == Fraction(-1, 2)
        assert classical_bernoulli(2) == Fraction(1, 6)
        assert classical_bernoulli(12) == Fraction(-691, 2730)
        assert all(classical_bernoulli(n) == 0 for n in range(3, 20, 2))

    def test_negative_index_rejected(self):
        with pytest.raises(ValueError, match="parameter out of range"):
            carlitz_beta(-1)


class TestGeneralizedNumbers:
    def test_frozen_values(self):
        assert gen_beta(1, 1) == pl(Fraction(-1, 3), Fraction(1, 3))
        assert gen_beta(2, 1) == pl(0, Fraction(1, 6), Fraction(-1, 6))
        assert gen_beta(2, 2) == pl(Fraction(-1, 20), Fraction(1, 5), Fraction(-3, 20))
        assert gen_beta(3, 1) == pl(
            Fraction(1, 15), Fraction(-1, 15), Fraction(-4, 15), Fraction(4, 15)
        )
        assert gen_beta(3, 2) == pl(
            Fraction(1, 20), Fraction(1, 20), Fraction(-7, 20), Fraction(1, 4)
        )

    def test_p_zero_is_carlitz(self):
        for n in range(13):
            assert gen_beta(n, 0) == carlitz_beta(n)

    def test_p_minus_one_closed_form(self):
        for n in range(13):
            assert gen_beta(n, -1) == falling_lambda(LAM - 1, n)

    def test_n_zero_is_one(self):
        for p in range(-1, 6):
            assert gen_beta(0, p) == PolyLambda.one()

    def test_sum_gf_and_eulerian_routes_agree(self):
        for n in range(11):
            for p in range(4):
                reference = gen_beta(n, p)
                assert gen_beta_stirling_sum(n, p) == reference
                assert gen_beta_gf(n, p) == reference
                assert gen_beta_eulerian(n, p) == reference

    def test_integral_route_agrees(self):
        for n in range(9):
            for p in range(4):
                assert gen_beta_integral(n, p) == gen_beta(n, p)

    def test_rstirling_route_is_polynomial_and_agrees(self):
        for n in range(1, 9):
            for p in range(4):
                raw = gen_beta_rstirling(n, p)
                assert raw.is_polynomial()
                assert raw.to_poly() == gen_beta(n, p)
                assert gen_beta_rstirling_simplified(n, p) == gen_beta(n, p)

    def test_rstirling_route_holds_at_p_zero(self):
        """The two-term form stays valid down to p = 0, where it reproduces
        the unrestricted numbers."""
        for n in range(1, 11):
            assert gen_beta_rstirling_simplified(n, 0) == carlitz_beta(n)

    def test_classical_limit_formula(self):
        assert gen_beta_classical_limit(1, 1) == Fraction(-1, 3)
        for n in range(1, 11):
            for p in range(5):
                expected = gen_beta(n, p).evaluate(Fraction(0))
                assert gen_beta_classical_limit(n, p) == expected

    def test_lambda_degree_bound(self):
        for n in range(11):
            for p in range(4):
                assert gen_beta(n, p).degree <= n

    def test_parameter_validation(self):
        with pytest.raises(ValueError, match="parameter out of range"):
            gen_beta(-1, 0)
        with pytest.raises(ValueError, match="parameter out of range"):
            gen_beta(2, -2)
        with pytest.raises(ValueError, match="parameter out of range"):
            gen_beta_rstirling(0, 1)
        with pytest.raises(ValueError, match="parameter out of range"):
            gen_beta_rstirling(2, -1)
        with pytest.raises(ValueError, match="insufficient series order"):
            gen_beta_gf(6, 1, order=5)


class TestPolynomials:
    def test_frozen_values(self):
        got = gen_beta_poly(1, 1)
        assert got == X + PolyXOverLambda.constant(pl(Fraction(-1, 3), Fraction(1, 3)))
        got = gen_beta_poly(2, 1)
        x_coeff = pl(Fraction(-2, 3), Fraction(-1, 3))
        assert got.coefficient(2) == PolyLambda.one()
        assert got.coefficient(1) == x_coeff
        assert got.coefficient(0) == gen_beta(2, 1)

    def test_monic_of_degree_n(self):
        for n in range(9):
            for p in range(3):
                poly = gen_beta_poly(n, p)
                assert poly.degree == n
                assert poly.coefficient(n) == PolyLambda.one()

    def test_value_at_zero_is_number(self):
        for n in range(9):
            for p in range(3):
                assert gen_beta_poly(n, p).evaluate(Fraction(0)) == gen_beta(n, p)

    def test_stirling_and_gf_routes_agree(self):
        for n in range(9):
            for p in range(3):
                reference = gen_beta_poly(n, p)
                assert gen_beta_poly_stirling(n, p) == reference
                assert gen_beta_poly_gf(n, p) == reference

    def test_derivative_route(self):
        for n in range(1, 9):
            for p in range(3):
                assert gen_beta_poly(n, p).derivative() == gen_beta_poly_derivative(n, p)

    def test_derivative_route_needs_positive_degree(self):
        with pytest.raises(ValueError, match="parameter out of range"):
            gen_beta_poly_derivative(0, 0)

    def test_binomial_expansion_definition(self):
        """The polynomial is the binomial convolution of numbers with the
        degenerate falling-factorial basis."""
        for n in range(7):
            for p in range(3):
                acc = PolyXOverLambda.zero()
                for l in range(n + 1):
                    term = falling_lambda(X, n - l) * gen_beta(l, p)
                    acc = acc + term * comb(n, l)
                assert acc == gen_beta_poly(n, p)


class TestRemarkIdentities:
    def test_all_hold_for_first_order(self):
        report = verify_remark_identities(1, 0, 2)
        assert report.addition
        assert report.difference
        assert report.multiplication_step_ratio
        assert report.multiplication_step_shift

    def test_shift_reading_fails_from_second_order(self):
        for n in (2, 3, 4):
            report = verify_remark_identities(n, 0, 2)
            assert report.addition
            assert report.difference
            assert report.multiplication_step_ratio
            assert not report.multiplication_step_shift

    def test_other_parameters(self):
        for m in (2, 3):
            for p in (0, 1):
                report = verify_remark_identities(3, p, m)
                assert report.multiplication_step_ratio
                assert not report.multiplication_step_shift

    def test_multiplier_must_be_at_least_two(self):
        with pytest.raises(ValueError, match="parameter out of range"):
            verify_remark_identities(2, 0, 1)
