"""Truncated EGF series: arithmetic, composition, the named generating functions."""

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenbern.exactcore import PolyLambda, PolyXOverLambda
from degenbern.series import (
    TruncatedSeries,
    degenerate_exp,
    degenerate_log,
    gauss_2f1_formal,
)
from degenbern.triangles import falling_lambda, log_weight

LAM = PolyLambda.lam()


def series(*coeffs):
    return TruncatedSeries(PolyLambda, coeffs)


small_series = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=6), min_size=1, max_size=6
).map(lambda cs: TruncatedSeries(PolyLambda, cs))


class TestArithmetic:
    def test_one_plus_t_squared(self):
        assert series(1, 1, 0).mul(series(1, 1, 0)) == series(1, 2, 2)

    def test_mul_by_zero_absorbs(self):
        f = degenerate_exp(1, 5)
        assert f.mul(TruncatedSeries.zero(PolyLambda, 5)) == TruncatedSeries.zero(PolyLambda, 5)

    def test_exp_times_reciprocal_exp(self):
        n = 8
        prod = degenerate_exp(1, n).mul(degenerate_exp(-1, n))
        assert prod == TruncatedSeries.one(PolyLambda, n)

    def test_mul_truncates_to_smaller_order(self):
        assert series(1, 1).mul(series(1, 0, 0, 0)).order == 1

    def test_mul_requires_series(self):
        with pytest.raises(ValueError, match="use scale for ring elements"):
            series(1, 1).mul(2)

    def test_ring_mismatch_rejected(self):
        f = series(1, 1)
        g = TruncatedSeries(PolyXOverLambda, [1, 1])
        with pytest.raises(ValueError, match="coefficient ring mismatch"):
            f.mul(g)

    def test_geometric_series_by_division(self):
        n = 6
        one = TruncatedSeries.one(PolyLambda, n)
        denom = TruncatedSeries.from_ordinary(PolyLambda, [1, -1] + [0] * (n - 1))
        geo = one.div(denom)
        assert geo.coeffs == tuple(PolyLambda.constant(factorial(k)) for k in range(n + 1))

    def test_division_round_trip(self):
        f = degenerate_log(7)
        g = degenerate_exp(1, 7) - TruncatedSeries.one(PolyLambda, 7) + series(1, 0, 0, 0, 0, 0, 0, 0)
        assert f.mul(g).div(g) == f

    def test_f_over_f_is_one(self):
        f = degenerate_exp(1, 6)
        assert f.div(f) == TruncatedSeries.one(PolyLambda, 6)

    def test_non_unit_division_rejected(self):
        with pytest.raises(ValueError, match="series not invertible"):
            series(1, 1).div(series(0, 1))
        with pytest.raises(ValueError, match="series not invertible"):
            series(1, 1).div(TruncatedSeries(PolyLambda, [LAM, LAM]))

    def test_divide_by_t_shifts(self):
        em1 = degenerate_exp(1, 5) - TruncatedSeries.one(PolyLambda, 5)
        g = em1.divide_by_t()
        assert g.order == 4
        assert g.coefficient(0) == PolyLambda.one()
        # (e_l(t)-1)/t multiplied back by t recovers the original
        assert g.coefficient(1) == em1.coefficient(2) * Fraction(1, 2)

    @given(small_series, small_series)
    @settings(max_examples=40)
    def test_egf_ogf_consistency(self, f, g):
        """Binomial convolution in EGF form equals plain convolution in OGF form."""
        n = min(f.order, g.order)
        h = f.mul(g)
        fo, go = f.ordinary(), g.ordinary()
        for j in range(n + 1):
            direct = sum((fo[i] * go[j - i] for i in range(j + 1)), PolyLambda.zero())
            assert h.ordinary()[j] == direct

    @given(small_series)
    @settings(max_examples=40)
    def test_ordinary_round_trip(self, f):
        assert TruncatedSeries.from_ordinary(PolyLambda, f.ordinary()) == f


class TestCompose:
    def test_identity_outer(self):
        g = degenerate_log(6)
        t = TruncatedSeries.t(PolyLambda, 6)
        assert t.compose(g) == g

    def test_exp_log_inverse(self):
        n = 12
        h = degenerate_exp(1, n).compose(degenerate_log(n))
        expected = TruncatedSeries(PolyLambda, [1, 1] + [0] * (n - 1))
        assert h == expected

    def test_log_exp_inverse(self):
        n = 10
        em1 = degenerate_exp(1, n) - TruncatedSeries.one(PolyLambda, n)
        assert degenerate_log(n).compose(em1) == TruncatedSeries.t(PolyLambda, n)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError, match="composition requires zero constant term"):
            degenerate_log(4).compose(degenerate_exp(1, 4))


class TestBinomialPow:
    def test_zeroth_power(self):
        u = TruncatedSeries.t(PolyLambda, 5)
        assert u.binomial_pow(Fraction(0)) == TruncatedSeries.one(PolyLambda, 5)

    def test_integer_power_matches_mul(self):
        u = TruncatedSeries.t(PolyLambda, 5)
        one_plus = TruncatedSeries.one(PolyLambda, 5) + u
        assert u.binomial_pow(Fraction(2)) == one_plus.mul(one_plus)

    def test_lambda_exponent_gives_shifted_exp(self):
        """(1 + (e_l - 1))^(l-1) has coefficients (l-1)_{n,l}."""
        n = 8
        em1 = degenerate_exp(1, n) - TruncatedSeries.one(PolyLambda, n)
        f = em1.binomial_pow(LAM - 1)
        for k in range(n + 1):
            assert f.coefficient(k) == falling_lambda(LAM - 1, k)

    def test_requires_zero_constant_term(self):
        with pytest.raises(ValueError):
            series(1, 1).binomial_pow(Fraction(2))


class TestNamedSeries:
    def test_degenerate_exp_symbolic(self):
        x = PolyXOverLambda.x()
        f = degenerate_exp(x, 3)
        assert f.coefficient(2) == x * (x - LAM)
        assert f.coefficient(3) == falling_lambda(x, 3)

    def test_degenerate_exp_at_one(self):
        f = degenerate_exp(1, 3)
        assert f.coefficient(3) == (1 - LAM) * (1 - 2 * LAM)

    def test_degenerate_exp_classical_limit(self):
        x = Fraction(3)
        f = degenerate_exp(x, 5)
        for n, c in enumerate(f.coeffs):
            assert c.evaluate(Fraction(0)) == x**n

    def test_degenerate_log_coefficients(self):
        f = degenerate_log(5)
        assert f.coefficient(0) == PolyLambda.zero()
        assert f.coefficient(1) == PolyLambda.one()
        assert f.coefficient(2) == LAM - 1
        for n in range(1, 6):
            assert f.coefficient(n) == log_weight(n - 1)

    def test_degenerate_log_classical_limit(self):
        f = degenerate_log(6)
        for n in range(1, 7):
            expected = Fraction((-1) ** (n - 1) * factorial(n - 1))
            assert f.coefficient(n).evaluate(Fraction(0)) == expected

    def test_2f1_zero_argument(self):
        u = TruncatedSeries.zero(PolyLambda, 6)
        assert gauss_2f1_formal(LAM, 1, 3, u) == TruncatedSeries.one(PolyLambda, 6)

    def test_2f1_geometric_case(self):
        """2F1(1,1;1;t) would need c=1; 2F1(1,b;b;t) = 1/(1-t) for any b."""
        u = TruncatedSeries.t(PolyLambda, 6)
        f = gauss_2f1_formal(1, 5, 5, u)
        assert f.ordinary() == tuple(PolyLambda.one() for _ in range(7))

    def test_2f1_nonzero_constant_rejected(self):
        with pytest.raises(ValueError, match="composition requires zero constant term"):
            gauss_2f1_formal(1, 1, 2, TruncatedSeries.one(PolyLambda, 4))

    def test_2f1_vanishing_lower_parameter(self):
        u = TruncatedSeries.t(PolyLambda, 6)
        with pytest.raises(ValueError, match="invalid lower parameter"):
            gauss_2f1_formal(1, 1, -2, u)

    def test_coefficient_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            series(1, 1).coefficient(2)

    def test_truncate_cannot_extend(self):
        with pytest.raises(ValueError, match="cannot extend"):
            series(1, 1).truncate(5)

    def test_lift_to_x(self):
        f = degenerate_exp(1, 4).lift_to_x()
        assert f.ring is PolyXOverLambda
        assert f.coefficient(2) == PolyXOverLambda.constant((1 - LAM))
