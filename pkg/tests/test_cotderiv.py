import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polylim import (
    CotDerivExpansion,
    CotPolynomial,
    DomainError,
    HarmonicRangeError,
    InvalidHarmonicError,
    PoleError,
    coeff,
    coeff_unified,
    eval_cot_deriv,
    eval_cot_deriv_pi,
    expansion,
    harmonics_from_polynomial,
    oracle_expansion,
)


def grid(lo, hi, count):
    return [lo + (hi - lo) * (i + 0.5) / count for i in range(count)]


class TestCoeff:
    def test_base_case(self):
        assert coeff(1, 0) == -1

    def test_small_orders_match_symbolic_oracle(self):
        # cot'' = 2cos(x)/sin^3, cot''' = (-4 - 2cos(2x))/sin^4,
        # cot'''' = (22cos(x) + 2cos(3x))/sin^5; recovered below from the
        # polynomial-in-cot oracle without using the coefficient formulas.
        assert coeff(2, 1) == 2
        assert coeff(3, 0) == -4
        assert coeff(3, 2) == -2
        assert coeff(4, 1) == 22
        assert coeff(4, 3) == 2
        for p in (2, 3, 4):
            recovered = dict(harmonics_from_polynomial(p, oracle_expansion(p)))
            for j, b in expansion(p).harmonics:
                assert recovered[j] == b

    def test_parity_mismatch_rejected(self):
        with pytest.raises(InvalidHarmonicError):
            coeff(2, 2)
        with pytest.raises(InvalidHarmonicError):
            coeff(3, 1)
        with pytest.raises(InvalidHarmonicError):
            coeff(5, 3)

    def test_multiplier_out_of_range(self):
        with pytest.raises(HarmonicRangeError):
            coeff(2, 3)
        with pytest.raises(HarmonicRangeError):
            coeff(3, 4)

    def test_bad_order(self):
        with pytest.raises(DomainError):
            coeff(0, 1)
        with pytest.raises(DomainError):
            coeff(-2, 1)
        with pytest.raises(DomainError):
            coeff(2.0, 1)


class TestCoeffUnified:
    def test_matches_examples(self):
        assert coeff_unified(2, 1) == 2
        assert coeff_unified(3, 2) == -2
        assert coeff_unified(4, 3) == 2

    def test_agrees_with_piecewise_everywhere(self):
        for p in range(1, 31):
            for q in range(2 if p % 2 else 1, p, 2):
                assert coeff_unified(p, q) == coeff(p, q), (p, q)

    def test_zero_multiplier_excluded(self):
        # The single formula does not extend to the constant harmonic: it
        # would give -8 where the constant column has -4.
        with pytest.raises(DomainError):
            coeff_unified(3, 0)

    def test_parity_and_range_errors(self):
        with pytest.raises(InvalidHarmonicError):
            coeff_unified(3, 1)
        with pytest.raises(HarmonicRangeError):
            coeff_unified(2, 3)


class TestExpansion:
    def test_order_one(self):
        e = expansion(1)
        assert e.sin_exponent == 2
        assert e.harmonics == ((0, -1),)

    def test_order_three(self):
        assert expansion(3).harmonics == ((0, -4), (2, -2))
        assert expansion(3).sin_exponent == 4

    def test_order_four(self):
        assert expansion(4).harmonics == ((1, 22), (3, 2))
        assert expansion(4).sin_exponent == 5

    def test_coefficient_sum_is_signed_factorial(self):
        for p in range(1, 51):
            expected = math.factorial(p) * (-1 if p % 2 else 1)
            assert expansion(p).coefficient_sum() == expected, p

    def test_harmonic_structure(self):
        for p in range(1, 31):
            e = expansion(p)
            multipliers = [j for j, _ in e.harmonics]
            assert multipliers == list(range(0 if p % 2 else 1, p, 2))
            assert len(multipliers) == (p + 1) // 2

    def test_json_round_trip(self):
        e = expansion(9)
        assert CotDerivExpansion.from_json_dict(e.to_json_dict()) == e

    def test_invalid_construction_rejected(self):
        with pytest.raises(DomainError):
            CotDerivExpansion(order=2, sin_exponent=2, harmonics=((1, 2),))
        with pytest.raises(DomainError):
            CotDerivExpansion(order=2, sin_exponent=3, harmonics=((0, 2),))


class TestEvalCotDeriv:
    def test_plain_cotangent(self):
        x = 1.1
        assert eval_cot_deriv(0, x) == pytest.approx(math.cos(x) / math.sin(x))

    def test_first_derivative_at_right_angle(self):
        assert eval_cot_deriv(1, math.pi / 2) == pytest.approx(-1.0, rel=1e-14)

    def test_second_derivative_at_right_angle(self):
        assert abs(eval_cot_deriv(2, math.pi / 2)) < 1e-12

    def test_third_derivative_at_quarter_turn(self):
        assert eval_cot_deriv(3, math.pi / 4) == pytest.approx(-16.0, rel=1e-12)

    def test_pole_guard(self):
        with pytest.raises(PoleError):
            eval_cot_deriv(1, math.pi)
        with pytest.raises(PoleError):
            eval_cot_deriv(0, 0.0)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            eval_cot_deriv(1, math.inf)
        with pytest.raises(DomainError):
            eval_cot_deriv(1, math.nan)

    def test_pi_scaled_variant_matches_plain(self):
        for p in range(0, 9):
            for z in grid(0.07, 0.93, 11):
                a = eval_cot_deriv_pi(p, z)
                b = eval_cot_deriv(p, math.pi * z)
                assert a == pytest.approx(b, rel=1e-10), (p, z)

    def test_pi_scaled_variant_periodicity(self):
        # Shifting by whole turns must not change the value at all.
        for p in range(0, 7):
            base = eval_cot_deriv_pi(p, 0.23)
            for shift in (-3, -1, 2, 5):
                assert eval_cot_deriv_pi(p, 0.23 + shift) == pytest.approx(
                    base, rel=1e-13
                )

    def test_pi_scaled_pole_guard_carries_location(self):
        with pytest.raises(PoleError) as excinfo:
            eval_cot_deriv_pi(2, 3.0)
        assert excinfo.value.location == 3


class TestPolynomialOracle:
    def test_base_cases(self):
        assert oracle_expansion(0).coefficients == (0, 1)
        assert oracle_expansion(1).coefficients == (-1, 0, -1)
        assert oracle_expansion(2).coefficients == (0, 2, 0, 2)

    def test_degree_tracks_order(self):
        for p in range(0, 26):
            assert oracle_expansion(p).degree == p + 1

    def test_closed_form_agrees_with_polynomial(self):
        for p in range(1, 26):
            poly = oracle_expansion(p)
            for x in grid(0.1, math.pi - 0.1, 50):
                closed = eval_cot_deriv(p, x)
                direct = poly.evaluate(math.cos(x) / math.sin(x))
                assert abs(closed - direct) <= 1e-8 * (1.0 + abs(direct)), (p, x)

    def test_exact_extraction_matches_coeff(self):
        for p in range(1, 13):
            assert (
                harmonics_from_polynomial(p, oracle_expansion(p))
                == expansion(p).harmonics
            ), p

    def test_extraction_rejects_degree_mismatch(self):
        with pytest.raises(DomainError):
            harmonics_from_polynomial(3, oracle_expansion(5))

    def test_evaluate_is_horner(self):
        poly = CotPolynomial(coefficients=(1, -2, 3))
        assert poly.evaluate(2.0) == pytest.approx(1 - 4 + 12)


class TestDerivativeConsistency:
    def test_central_difference_matches_next_order(self):
        step = 1e-5
        for p in range(1, 9):
            for x in grid(0.2, math.pi - 0.2, 8):
                approx = (
                    eval_cot_deriv(p - 1, x + step) - eval_cot_deriv(p - 1, x - step)
                ) / (2 * step)
                exact = eval_cot_deriv(p, x)
                assert approx == pytest.approx(exact, rel=1e-4), (p, x)


@settings(max_examples=150, deadline=None)
@given(
    order=st.integers(min_value=1, max_value=20),
    x=st.floats(min_value=0.1, max_value=math.pi - 0.1),
)
def test_property_closed_form_equals_oracle(order, x):
    closed = eval_cot_deriv(order, x)
    direct = oracle_expansion(order).evaluate(math.cos(x) / math.sin(x))
    assert abs(closed - direct) <= 1e-8 * (1.0 + abs(direct))


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_property_unified_matches_piecewise(data):
    p = data.draw(st.integers(min_value=2, max_value=40))
    q = data.draw(st.sampled_from(list(range(2 if p % 2 else 1, p, 2))))
    assert coeff_unified(p, q) == coeff(p, q)
