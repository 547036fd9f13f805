import math

import pytest
from hypothesis import given, settings, strategies as st

from besselcert import (
    DomainError,
    Order,
    airy_zero_estimate,
    bessel_first_zeros_estimate,
    center_gap_check,
    conjecture_check,
    refine_airy_zero,
    refine_bessel_zero,
)

# zeros of Ai(-x) and of J_nu, frozen to 40 digits
AIRY_ZEROS = {
    1: 2.338107410459767038489197252446735440639,
    2: 4.087949444130970616636988701457391060225,
    3: 5.520559828095551059129855512931293573797,
    10: 12.82877675286575720040672940724182447739,
    50: 38.02100867725525443313246829074864484066,
}
BESSEL_ZEROS = {
    (0.0, 1): 2.404825557695772768621631879326454643124,
    (5.0, 1): 8.771483815959954019122867133409560562981,
    (10.0, 2): 18.43346366696658264203509661878799388724,
    (20.0, 3): 33.98870278523519141313196512876914937274,
}


class TestAiryEstimates:
    def test_first_zero_center(self):
        est = airy_zero_estimate(1, "full")
        assert abs(est.center - 2.338107410) < 0.00122
        assert not est.one_sided

    def test_half_width_formulas(self):
        m = 9 * math.pi
        full = airy_zero_estimate(1, "full")
        assert full.half_width == pytest.approx(
            1280 * math.pi / (9 * m ** 3 * (m * m + 40) ** (1 / 6)))
        simp = airy_zero_estimate(1, "simplified")
        assert simp.center == pytest.approx(0.25 * (m * m + 20) ** (1 / 3))
        assert simp.half_width == pytest.approx(
            456 / (m ** 3 * (m * m + 40) ** (1 / 6)))

    def test_brackets_contain_refined(self):
        for s in range(1, 51):
            refined = refine_airy_zero(s)
            for mode in ("full", "simplified"):
                lo, hi = airy_zero_estimate(s, mode).bracket()
                assert lo <= refined <= hi, f"s={s} mode={mode}"

    def test_widths_shrink_fast(self):
        # half-widths decay like s^(-10/3); two decades over s = 1..50
        w1 = airy_zero_estimate(1, "full").half_width
        w50 = airy_zero_estimate(50, "full").half_width
        assert w50 < 1e-5 * w1

    def test_domain(self):
        with pytest.raises(DomainError):
            airy_zero_estimate(0)
        with pytest.raises(DomainError):
            airy_zero_estimate(1, "quick")


class TestRefinement:
    @pytest.mark.parametrize("s", sorted(AIRY_ZEROS))
    def test_airy_zeros(self, s):
        assert refine_airy_zero(s) == pytest.approx(AIRY_ZEROS[s], abs=1e-10)

    @pytest.mark.parametrize("nu,s", sorted(BESSEL_ZEROS))
    def test_bessel_zeros(self, nu, s):
        refined = refine_bessel_zero(Order(nu), s)
        assert refined == pytest.approx(BESSEL_ZEROS[(nu, s)], abs=1e-10)

    def test_half_order_zeros_are_multiples_of_pi(self):
        for s in (1, 2, 5):
            refined = refine_bessel_zero(Order(0.5), s)
            assert refined == pytest.approx(s * math.pi, abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            refine_airy_zero(0)
        with pytest.raises(DomainError):
            refine_airy_zero(51)
        with pytest.raises(DomainError):
            refine_bessel_zero(Order(1.0), 0)


class TestBesselBrackets:
    def test_one_sided_brackets_contain_refined(self):
        for nu in (0.5, 1.0, 2.0, 5.0, 10.0, 20.0):
            for s in (1, 2, 3):
                est = bessel_first_zeros_estimate(Order(nu), s)
                refined = refine_bessel_zero(Order(nu), s)
                lo, hi = est.bracket()
                assert est.one_sided and lo == est.center
                assert lo <= refined <= hi, f"nu={nu} s={s}"

    def test_half_order_bracket_contains_pi(self):
        lo, hi = bessel_first_zeros_estimate(Order(0.5), 1).bracket()
        assert lo <= math.pi <= hi

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_first_zeros_estimate(Order(0.0), 1)
        with pytest.raises(DomainError):
            bessel_first_zeros_estimate(Order(1.0), 0)


class TestCenterGap:
    @given(st.integers(1, 50))
    @settings(max_examples=50, deadline=None)
    def test_chain_holds(self, s):
        positive, below = center_gap_check(s)
        assert positive.holds and below.holds

    def test_stable_at_cancellation_scale(self):
        # by s = 48 the two centers agree to ~17 digits; the direct float
        # subtraction is pure noise there while the exact identity is not
        positive, below = center_gap_check(48)
        assert 0 < positive.rhs < below.rhs
        m = (12 * 48 - 3) * math.pi
        assert below.rhs == pytest.approx(25 / (3 * m ** 3 * (m * m + 40) ** (1 / 6)))


class TestConjecture:
    @pytest.mark.parametrize("s", (1, 5, 50))
    def test_refined_below_closed_form(self, s):
        rep = conjecture_check(s)
        assert rep.name == "conjecture_zero_cap"
        assert rep.holds
        assert rep.lhs == pytest.approx(refine_airy_zero(s))

    def test_domain(self):
        with pytest.raises(DomainError):
            conjecture_check(51)
