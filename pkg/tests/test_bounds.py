import math

import pytest
from hypothesis import given, settings, strategies as st

from besselcert import (
    AIRY_C,
    DomainError,
    Order,
    airy_envelope_maxima,
    bound_airy_envelope,
    bound_derivative,
    bound_envelope,
    bound_log_derivative,
    bound_monotonic,
    bound_near_first_zero,
    bound_watson,
    bound_wronskian_kernel,
    gamma,
    leftmost_max_check,
    lemma_integral_check,
    sonin_eval,
)

INV_SQRT_PI = 1 / math.sqrt(math.pi)


class TestWatson:
    def test_unit_cap_at_nu_one(self):
        rep = bound_watson(Order(1.0), 2.0)
        assert rep.rhs == pytest.approx(1.0, rel=1e-14)
        assert rep.holds

    def test_holds_on_samples(self):
        for nu in (0.0, 0.5, 3.0, 15.0):
            for x in (0.05, 1.0, 20.0):
                assert bound_watson(Order(nu), x).holds

    def test_tight_near_origin(self):
        # both sides go to 0 like (x/2)^nu; the margin shrinks with x
        rep = bound_watson(Order(2.0), 1e-3)
        assert rep.holds and rep.lhs == pytest.approx(rep.rhs, rel=1e-5)


class TestEnvelope:
    def test_equality_at_half_order_extremum(self):
        # sqrt(pi x/2)|J_{1/2}| = |sin x| peaks at exactly 1
        rep = bound_envelope(Order(0.5), math.pi / 2)
        assert rep.holds
        assert rep.lhs == pytest.approx(1.0, abs=1e-14)

    def test_strict_above_half_order(self):
        for nu in (1.0, 5.0, 20.0):
            for x in (0.5, 7.0, 120.0):
                rep = bound_envelope(Order(nu), x)
                assert rep.holds and rep.lhs < 1.0


class TestDerivative:
    def test_holds_past_transition(self):
        for nu, x in ((0.5, 3.0), (2.0, 5.0), (10.0, 14.5), (20.0, 26.0)):
            assert bound_derivative(Order(nu), x).holds

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_derivative(Order(0.4), 10.0)
        with pytest.raises(DomainError):
            bound_derivative(Order(10.0), 10.5)  # inside the transition region


class TestMonotonic:
    def test_equality_at_t_one(self):
        first, second = bound_monotonic(Order(2.0), 1.0)
        assert first.holds and first.margin == pytest.approx(0.0, abs=1e-15)
        assert second.holds

    def test_holds_on_samples(self):
        for nu in (0.5, 1.0, 7.0, 40.0):
            for t in (0.1, 0.5, 0.9):
                first, second = bound_monotonic(Order(nu), t)
                assert first.holds and second.holds

    def test_closed_form_log_path(self):
        # the closed form is evaluated in logs; check it against the direct
        # product at an order where both routes are still representable
        nu, t = 40.0, 0.6
        x = t * nu
        first, second = bound_monotonic(Order(nu), t)
        grow = nu * nu * (1 - t * t) / (2 * nu + 1)
        direct = (2 ** (1 / 3) * x ** nu
                  / (3 ** (2 / 3) * gamma(2 / 3) * nu ** (nu + 1 / 3))
                  * math.exp(grow))
        assert second.rhs == pytest.approx(direct, rel=1e-11)
        assert first.holds and second.holds

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_monotonic(Order(2.0), 0.0)
        with pytest.raises(DomainError):
            bound_monotonic(Order(2.0), 1.1)
        with pytest.raises(DomainError):
            bound_monotonic(Order(0.0), 0.5)


class TestLogDerivative:
    def test_closed_form_midpoint(self):
        first, second = bound_log_derivative(Order(0.5), 0.5)
        assert first.lhs == pytest.approx(math.sqrt(3) - 2, rel=1e-15)
        assert first.holds and second.holds

    def test_holds_on_samples(self):
        for nu in (0.0, 0.5, 2.0, 10.0):
            for frac in (0.1, 0.6, 1.0):
                x = frac * (nu + 0.5)
                first, second = bound_log_derivative(Order(nu), x)
                assert first.holds and second.holds

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_log_derivative(Order(1.0), 1.6)  # beyond nu + 1/2


class TestAiryEnvelope:
    def test_holds_at_origin_and_beyond(self):
        for x in (0.0, 1.0, 10.0, 55.0):
            rep = bound_airy_envelope(x)
            assert rep.holds and rep.rhs == 9 / 14

    def test_maxima_corridor(self):
        reports = airy_envelope_maxima(20.0)
        assert len(reports) >= 16 and len(reports) % 2 == 0
        assert all(r.holds for r in reports)
        # first crest of the damped envelope, from the refined scan
        first_val = reports[0].rhs
        assert first_val == pytest.approx(0.6412831480456839, abs=1e-9)

    def test_crests_approach_limit(self):
        # by x ~ 30 the crest values have settled to within 2% of 1/sqrt(pi)
        reports = airy_envelope_maxima(35.0)
        last_val = reports[-2].rhs  # lower report of the final pair
        assert abs(last_val - INV_SQRT_PI) < 0.02

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_airy_envelope(-0.1)


class TestWronskianKernel:
    def test_symmetric_in_arguments(self):
        a = bound_wronskian_kernel(0.3, 1.0, 4.0)
        b = bound_wronskian_kernel(0.3, 4.0, 1.0)
        assert a.lhs == pytest.approx(b.lhs, rel=1e-12)

    def test_vanishes_at_nu_zero(self):
        rep = bound_wronskian_kernel(0.0, 1.0, 2.0)
        assert rep.rhs == pytest.approx(0.0, abs=1e-16)
        assert rep.lhs < 1e-13 and rep.holds

    def test_half_order_closed_form(self):
        # at nu = 1/2 the kernel is (2/pi)|sin(x2 - x1)|, saturating at
        # separation pi/2
        rep = bound_wronskian_kernel(0.5, 1.0, 1.0 + math.pi / 2)
        assert rep.lhs == pytest.approx(2 / math.pi, rel=1e-13)
        assert rep.holds

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_wronskian_kernel(0.7, 1.0, 2.0)


class TestNearFirstZero:
    def test_holds_on_samples(self):
        for nu in (0.5, 2.0, 10.0, 40.0):
            rep = bound_near_first_zero(Order(nu))
            assert rep.holds and rep.lhs > 0

    def test_domain(self):
        with pytest.raises(DomainError):
            bound_near_first_zero(Order(0.3))


class TestSonin:
    def test_szego_constant_at_half_order(self):
        # sqrt(x) J_{1/2} = sqrt(2/pi) sin x, so S collapses to 2/pi exactly
        for x in (0.3, 2.0, 17.0):
            s = sonin_eval("szego", Order(0.5), x)
            assert s.S == pytest.approx(2 / math.pi, rel=1e-13)

    def test_szego_nondecreasing(self):
        order = Order(0.2)
        vals = [sonin_eval("szego", order, 0.1 + 0.4 * k).S for k in range(60)]
        assert all(b - a >= -1e-12 for a, b in zip(vals, vals[1:]))

    def test_envelope_nondecreasing(self):
        order = Order(3.0)
        x0 = math.sqrt(order.mu) + 0.05
        vals = [sonin_eval("envelope", order, x0 + 0.5 * k).S for k in range(60)]
        assert all(b - a >= -1e-12 for a, b in zip(vals, vals[1:]))

    def test_airy_max_at_origin(self):
        s0 = sonin_eval("airy", Order(0.0), 0.0).S
        assert s0 == pytest.approx(0.49512393523826403, rel=1e-10)
        for x in (0.5, 3.0, 30.0):
            assert sonin_eval("airy", Order(0.0), x).S <= s0

    @given(st.floats(-0.5, 0.5), st.floats(0.01, 80.0))
    @settings(max_examples=25, deadline=None)
    def test_szego_nonnegative(self, nu, x):
        assert sonin_eval("szego", Order(nu), x).S >= 0

    def test_domain(self):
        with pytest.raises(DomainError):
            sonin_eval("szego", Order(0.7), 1.0)
        with pytest.raises(DomainError):
            sonin_eval("envelope", Order(0.4), 10.0)
        with pytest.raises(DomainError):
            sonin_eval("airy", Order(0.0), -1.0)
        with pytest.raises(DomainError):
            sonin_eval("bogus", Order(0.0), 1.0)


class TestLeftmostMax:
    def test_floor_below_first_crest(self):
        rep = leftmost_max_check(Order(5.0))
        assert rep.holds
        assert rep.lhs == pytest.approx(5.0 * math.sqrt(1 - 10.0 ** (-2 / 3)))
        assert 4.59 < rep.rhs < 4.61

    def test_boundary_order(self):
        assert leftmost_max_check(Order(5 / 3)).holds

    def test_domain(self):
        with pytest.raises(DomainError):
            leftmost_max_check(Order(1.5))


class TestLemmaIntegral:
    def test_holds_and_saturates(self):
        first, second = lemma_integral_check(10.0)
        assert first.holds and second.holds
        # at moderate x the caps are nearly attained: x * integral is close
        # to the limiting constants 1/2 and 2/pi
        assert 0.49 < 10.0 * first.lhs < 0.5
        assert 0.62 < 10.0 * second.lhs < 2 / math.pi

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma_integral_check(0.0)
