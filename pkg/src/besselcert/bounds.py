"""Rigorous inequalities for J_nu and Ai(-x) as checkable reports.

Every check compares reference-evaluator values, never approximations, and
"holds" only with margin beyond the evaluator's own error estimate: strict
inequalities need margin > slack, non-strict ones margin >= -slack.  A false
report on any acceptance grid is a build-failing event.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from .oracle import (
    DEFAULT_CTX,
    DomainError,
    Order,
    PrecisionCtx,
    _j_prime_any,
    airy_ai_neg_prime_ref,
    airy_ai_neg_ref,
    bessel_j_prime_ref,
    bessel_j_ref,
    gamma,
    quad,
    refine_root,
)

# envelope damping offset for the Airy inequalities
AIRY_C = 15 ** (1 / 3) * 2 ** (-4 / 3)


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance: holds iff margin = rhs - lhs clears the slack."""

    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool


@dataclass(frozen=True)
class SoninSample:
    """Value of a Sonin-type envelope function S at x.

    S is a square plus a positively weighted square of a derivative, so
    S >= 0; its monotonicity in x is what turns local oscillation into a
    global envelope bound.
    """

    x: float
    S: float
    variant: str


def _make(name: str, lhs: float, rhs: float, strict: bool, slack: float) -> BoundReport:
    margin = rhs - lhs
    holds = margin > slack if strict else margin >= -slack
    return BoundReport(name, lhs, rhs, margin, holds)


def bound_watson(order: Order, x: float, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """J_nu(x) <= (x/2)^nu / Gamma(nu+1), the power-law cap near the origin."""
    r = bessel_j_ref(order, x, ctx)
    rhs = (x / 2) ** order.nu / gamma(order.nu + 1)
    return _make("watson", r.value, rhs, strict=False, slack=r.abs_err_estimate)


def bound_envelope(order: Order, x: float, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """Amplitude cap on J_nu: the oscillation never exceeds its envelope.

    |nu| <= 1/2: sqrt(pi x/2) |J_nu(x)| <= 1 (equality at the extrema of
    J_{1/2}); nu > 1/2: |x^2-mu|^(1/4) |J_nu(x)| sqrt(pi/2) < 1 strictly,
    and the constant is best possible.
    """
    r = bessel_j_ref(order, x, ctx)
    if abs(order.nu) <= 0.5:
        scale = math.sqrt(math.pi * x / 2)
        return _make("envelope", scale * abs(r.value), 1.0,
                     strict=False, slack=scale * r.abs_err_estimate)
    scale = abs(x * x - order.mu) ** 0.25 * math.sqrt(math.pi / 2)
    return _make("envelope", scale * abs(r.value), 1.0,
                 strict=True, slack=scale * r.abs_err_estimate)


_DERIV_SHIFT = (math.sqrt(7) - 1) / 2 ** (2 / 3)


def bound_derivative(order: Order, x: float, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """Envelope cap on J'_nu beyond the transition region.

    For x >= nu + ((sqrt7-1)/2^(2/3)) nu^(1/3),
      x psi(x)^(1/4)/(x^2-nu^2) |J'_nu(x)| < 2/sqrt(pi)
    with psi = 4(x^2-nu^2)^3 - 3x^4 - 10x^2 nu^2 + nu^4, positive there.
    """
    nu = order.nu
    if nu < 0.5:
        raise DomainError("bound_derivative: nu must be >= 1/2")
    if x < nu + _DERIV_SHIFT * nu ** (1 / 3):
        raise DomainError("bound_derivative: x below nu + ((sqrt7-1)/2^(2/3)) nu^(1/3)")
    s = x * x - nu * nu
    psi = 4 * s ** 3 - 3 * x ** 4 - 10 * x * x * nu * nu + nu ** 4
    assert psi > 0, "psi must be positive on the stated domain"
    r = bessel_j_prime_ref(order, x, ctx)
    scale = x * psi ** 0.25 / s
    return _make("derivative", scale * abs(r.value), 2 / math.sqrt(math.pi),
                 strict=True, slack=scale * r.abs_err_estimate)


def bound_monotonic(order: Order, t: float,
                    ctx: PrecisionCtx = DEFAULT_CTX) -> tuple[BoundReport, BoundReport]:
    """J_nu(t nu) against its value at the order, then in closed form.

    For 0 < t <= 1:
      J_nu(t nu) <= J_nu(nu) t^nu exp(nu^2(1-t^2)/(2 nu+1))           (equality at t=1)
      J_nu(t nu) <  2^(1/3)(t nu)^nu/(3^(2/3) Gamma(2/3) nu^(nu+1/3))
                    * exp(nu^2(1-t^2)/(2 nu+1))
    Both right-hand sides carry the same exponential factor.
    """
    nu = order.nu
    if nu <= 0:
        raise DomainError("bound_monotonic: nu must be positive")
    if not 0 < t <= 1:
        raise DomainError("bound_monotonic: t must lie in (0, 1]")
    x = t * nu
    r = bessel_j_ref(order, x, ctx)
    at_nu = bessel_j_ref(order, nu, ctx)
    grow = nu * nu * (1 - t * t) / (2 * nu + 1)
    rhs1 = at_nu.value * t ** nu * math.exp(grow)
    # evaluated in logs: nu^(nu+1/3) overflows well before nu does
    log_rhs2 = (math.log(2) / 3 + nu * math.log(x) - 2 * math.log(3) / 3
                - math.log(gamma(2 / 3)) - (nu + 1 / 3) * math.log(nu) + grow)
    rhs2 = math.exp(log_rhs2)
    slack1 = r.abs_err_estimate + at_nu.abs_err_estimate * t ** nu * math.exp(grow)
    first = _make("monotonic_at_order", r.value, rhs1, strict=False, slack=slack1)
    second = _make("monotonic_closed_form", r.value, rhs2,
                   strict=True, slack=r.abs_err_estimate + 4e-16 * rhs2)
    return first, second


def bound_log_derivative(order: Order, x: float,
                         ctx: PrecisionCtx = DEFAULT_CTX) -> tuple[BoundReport, BoundReport]:
    """Lower bounds on the logarithmic derivative of x^(-nu) J_nu(x).

    With script-J = x^(-nu) J_nu, on 0 < x <= nu + 1/2:
      script-J'/script-J >= (sqrt((2nu+1)^2 - 4x^2) - (2nu+1))/(2x) >= -2x/(2nu+1).
    The ratio comes from the evaluator via J'/J - nu/x; x stays below the
    first zero of J_nu, so the quotient is well defined.
    """
    nu = order.nu
    if nu < -0.5:
        raise DomainError("bound_log_derivative: nu must be >= -1/2")
    if not 0 < x <= nu + 0.5:
        raise DomainError("bound_log_derivative: x must lie in (0, nu + 1/2]")
    j = bessel_j_ref(order, x, ctx)
    if j.value <= 0:
        raise DomainError("bound_log_derivative: J_nu vanishes on (0, x]")
    jp = _j_prime_any(order, x, ctx)
    ratio = jp.value / j.value - nu / x
    ratio_err = (jp.abs_err_estimate / j.value
                 + abs(jp.value) * j.abs_err_estimate / j.value ** 2)
    w = 2 * nu + 1
    mid = (math.sqrt(w * w - 4 * x * x) - w) / (2 * x)
    low = -2 * x / w
    first = _make("log_derivative", mid, ratio, strict=False, slack=ratio_err)
    second = _make("log_derivative_chain", low, mid, strict=False,
                   slack=1e-14 * max(1.0, abs(low)))
    return first, second


def bound_airy_envelope(x: float, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """(x + c)^(1/4) Ai(-x) < 9/14 with c = 15^(1/3) 2^(-4/3), x >= 0."""
    if x < 0:
        raise DomainError("bound_airy_envelope: x must be >= 0")
    r = airy_ai_neg_ref(x, ctx)
    scale = (x + AIRY_C) ** 0.25
    return _make("airy_envelope", scale * r.value, 9 / 14,
                 strict=True, slack=scale * r.abs_err_estimate)


def _airy_envelope_deriv(x: float, ctx: PrecisionCtx) -> float:
    # d/dx [(x+c)^(1/4) Ai(-x)] by the product rule from the two evaluators
    a = airy_ai_neg_ref(x, ctx).value
    ap = airy_ai_neg_prime_ref(x, ctx).value
    return 0.25 * (x + AIRY_C) ** -0.75 * a + (x + AIRY_C) ** 0.25 * ap


def airy_envelope_maxima(x_hi: float = 60.0,
                         ctx: PrecisionCtx = DEFAULT_CTX) -> list[BoundReport]:
    """Each local maximum of (x+c)^(1/4) Ai(-x) on [0, x_hi] vs its corridor.

    The damped envelope rises to each crest inside (1/sqrt(pi), 9/14): two
    reports per located maximum, airy_envelope_max_lower for the floor and
    airy_envelope_max_upper for the cap.  Maxima are bracketed by a sign
    scan of the derivative (step tied to the local oscillation period) and
    polished by root refinement.
    """
    reports = []
    x = 1e-3
    prev_x, prev_d = x, _airy_envelope_deriv(x, ctx)
    while x < x_hi:
        # ~15 samples per half-oscillation; the period shrinks like pi/sqrt(x)
        x = min(x_hi, x + min(0.05, math.pi / (15 * math.sqrt(max(x, 0.5)))))
        d = _airy_envelope_deriv(x, ctx)
        if prev_d > 0 and d <= 0:
            xi = refine_root(lambda t: _airy_envelope_deriv(t, ctx),
                             (prev_x, x), 1e-9)
            val = (xi + AIRY_C) ** 0.25 * airy_ai_neg_ref(xi, ctx).value
            reports.append(_make("airy_envelope_max_lower",
                                 1 / math.sqrt(math.pi), val, strict=True, slack=1e-12))
            reports.append(_make("airy_envelope_max_upper",
                                 val, 9 / 14, strict=True, slack=1e-12))
        prev_x, prev_d = x, d
    return reports


def bound_wronskian_kernel(nu: float, x1: float, x2: float,
                           ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """Cross-point cancellation bound for orders nu and -nu, 0 <= nu <= 1/2.

    sqrt(x1 x2) |J_{-nu}(x1) J_nu(x2) - J_{-nu}(x2) J_nu(x1)| <= (2/pi) sin(pi nu);
    the kernel is antisymmetric in (x1, x2) and vanishes identically at nu = 0.
    """
    if not 0 <= nu <= 0.5:
        raise DomainError("bound_wronskian_kernel: nu must lie in [0, 1/2]")
    m1 = bessel_j_ref(Order(-nu), x1, ctx)
    m2 = bessel_j_ref(Order(-nu), x2, ctx)
    p1 = bessel_j_ref(Order(nu), x1, ctx)
    p2 = bessel_j_ref(Order(nu), x2, ctx)
    scale = math.sqrt(x1 * x2)
    lhs = scale * abs(m1.value * p2.value - m2.value * p1.value)
    slack = scale * (m1.abs_err_estimate * abs(p2.value) + m2.abs_err_estimate * abs(p1.value)
                     + p1.abs_err_estimate * abs(m2.value) + p2.abs_err_estimate * abs(m1.value)
                     + 1e-15)
    return _make("wronskian_kernel", lhs, 2 / math.pi * math.sin(math.pi * nu),
                 strict=False, slack=slack)


@lru_cache(maxsize=1)
def _first_airy_root() -> float:
    return refine_root(lambda t: airy_ai_neg_ref(t).value, (2.0, 3.0), 1e-11)


def bound_near_first_zero(order: Order, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """0 < J_nu(nu + gamma nu^(1/3)) < 7/(6 nu), gamma = 2^(-1/3) a1 = 1.855757...

    The evaluation point sits just before the first zero j_{nu,1}, where J
    is still positive but already of size O(nu^(-2/3)).
    """
    nu = order.nu
    if nu < 0.5:
        raise DomainError("bound_near_first_zero: nu must be >= 1/2")
    g = 2 ** (-1 / 3) * _first_airy_root()
    r = bessel_j_ref(order, nu + g * nu ** (1 / 3), ctx)
    assert r.value > 0, "evaluation point must precede the first zero"
    return _make("near_first_zero", r.value, 7 / (6 * nu),
                 strict=True, slack=r.abs_err_estimate)


def sonin_eval(variant: str, order: Order, x: float,
               ctx: PrecisionCtx = DEFAULT_CTX) -> SoninSample:
    """Sonin-type envelope function S(x), per variant.

    szego (|nu| <= 1/2, x > 0):
        S = x J^2 + x^2/(x^2 + mu) (d/dx sqrt(x) J)^2, nondecreasing.
        The weight uses x^2 + mu = x^2 + 1/4 - nu^2: dS/dx is a positive
        multiple of the squared derivative only with this sign of mu.
    envelope (nu > 1/2, x > sqrt(mu)): with H = (x^2-mu)^(1/4) J,
        S = H^2 + 4x^2(x^2-mu)^2/(4(x^2-mu)^3 + (6x^2-mu)mu) H'^2, nondecreasing.
    airy (x >= 0): with f = (x+c)^(1/4) Ai(-x),
        S = f^2 + f'^2/(x + 5/(16(c+x)^2)), nonincreasing from its maximum at 0.
    """
    mu = order.mu
    if variant == "szego":
        if abs(order.nu) > 0.5:
            raise DomainError("sonin szego: |nu| must be <= 1/2")
        if x <= 0:
            raise DomainError("sonin szego: x must be positive")
        y = bessel_j_ref(order, x, ctx).value
        yp = _j_prime_any(order, x, ctx).value
        w_prime = y / (2 * math.sqrt(x)) + math.sqrt(x) * yp
        s = x * y * y + x * x / (x * x + mu) * w_prime * w_prime
        return SoninSample(x, s, "szego")
    if variant == "envelope":
        if order.nu <= 0.5:
            raise DomainError("sonin envelope: nu must be > 1/2")
        if x <= math.sqrt(mu):
            raise DomainError("sonin envelope: x must exceed sqrt(mu)")
        j = bessel_j_ref(order, x, ctx).value
        jp = bessel_j_prime_ref(order, x, ctx).value
        s2 = x * x - mu
        h = s2 ** 0.25 * j
        hp = 0.5 * x * s2 ** -0.75 * j + s2 ** 0.25 * jp
        weight = 4 * x * x * s2 * s2 / (4 * s2 ** 3 + (6 * x * x - mu) * mu)
        return SoninSample(x, h * h + weight * hp * hp, "envelope")
    if variant == "airy":
        if x < 0:
            raise DomainError("sonin airy: x must be >= 0")
        a = airy_ai_neg_ref(x, ctx).value
        ap = airy_ai_neg_prime_ref(x, ctx).value
        f = (x + AIRY_C) ** 0.25 * a
        fp = 0.25 * (x + AIRY_C) ** -0.75 * a + (x + AIRY_C) ** 0.25 * ap
        s = f * f + fp * fp / (x + 5 / (16 * (AIRY_C + x) ** 2))
        return SoninSample(x, s, "airy")
    raise DomainError(f"sonin_eval: unknown variant {variant!r}")


def leftmost_max_check(order: Order, ctx: PrecisionCtx = DEFAULT_CTX) -> BoundReport:
    """First positive maximum xi of (mu - x^2)^(1/4) J_nu exceeds its floor.

    For nu >= 5/3, xi > nu sqrt(1 - (2 nu)^(-2/3)).  The envelope rises
    monotonically from 0 to its first crest, which lands below sqrt(mu)
    (the damping factor forces the derivative negative approaching sqrt(mu)),
    so the first sign change of the derivative is the maximum.
    """
    nu = order.nu
    if nu < 5 / 3:
        raise DomainError("leftmost_max_check: nu must be >= 5/3")
    mu = order.mu
    root_mu = math.sqrt(mu)

    def hp(x: float) -> float:
        s = mu - x * x
        j = bessel_j_ref(order, x, ctx).value
        jp = bessel_j_prime_ref(order, x, ctx).value
        return -0.5 * x * s ** -0.75 * j + s ** 0.25 * jp

    x = 0.05
    prev_x, prev_d = x, hp(x)
    xi = None
    while x < root_mu - 1e-6:
        x = min(root_mu - 1e-6, x + max(1e-3, x / 300))
        d = hp(x)
        if prev_d > 0 and d <= 0:
            xi = refine_root(hp, (prev_x, x), 1e-10)
            break
        prev_x, prev_d = x, d
    if xi is None:
        raise RuntimeError("leftmost_max_check: no maximum found below sqrt(mu)")
    floor = nu * math.sqrt(1 - (2 * nu) ** (-2 / 3))
    return _make("leftmost_max", floor, xi, strict=True, slack=1e-9)


# truncation point for the oscillatory tail integrals, a whole number of periods
_LEMMA_T = math.pi * math.ceil(1e6 / math.pi)


def lemma_integral_check(x: float) -> tuple[BoundReport, BoundReport]:
    """The two oscillatory integral caps used by the transition-region proofs.

    int_0^inf sin^2 t/(t+x)^2 dt < 1/(2x) and int_0^inf |sin t|/(t+x)^2 dt < 2/(pi x).
    Truncated at T ~ 1e6 (a multiple of pi); the tail of each integrand over
    one period [a, a+pi] is at most its period mass times the left-edge weight
    1/(a+x)^2, and summing those caps gives
      sin^2 tail <= 1/(2(T+x)) + pi/(2(T+x)^2),   |sin| tail <= 2/(pi(T+x)) + 2/(T+x)^2,
    both below 1e-6.
    """
    if x <= 0:
        raise DomainError("lemma_integral_check: x must be positive")
    t_end = _LEMMA_T
    i1 = quad(lambda t: np.sin(t) ** 2 / (t + x) ** 2, 0.0, t_end, 1e-9)
    tail1 = 1 / (2 * (t_end + x)) + math.pi / (2 * (t_end + x) ** 2)
    first = _make("lemma_integral_sin2", i1 + tail1, 1 / (2 * x),
                  strict=True, slack=1e-9)
    i2 = quad(lambda t: np.abs(np.sin(t)) / (t + x) ** 2, 0.0, t_end, 1e-9)
    tail2 = 2 / (math.pi * (t_end + x)) + 2 / (t_end + x) ** 2
    second = _make("lemma_integral_abs_sin", i2 + tail2, 2 / (math.pi * x),
                   strict=True, slack=1e-9)
    return first, second
