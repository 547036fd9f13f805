"""Closed-form approximations of J_nu(x) and Ai(-x) with certified error widths.

Each routine returns an ApproxValue whose half_width is an explicit bound on
|truth - value|, valid on the stated domain with no asymptotic caveats.  The
widths come from the inequalities the package exists to check; the scan module
verifies every one of them against the series evaluator on dense grids.
"""

from dataclasses import dataclass
import math

from .oracle import DomainError, Order, PrecisionCtx, DEFAULT_CTX, airy_ai_neg_ref
from .oracle import _AIRY_X_CAP

SQRT_2_OVER_PI = math.sqrt(2 / math.pi)

# largest z the transition form can certify: its Ai factor comes from the
# reference evaluator, whose domain ends at _AIRY_X_CAP
_TRANSITION_Z_CAP = _AIRY_X_CAP / 2 ** (1 / 3)

_METHOD_ORDER = ("sharp_high", "sharp_low", "simplified", "olver", "classic", "transition")


@dataclass(frozen=True)
class ApproxValue:
    """An approximate value with a certified symmetric error bound.

    |truth - value| <= half_width holds on the method's whole domain.
    method names the formula; region is oscillatory, transition, or
    monotonicity depending on which regime the formula targets.
    """

    value: float
    half_width: float
    method: str
    region: str


@dataclass(frozen=True)
class PhaseValue:
    """Phase B(x) and local frequency b(x) = dB/dx of the oscillatory regime.

    b(x) = sqrt(x^2 - nu^2 + 1/4)/x, so cos(B(x) - omega) oscillates at the
    true local frequency of J_nu rather than at the free-space rate 1.
    """

    B: float
    b: float


def classic_oscillatory(order: Order, x: float) -> ApproxValue:
    """J_nu(x) ~ sqrt(2/(pi x)) cos(x - omega) with error c mu x^(-3/2).

    The constant c depends on where x sits relative to sqrt(mu):
    c = (2/pi)^(3/2) for |nu| <= 1/2, else sqrt(2)/2 when x >= sqrt(mu)
    and 5/4 when x < sqrt(mu).  At |nu| = 1/2 the width vanishes and the
    main term is J_nu itself.
    """
    if x <= 0:
        raise DomainError("classic_oscillatory: x must be positive")
    if order.nu < -0.5:
        raise DomainError("classic_oscillatory: nu must be >= -1/2")
    value = SQRT_2_OVER_PI / math.sqrt(x) * math.cos(x - order.omega)
    if abs(order.nu) <= 0.5:
        c = (2 / math.pi) ** 1.5
    elif x >= math.sqrt(order.mu):
        c = math.sqrt(2) / 2
    else:
        c = 1.25
    return ApproxValue(value, c * order.mu * x ** -1.5, "classic", "oscillatory")


def olver_coefficient(nu: float, i: int) -> float:
    """a_i(nu) = (1/2-nu)_i (1/2+nu)_i / (2^i i!), the expansion coefficients.

    a_0 = 1; all a_i with i >= 1 vanish at nu = 1/2 where the expansion
    terminates exactly.
    """
    acc = 1.0
    for k in range(i):
        acc *= (0.5 - nu + k) * (0.5 + nu + k)
    return acc / (2 ** i * math.factorial(i))


def olver_expansion(order: Order, x: float, l1: int, l2: int) -> ApproxValue:
    """Truncated large-x expansion of J_nu with both trailing terms as width.

    value = sqrt(2/(pi x)) [cos(x-omega) sum_{i<l1} (-1)^i a_{2i} x^{-2i}
                          + sin(x-omega) sum_{i<l2} (-1)^i a_{2i+1} x^{-2i-1}]
    and half_width = sqrt(2/(pi x)) (|a_{2 l1}| x^{-2 l1} + |a_{2 l2+1}| x^{-2 l2-1}).
    The sign pattern was calibrated once against the series evaluator at
    nu = 0, x = 20, l1 = l2 = 3.
    """
    if order.nu < 0:
        raise DomainError("olver_expansion: nu must be >= 0")
    if x <= 0:
        raise DomainError("olver_expansion: x must be positive")
    if l1 < max(order.nu / 2 - 0.25, 1):
        raise DomainError("olver_expansion: l1 below max(nu/2 - 1/4, 1)")
    if l2 < max(order.nu / 2 - 0.75, 1):
        raise DomainError("olver_expansion: l2 below max(nu/2 - 3/4, 1)")
    cos_sum = sum((-1) ** i * olver_coefficient(order.nu, 2 * i) * x ** (-2 * i)
                  for i in range(l1))
    sin_sum = sum((-1) ** i * olver_coefficient(order.nu, 2 * i + 1) * x ** (-2 * i - 1)
                  for i in range(l2))
    amp = SQRT_2_OVER_PI / math.sqrt(x)
    value = amp * (math.cos(x - order.omega) * cos_sum
                   + math.sin(x - order.omega) * sin_sum)
    hw = amp * (abs(olver_coefficient(order.nu, 2 * l1)) * x ** (-2 * l1)
                + abs(olver_coefficient(order.nu, 2 * l2 + 1)) * x ** (-2 * l2 - 1))
    return ApproxValue(value, hw, "olver", "oscillatory")


def phase_B(order: Order, x: float) -> PhaseValue:
    """Antiderivative B of the local frequency b(x) = sqrt(x^2 - nu^2 + 1/4)/x.

    For |nu| <= 1/2 (where mu = 1/4 - nu^2 enters with a plus sign)
    B = sqrt(x^2+mu) + sqrt(mu) ln(x/(sqrt(mu)+sqrt(mu+x^2))), any x > 0;
    for nu > 1/2, B = sqrt(x^2-mu) + sqrt(mu) arcsin(sqrt(mu)/x), x > sqrt(mu).
    """
    if x <= 0:
        raise DomainError("phase_B: x must be positive")
    mu = order.mu
    if abs(order.nu) <= 0.5:
        root = math.sqrt(x * x + mu)
        if mu == 0:
            return PhaseValue(x, 1.0)
        B = root + math.sqrt(mu) * math.log(x / (math.sqrt(mu) + root))
        return PhaseValue(B, root / x)
    if x <= math.sqrt(mu):
        raise DomainError("phase_B: high branch needs x > sqrt(mu)")
    root = math.sqrt(x * x - mu)
    B = root + math.sqrt(mu) * math.asin(math.sqrt(mu) / x)
    return PhaseValue(B, root / x)


def sharper_oscillatory(order: Order, x: float) -> ApproxValue:
    """Phase-corrected amplitude form of J_nu with x^(-5/2)-or-better width.

    Low branch (|nu| <= 1/2, x > 0):
      sqrt(2/pi) (x^2+mu)^(-1/4) cos(B - omega), width mu/(sqrt(2 pi x)(x^2+mu)^(3/2)).
    High branch (|nu| > 1/2, x > max(mu, sqrt(mu))):
      same with x^2-mu, width 13 mu/(12 sqrt(2 pi) (x^2-mu)^(7/4)).
    """
    if x <= 0:
        raise DomainError("sharper_oscillatory: x must be positive")
    mu = order.mu
    if abs(order.nu) <= 0.5:
        ph = phase_B(order, x)
        value = SQRT_2_OVER_PI * (x * x + mu) ** -0.25 * math.cos(ph.B - order.omega)
        hw = mu / (math.sqrt(2 * math.pi * x) * (x * x + mu) ** 1.5)
        return ApproxValue(value, hw, "sharp_low", "oscillatory")
    # x > mu keeps the width constant honest; x > sqrt(mu) keeps the phase real
    if x <= max(mu, math.sqrt(mu)):
        raise DomainError("sharper_oscillatory: high branch needs x > max(mu, sqrt(mu))")
    ph = phase_B(order, x)
    value = SQRT_2_OVER_PI * (x * x - mu) ** -0.25 * math.cos(ph.B - order.omega)
    hw = 13 * mu / (12 * math.sqrt(2 * math.pi) * (x * x - mu) ** 1.75)
    return ApproxValue(value, hw, "sharp_high", "oscillatory")


def simplified_oscillatory(order: Order, x: float) -> ApproxValue:
    """Low-order phase expansion: cos(x - mu/(2x) - omega) over (x^2+mu)^(1/4).

    Valid for |nu| <= 1/2 with width 25 mu/(24 sqrt(2 pi) x^3 (x^2+mu)^(1/4));
    replaces the exact phase B by its two-term expansion at large x.
    """
    if abs(order.nu) > 0.5:
        raise DomainError("simplified_oscillatory: |nu| must be <= 1/2")
    if x <= 0:
        raise DomainError("simplified_oscillatory: x must be positive")
    mu = order.mu
    value = (SQRT_2_OVER_PI * math.cos(x - mu / (2 * x) - order.omega)
             / (x * x + mu) ** 0.25)
    hw = 25 * mu / (24 * math.sqrt(2 * math.pi) * x ** 3 * (x * x + mu) ** 0.25)
    return ApproxValue(value, hw, "simplified", "oscillatory")


def transition_x(order: Order, z: float) -> float:
    """Evaluation point x = nu + nu^(1/3) z of the transition-region variable z."""
    return order.nu + order.nu ** (1 / 3) * z


def transition(order: Order, z: float,
               ctx: PrecisionCtx = DEFAULT_CTX) -> ApproxValue:
    """Airy-type approximation of J_nu near x = nu, in the variable z >= 0.

    At x = nu + nu^(1/3) z,
      J_nu(x) ~ 2^(1/3) Ai(-2^(1/3) z)/sqrt(nu^(2/3)+z),
    with width 23 max(1, z^(9/4))/(2 nu^(2/3) sqrt(nu^(2/3)+z)).  The Ai
    factor is taken from the reference evaluator so the width tests this
    formula's own error only.  z < 0 (x below nu) is rejected, and z ends
    where the evaluator's Ai domain does (z ~ 95.2); far earlier than that
    the width has already grown past any oscillatory alternative.
    """
    if order.nu < 0.5:
        raise DomainError("transition: nu must be >= 1/2")
    if not 0 <= z <= _TRANSITION_Z_CAP:
        raise DomainError(
            f"transition: z must lie in [0, {_TRANSITION_Z_CAP:.1f}]")
    ai = airy_ai_neg_ref(2 ** (1 / 3) * z, ctx)
    pow23 = order.nu ** (2 / 3)
    value = 2 ** (1 / 3) * ai.value / math.sqrt(pow23 + z)
    hw = 23 * max(1.0, z ** 2.25) / (2 * pow23 * math.sqrt(pow23 + z))
    return ApproxValue(value, hw, "transition", "transition")


def airy_approx(x: float, mode: str = "sharp") -> ApproxValue:
    """Certified oscillatory approximations of Ai(-x), x > 0.

    classic:    cos(zeta - pi/4)/(sqrt(pi) x^(1/4)), zeta = 2x^(3/2)/3,
                width 5/(6 sqrt(3) pi^(3/2) x^(7/4));
    sharp:      2 sqrt(x) cos(phi)/(sqrt(pi)(16x^3+5)^(1/4)) with the exact
                phase phi = sqrt(16x^3+5)/6
                          - (sqrt5/6) ln((sqrt(16x^3+5)+sqrt5)/(4x^(3/2))) - pi/4,
                width 10 sqrt(3)/(sqrt(pi) x^(1/4) (16x^3+5)^(3/2));
    simplified: same prefactor with phase (2/3)x^(3/2) - (5/48)x^(-3/2) - pi/4,
                width 5/(9 sqrt(pi) x^4 (16x^3+5)^(1/4)).
    """
    if x <= 0:
        raise DomainError("airy_approx: x must be positive")
    if mode == "classic":
        zeta = 2 * x ** 1.5 / 3
        value = math.cos(zeta - math.pi / 4) / (math.sqrt(math.pi) * x ** 0.25)
        hw = 5 / (6 * math.sqrt(3) * math.pi ** 1.5 * x ** 1.75)
        return ApproxValue(value, hw, "airy_classic", "oscillatory")
    q = 16 * x ** 3 + 5
    prefactor = 2 * math.sqrt(x) / (math.sqrt(math.pi) * q ** 0.25)
    if mode == "sharp":
        r = math.sqrt(q)
        phi = (r / 6 - math.sqrt(5) / 6 * math.log((r + math.sqrt(5)) / (4 * x ** 1.5))
               - math.pi / 4)
        hw = 10 * math.sqrt(3) / (math.sqrt(math.pi) * x ** 0.25 * q ** 1.5)
        return ApproxValue(prefactor * math.cos(phi), hw, "airy_sharp", "oscillatory")
    if mode == "simplified":
        phi = 2 / 3 * x ** 1.5 - 5 / 48 * x ** -1.5 - math.pi / 4
        hw = 5 / (9 * math.sqrt(math.pi) * x ** 4 * q ** 0.25)
        return ApproxValue(prefactor * math.cos(phi), hw, "airy_simplified", "oscillatory")
    raise DomainError(f"airy_approx: unknown mode {mode!r}")


def best_approx(order: Order, x: float,
                ctx: PrecisionCtx = DEFAULT_CTX) -> ApproxValue:
    """The applicable Bessel approximation with the smallest certified width.

    Every method whose precondition holds at (nu, x) is evaluated; none is
    extrapolated outside its domain.  Ties (e.g. all widths 0 at |nu| = 1/2)
    go to the earlier entry of: sharp_high, sharp_low, simplified, olver,
    classic, transition.  classic always applies, so the result is total
    for nu >= -1/2, x > 0.
    """
    candidates = [classic_oscillatory(order, x)]
    nu, mu = order.nu, order.mu
    if abs(nu) <= 0.5:
        candidates.append(sharper_oscillatory(order, x))
        candidates.append(simplified_oscillatory(order, x))
    elif x > max(mu, math.sqrt(mu)):
        candidates.append(sharper_oscillatory(order, x))
    if nu >= 0 and max(nu / 2 - 0.25, 1) <= 1:
        candidates.append(olver_expansion(order, x, 1, 1))
    if nu >= 0.5 and x >= nu:
        z = (x - nu) / nu ** (1 / 3)
        if z <= _TRANSITION_Z_CAP:
            candidates.append(transition(order, z, ctx))
    return min(candidates,
               key=lambda a: (a.half_width, _METHOD_ORDER.index(a.method)))
