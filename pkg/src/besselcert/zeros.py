"""Zero locations of Ai(-x) and J_nu(x): explicit brackets plus refinement.

The closed-form estimates carry certified half-widths; the refinement
routines produce the truth the brackets are tested against, by sign-change
scanning of the reference evaluator followed by bisection.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

from .oracle import (
    DEFAULT_CTX,
    DomainError,
    Order,
    PrecisionCtx,
    airy_ai_neg_ref,
    bessel_j_ref,
    refine_root,
)
from .bounds import BoundReport, _make

_AIRY_S_CAP = 50
_BESSEL_X_CAP = 200.0


@dataclass(frozen=True)
class ZeroEstimate:
    """A zero estimate with its certified bracket.

    Two-sided: the zero lies in [center - half_width, center + half_width].
    One-sided (from a squared error term): [center, center + half_width].
    """

    family: str
    s: int
    nu: float | None
    center: float
    half_width: float
    one_sided: bool

    def bracket(self) -> tuple[float, float]:
        lo = self.center if self.one_sided else self.center - self.half_width
        return lo, self.center + self.half_width


def _m_of(s: int) -> float:
    return (12 * s - 3) * math.pi


def airy_zero_estimate(s: int, mode: str = "full") -> ZeroEstimate:
    """Closed-form estimate of the s-th zero a_s of Ai(-x).

    With m = (12s-3)pi:
      full:       center = 16^(-2/3)(m + sqrt(m^2+40))^(2/3),
                  half_width = 1280 pi/(9 m^3 (m^2+40)^(1/6));
      simplified: center = (1/4)(m^2+20)^(1/3),
                  half_width = 456/(m^3 (m^2+40)^(1/6)).
    Already at s = 1 the full center is within 0.00122 of the true zero.
    """
    if s < 1:
        raise DomainError("airy_zero_estimate: s must be >= 1")
    m = _m_of(s)
    q = math.sqrt(m * m + 40)
    if mode == "full":
        center = 16 ** (-2 / 3) * (m + q) ** (2 / 3)
        hw = 1280 * math.pi / (9 * m ** 3 * (m * m + 40) ** (1 / 6))
    elif mode == "simplified":
        center = 0.25 * (m * m + 20) ** (1 / 3)
        hw = 456 / (m ** 3 * (m * m + 40) ** (1 / 6))
    else:
        raise DomainError(f"airy_zero_estimate: unknown mode {mode!r}")
    return ZeroEstimate("airy", s, None, center, hw, one_sided=False)


def bessel_first_zeros_estimate(order: Order, s: int) -> ZeroEstimate:
    """One-sided bracket for j_{nu,s} built from the refined Airy zero a_s.

    j_{nu,s} lies in [nu + 2^(-1/3) a_s nu^(1/3), same + (3 2^(-2/3) a_s^2/10) nu^(-1/3)].
    The a_s fed in is the refined zero, not the closed-form estimate, so the
    bracket tests only this expansion's own error.
    """
    if order.nu <= 0:
        raise DomainError("bessel_first_zeros_estimate: nu must be positive")
    if s < 1:
        raise DomainError("bessel_first_zeros_estimate: s must be >= 1")
    a_s = refine_airy_zero(s)
    nu = order.nu
    center = nu + 2 ** (-1 / 3) * a_s * nu ** (1 / 3)
    hw = 3 * 2 ** (-2 / 3) * a_s * a_s / 10 * nu ** (-1 / 3)
    return ZeroEstimate("bessel", s, nu, center, hw, one_sided=True)


@lru_cache(maxsize=None)
def _airy_zeros_through(n: int, ctx: PrecisionCtx = DEFAULT_CTX) -> tuple[float, ...]:
    found = []
    x = 2.0
    prev_x, prev_v = x, airy_ai_neg_ref(x, ctx).value
    while len(found) < n:
        if x > 130:  # past the evaluator's domain long before s = 50
            raise RuntimeError("airy zero scan exceeded its cap")
        x += 0.1
        v = airy_ai_neg_ref(x, ctx).value
        if prev_v * v < 0:
            found.append(refine_root(lambda t: airy_ai_neg_ref(t, ctx).value,
                                     (prev_x, x), 1e-11))
        prev_x, prev_v = x, v
    return tuple(found)


def refine_airy_zero(s: int, ctx: PrecisionCtx = DEFAULT_CTX) -> float:
    """The s-th positive zero of Ai(-x) to ~1e-11, s <= 50."""
    if not 1 <= s <= _AIRY_S_CAP:
        raise DomainError(f"refine_airy_zero: s must lie in [1, {_AIRY_S_CAP}]")
    return _airy_zeros_through(s, ctx)[s - 1]


@lru_cache(maxsize=None)
def _bessel_zeros_through(nu: float, n: int,
                          ctx: PrecisionCtx = DEFAULT_CTX) -> tuple[float, ...]:
    order = Order(nu)
    found = []
    x = max(nu, 0.05)
    prev_x, prev_v = x, bessel_j_ref(order, x, ctx).value
    while len(found) < n:
        if x > _BESSEL_X_CAP:
            raise RuntimeError("bessel zero scan exceeded the x cap")
        x += 0.25
        v = bessel_j_ref(order, min(x, _BESSEL_X_CAP), ctx).value
        if prev_v * v < 0:
            found.append(refine_root(lambda t: bessel_j_ref(order, t, ctx).value,
                                     (prev_x, x), 1e-11))
        prev_x, prev_v = x, v
    return tuple(found)


def refine_bessel_zero(order: Order, s: int, ctx: PrecisionCtx = DEFAULT_CTX) -> float:
    """The s-th positive zero j_{nu,s} of J_nu to ~1e-11 (scan capped at x = 200)."""
    if s < 1:
        raise DomainError("refine_bessel_zero: s must be >= 1")
    return _bessel_zeros_through(order.nu, s, ctx)[s - 1]


def center_gap_check(s: int) -> tuple[BoundReport, BoundReport]:
    """The simplified center exceeds the full one by less than 25/(3 m^3 (m^2+40)^(1/6)).

    The difference is evaluated through the exact difference-of-cubes identity
      simplified^3 - full^3 = 25/(8(m^2 + 20 + m sqrt(m^2+40))),
    because the naive float subtraction of two nearly equal cube roots loses
    all significance by s ~ 50.
    """
    m = _m_of(s)
    q = math.sqrt(m * m + 40)
    full_c = 16 ** (-2 / 3) * (m + q) ** (2 / 3)
    simp_c = 0.25 * (m * m + 20) ** (1 / 3)
    gap = 25 / (8 * (m * m + 20 + m * q)
                * (simp_c * simp_c + simp_c * full_c + full_c * full_c))
    cap = 25 / (3 * m ** 3 * (m * m + 40) ** (1 / 6))
    positive = _make("center_gap_positive", 0.0, gap, strict=True, slack=0.0)
    below = _make("center_gap_cap", gap, cap, strict=True, slack=0.0)
    return positive, below


def conjecture_check(s: int) -> BoundReport:
    """Is the refined a_s strictly below the full closed-form center?

    Informational only: the claim is a conjecture, so a false report here is
    recorded but is not a build failure.
    """
    if not 1 <= s <= _AIRY_S_CAP:
        raise DomainError(f"conjecture_check: s must lie in [1, {_AIRY_S_CAP}]")
    refined = refine_airy_zero(s)
    closed = airy_zero_estimate(s, "full").center
    return _make("conjecture_zero_cap", refined, closed, strict=True, slack=1e-9)
