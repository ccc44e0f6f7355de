"""Spectral waterfilling over rational SNR densities.

The allocation that maximizes rate under a total-power constraint pours
power S(f) = (mu - 1/rho(f))+ up to a water level mu chosen so that
integral_0^1 S(f) df = P, and achieves

    R = integral_0^1 (log2(mu * rho(f)))+ df.

Because rho is a monotone rational map of G and G is strictly monotone on
[0, 1/2], the waterline mu*rho(f) = 1 reduces to cos(2*pi*f) = const, so the
active band is [0, f*) with f* known in closed form for any mu.  On the
active band 1/rho(f) = v/kappa + (u/kappa)/G(f), and integral df/G has an
elementary antiderivative, so the power side of the problem is evaluated
exactly; mu is then found by monotone bisection down to a 1e-12 relative
power residual.  Only the rate integral needs quadrature: composite
Gauss-Legendre (order 40, 32 panels) on the kink-split band, which is
spectrally accurate because the integrand is analytic there.

Symmetry G(f) = G(1-f) lets everything run on [0, 1/2] and double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import ChannelSpec, SnrDensity

__all__ = [
    "WaterfillSolution",
    "DegenerateDensityError",
    "WaterfillConvergenceError",
    "waterfill",
    "channel_waterfill_rate",
    "waterfill_rate_bound",
]

_GL_ORDER = 40
_GL_PANELS = 32
_POWER_RTOL = 1e-12
_MAX_BISECT = 200

# reference nodes/weights on [-1, 1], computed once
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_GL_ORDER)


class DegenerateDensityError(ValueError):
    """The SNR density vanishes identically but positive power was requested."""


class WaterfillConvergenceError(RuntimeError):
    """Water-level bisection failed to meet the power residual (signals a bug)."""


@dataclass(frozen=True)
class WaterfillSolution:
    """Water level, achieved rate, poured power, and active band in [0, 1/2]."""

    mu: float
    rate: float
    power_used: float
    active_band: tuple[tuple[float, float], ...]


def _inv_gain_integral(alpha: float, x: float) -> float:
    """integral_0^x dt / G(t) for x in [0, 1/2].

    For alpha < 1 the closed form is
        arctan(((1-alpha)/(1+alpha)) * tan(pi*x)) / (pi*(1-alpha^2)),
    which tends to 1/(2*(1-alpha^2)) at x = 1/2.  At alpha = 1 the integrand
    is 1/(4*cos^2(pi*t)) with antiderivative tan(pi*x)/(4*pi); callers keep
    x < 1/2 there because G vanishes at the band edge.
    """
    if alpha == 0.0:
        return x
    if alpha == 1.0:
        return math.tan(math.pi * x) / (4.0 * math.pi)
    one_minus = 1.0 - alpha * alpha
    if x >= 0.5:
        return 0.5 / one_minus
    ratio = (1.0 - alpha) / (1.0 + alpha)
    return math.atan(ratio * math.tan(math.pi * x)) / (math.pi * one_minus)


def _band_edge(d: SnrDensity, mu: float) -> float:
    """Right edge f* of the active band {f in [0,1/2]: mu*rho(f) >= 1}.

    rho decreases on [0, 1/2], so the band is [0, f*).  mu*rho = 1 means
    G = u/(kappa*mu - v); mapping back through cos(2*pi*f) gives f*.
    """
    denom = d.kappa * mu - d.v
    if denom <= 0.0:
        return 0.0
    g_star = d.u / denom
    ch = d.channel
    if g_star >= ch.gain_max:
        return 0.0
    if g_star <= ch.gain_min:
        return 0.5
    # gain_min < g_star < gain_max forces alpha > 0
    c = (g_star - 1.0 - ch.alpha ** 2) / (2.0 * ch.alpha)
    c = min(1.0, max(-1.0, c))
    return math.acos(c) / (2.0 * math.pi)


def _poured_power(d: SnrDensity, mu: float) -> tuple[float, float]:
    """Exact integral_0^1 (mu - 1/rho)+ df and the band edge at level mu."""
    f_star = _band_edge(d, mu)
    if f_star <= 0.0:
        return 0.0, 0.0
    alpha = d.channel.alpha
    half = (mu - d.v / d.kappa) * f_star - (d.u / d.kappa) * _inv_gain_integral(alpha, f_star)
    return 2.0 * half, f_star


def _rate_integral(d: SnrDensity, mu: float, f_star: float) -> float:
    """2 * integral_0^{f*} log2(mu*rho(f)) df via composite Gauss-Legendre."""
    if f_star <= 0.0:
        return 0.0
    edges = np.linspace(0.0, f_star, _GL_PANELS + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half_w = 0.5 * (edges[1] - edges[0])
    nodes = (mid[:, None] + half_w * _GL_NODES[None, :]).ravel()
    weights = np.tile(half_w * _GL_WEIGHTS, _GL_PANELS)
    vals = np.log2(mu * d.values(nodes))
    return max(0.0, 2.0 * float(np.dot(weights, vals)))


def waterfill(d: SnrDensity, power: float) -> WaterfillSolution:
    """Solve the power-constrained spectral allocation for density d.

    Args:
        d: SNR density rho(f) = kappa*G/(u + v*G).
        power: total power budget P >= 0.

    Returns:
        WaterfillSolution with |power_used - P| <= 1e-12 * max(P, 1).

    Raises:
        DegenerateDensityError: rho == 0 identically and P > 0.
        WaterfillConvergenceError: bisection exhausted its iteration cap.
    """
    if power < 0.0:
        raise ValueError(f"power must be >= 0, got {power!r}")
    if d.is_zero:
        if power > 0.0:
            raise DegenerateDensityError("cannot pour positive power into an identically zero density")
        return WaterfillSolution(mu=math.inf, rate=0.0, power_used=0.0, active_band=())
    if power == 0.0:
        # convention: water level sits at the best inverse SNR, band empty
        return WaterfillSolution(mu=1.0 / d.rho_max, rate=0.0, power_used=0.0, active_band=())

    alpha = d.channel.alpha
    if alpha == 0.0:
        # flat channel: exact solution, no search
        rho_c = d.rho_max
        mu = power + 1.0 / rho_c
        rate = math.log2(1.0 + power * rho_c)
        return WaterfillSolution(mu=mu, rate=rate, power_used=power, active_band=((0.0, 0.5),))

    tol = _POWER_RTOL * max(power, 1.0)
    mu_lo = 1.0 / d.rho_max  # poured power 0 here
    rho_min = d.rho_min
    mu_hi = power + (1.0 / rho_min if rho_min > 0.0 else 1.0 / d.rho_max)
    for _ in range(_MAX_BISECT):
        if _poured_power(d, mu_hi)[0] >= power:
            break
        mu_hi *= 2.0
    else:
        raise WaterfillConvergenceError("failed to bracket the water level")

    mu = mu_hi
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (mu_lo + mu_hi)
        poured, _ = _poured_power(d, mid)
        if abs(poured - power) <= tol:
            mu = mid
            break
        if poured < power:
            mu_lo = mid
        else:
            mu_hi = mid
    else:
        raise WaterfillConvergenceError(
            f"water level bisection did not reach the {_POWER_RTOL:g} relative power residual"
        )

    poured, f_star = _poured_power(d, mu)
    rate = _rate_integral(d, mu, f_star)
    band = ((0.0, f_star),) if f_star > 0.0 else ()
    return WaterfillSolution(mu=mu, rate=rate, power_used=poured, active_band=band)


def channel_waterfill_rate(spec: ChannelSpec, power: float) -> float:
    """Waterfilling rate of the raw channel at unit noise, R_WF(P)."""
    return waterfill(SnrDensity.plain(spec), power).rate


def waterfill_rate_bound(spec: ChannelSpec, snr: float) -> tuple[float, bool]:
    """Closed-form cap log2(snr + 1/(1-alpha^2)) on the waterfilling rate.

    Returns (bound, tight) where tight reports the sufficient condition
    snr >= 2*alpha / ((1-alpha)^2 * (1-alpha^2)) under which the cap is
    attained exactly.  Note the condition is conservative: equality already
    holds once the water covers the whole band, which happens at the lower
    threshold 2*alpha / ((1-alpha)^2 * (1+alpha)) exposed indirectly through
    schemes.upper_bound.
    """
    a = spec.alpha
    if a >= 1.0:
        raise ValueError("bound undefined at alpha = 1: 1/(1-alpha^2) diverges")
    if snr < 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    bound = math.log2(snr + 1.0 / (1.0 - a * a))
    if a == 0.0:
        return bound, True
    threshold = 2.0 * a / ((1.0 - a) ** 2 * (1.0 - a * a))
    return bound, snr >= threshold
