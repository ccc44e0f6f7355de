"""Achievable per-antenna rates and bounds for each transmission scheme.

Scheme tags, with the link budget each one exercises (P = transmit SNR,
C = capacity of the source-to-transmit-antenna links, C' = capacity of the
receive-antenna-to-decoder links, either may be math.inf):

    UB      cut-set style upper bound min{C, C', R_WF(P)}
    IM      independent messages per antenna, needs C' = inf
    QW      quantized waterfilling descriptions, needs C' = inf
    EC      per-antenna elementary compression at the receivers, needs C = inf
    DC      distributed (binned) compression at the receivers, needs C = inf
    IM_EC, IM_DC, QW_EC, QW_DC
            transmit scheme paired with receive compression, any C, C'

All receive-side processing appears as either an equivalent noise lift
(elementary compression) or a capacity split solved as a fixed point
(distributed compression); the transmit side appears as a scaled/loaded SNR
density.  Everything funnels through the same rational-density waterfiller.

Rates are bit/(symbol * antenna) and clamped at 0.  Printed closed-form
bounds exist for UB, QW, EC and DC only; their tightness flags evaluate the
stated sufficient conditions verbatim, which is why upper_bound's threshold
2a/((1-a)(1-a^2)) differs from waterfill_rate_bound's by one (1-a) factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .fixedpoint import solve_fixed_point
from .spectrum import ChannelSpec, SnrDensity
from .waterfill import channel_waterfill_rate, waterfill

__all__ = [
    "Scheme",
    "LinkBudget",
    "SchemeRate",
    "upper_bound",
    "rate_nc",
    "rate_im",
    "rate_qw",
    "ec_equivalent_noise",
    "ec_high_power_limit",
    "rate_ec",
    "rate_dc",
    "rate_im_ec",
    "rate_im_dc",
    "rate_qw_ec",
    "rate_qw_dc",
    "evaluate_scheme",
    "applicable_schemes",
]


class Scheme(Enum):
    UB = "UB"
    IM = "IM"
    QW = "QW"
    EC = "EC"
    DC = "DC"
    IM_EC = "IM_EC"
    IM_DC = "IM_DC"
    QW_EC = "QW_EC"
    QW_DC = "QW_DC"


@dataclass(frozen=True)
class LinkBudget:
    """Operating point: transmit SNR p and link capacities c, cprime (inf ok)."""

    p: float
    c: float
    cprime: float

    def __post_init__(self) -> None:
        if not (self.p >= 0.0 and math.isfinite(self.p)):
            raise ValueError(f"p must be finite and >= 0, got {self.p!r}")
        if not self.c >= 0.0:
            raise ValueError(f"c must be >= 0, got {self.c!r}")
        if not self.cprime >= 0.0:
            raise ValueError(f"cprime must be >= 0, got {self.cprime!r}")


@dataclass(frozen=True)
class SchemeRate:
    """Rate plus the scheme's closed-form bound/flags where one exists."""

    scheme: Scheme
    rate: float
    printed_bound: float | None = None
    bound_tight: bool | None = None
    fixed_point: float | None = None


def _pow2_neg(x: float) -> float:
    # 2^(-x) with the extended-real convention 2^(-inf) = 0
    return 0.0 if math.isinf(x) else 2.0 ** (-x)


def _require_alpha_below_one(spec: ChannelSpec, what: str) -> None:
    if spec.alpha >= 1.0:
        raise ValueError(
            f"{what} carries a closed-form bound with 1/(1-alpha^2), singular at alpha = 1"
        )


def _inv_one_minus_a2(spec: ChannelSpec) -> float:
    return 1.0 / (1.0 - spec.alpha ** 2)


def rate_nc(spec: ChannelSpec, p: float) -> float:
    """Equal-power rate with no transmit cooperation,
    integral log2(1 + P*G(f)) df in closed form:
    log2((1 + (1+a^2)P + sqrt(1 + 2(1+a^2)P + (1-a^2)^2 P^2)) / 2).

    The radicand factors as (1 + (1-a)^2 P)(1 + (1+a)^2 P), used here since
    every factor is positive at any SNR.
    """
    if p < 0.0:
        raise ValueError(f"p must be >= 0, got {p!r}")
    a = spec.alpha
    radicand = (1.0 + (1.0 - a) ** 2 * p) * (1.0 + (1.0 + a) ** 2 * p)
    return math.log2((1.0 + (1.0 + a * a) * p + math.sqrt(radicand)) / 2.0)


def upper_bound(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Cut-set bound min{C, C', R_WF(P)}.

    The printed closed form replaces R_WF(P) by log2(P + 1/(1-a^2)); its
    tightness flag evaluates P >= 2a/((1-a)(1-a^2)).  Both are omitted at
    alpha = 1 where the closed form diverges.
    """
    rate = min(budget.c, budget.cprime, channel_waterfill_rate(spec, budget.p))
    a = spec.alpha
    if a >= 1.0:
        return SchemeRate(Scheme.UB, rate)
    printed = min(budget.c, budget.cprime, math.log2(budget.p + _inv_one_minus_a2(spec)))
    tight = budget.p >= 2.0 * a / ((1.0 - a) * (1.0 - a * a))
    return SchemeRate(Scheme.UB, rate, printed_bound=printed, bound_tight=tight)


def rate_im(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Independent messages: rate min{C, rate_nc(P)}; requires cprime = inf."""
    if not math.isinf(budget.cprime):
        raise ValueError("IM is defined for unconstrained receive links (cprime = inf)")
    return SchemeRate(Scheme.IM, min(budget.c, rate_nc(spec, budget.p)))


def _qw_density(spec: ChannelSpec, p: float, c: float) -> SnrDensity:
    # quantized waterfilling: signal scaled by 1 - 2^-C, quantization noise p*2^-C per gain
    s = _pow2_neg(c)
    return SnrDensity(kappa=1.0 - s, u=1.0, v=p * s, channel=spec)


def rate_qw(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Quantized waterfilling over the source links; requires cprime = inf.

    Waterfills rho(f) = (1-2^-C) G / (1 + P 2^-C G).  The printed bound is
    log2(P + 1/(1-a^2)) - rate_nc at power P*2^-C, tight for
    P >= 2a / ((1-2^-C)(1-a)(1-a^2)).
    """
    if not math.isinf(budget.cprime):
        raise ValueError("QW is defined for unconstrained receive links (cprime = inf)")
    _require_alpha_below_one(spec, "QW")
    p, c = budget.p, budget.c
    s = _pow2_neg(c)
    d = _qw_density(spec, p, c)
    rate = 0.0 if d.is_zero else waterfill(d, p).rate
    printed = max(0.0, math.log2(p + _inv_one_minus_a2(spec)) - rate_nc(spec, p * s))
    a = spec.alpha
    if d.is_zero:
        tight = False  # threshold diverges as C -> 0
    else:
        tight = p >= 2.0 * a / ((1.0 - s) * (1.0 - a) * (1.0 - a * a))
    return SchemeRate(Scheme.QW, rate, printed_bound=printed, bound_tight=tight)


def ec_equivalent_noise(spec: ChannelSpec, p: float, cprime: float) -> float:
    """Equivalent noise of per-antenna compress-and-forward receivers:

        N_EC = (1 + (1+a^2) P 2^-C') / (1 - 2^-C'),

    which is 1 at cprime = inf and diverges as cprime -> 0.
    """
    if not cprime > 0.0:
        raise ValueError("cprime = 0 gives infinite equivalent noise")
    s = _pow2_neg(cprime)
    return (1.0 + (1.0 + spec.alpha ** 2) * p * s) / (1.0 - s)


def ec_high_power_limit(spec: ChannelSpec, cprime: float) -> float:
    """P -> inf rate limit under elementary compression,
    log2((2^C' - 1)/(1+a^2) + 1/(1-a^2)); valid as the actual limit only
    when cprime > log2((1+a^2)/(1-a)^2)."""
    _require_alpha_below_one(spec, "the EC high-power limit")
    if math.isinf(cprime):
        return math.inf
    a2 = spec.alpha ** 2
    return math.log2((2.0 ** cprime - 1.0) / (1.0 + a2) + _inv_one_minus_a2(spec))


def _ec_conditions(spec: ChannelSpec, p: float, cprime: float) -> bool:
    # verbatim sufficient conditions for the EC bound to be attained; the
    # P-threshold denominator can go nonpositive, which reads as unsatisfied
    a = spec.alpha
    s = _pow2_neg(cprime)
    denom = (1.0 + a) * ((1.0 + a * a) * (1.0 - s) - 2.0 * a)
    cond_p = denom > 0.0 and p >= 2.0 * a / denom
    cond_c = cprime > math.log2((1.0 + a * a) / (1.0 - a) ** 2)
    return cond_p and cond_c


def rate_ec(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Elementary compression: waterfill the plain channel at SNR P/N_EC;
    requires c = inf.  Printed bound log2(P/N_EC + 1/(1-a^2))."""
    if not math.isinf(budget.c):
        raise ValueError("EC is defined for unconstrained source links (c = inf)")
    _require_alpha_below_one(spec, "EC")
    p, cprime = budget.p, budget.cprime
    if cprime == 0.0:
        noise = math.inf
        rate = 0.0
    else:
        noise = ec_equivalent_noise(spec, p, cprime)
        rate = channel_waterfill_rate(spec, p / noise)
    printed = math.log2(p / noise + _inv_one_minus_a2(spec))
    return SchemeRate(Scheme.EC, rate, printed_bound=printed, bound_tight=_ec_conditions(spec, p, cprime))


def _dc_conditions(spec: ChannelSpec, p: float, cprime: float) -> bool:
    a = spec.alpha
    s = _pow2_neg(cprime)
    denom = (1.0 - a) * ((1.0 - a * a) - s)
    cond_p = denom > 0.0 and p >= 2.0 * a / denom
    cond_c = cprime > 2.0 * math.log2(1.0 / (1.0 - a))
    return cond_p and cond_c


def rate_dc(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Distributed compression: split C' = r + payload with r solving

        R_WF(P (1 - 2^-r)) = C' - r,

    and report the left side at the root; requires c = inf.  Printed bound
    log2((P + 1/(1-a^2)) / (1 + P 2^-C')), which is exactly where the split
    lands when the waterfilling cap is tight at the effective power.
    """
    if not math.isinf(budget.c):
        raise ValueError("DC is defined for unconstrained source links (c = inf)")
    _require_alpha_below_one(spec, "DC")
    p, cprime = budget.p, budget.cprime
    if math.isinf(cprime):
        rate = channel_waterfill_rate(spec, p)
        fixed_point = None
    else:
        lhs = lambda r: channel_waterfill_rate(spec, p * (1.0 - _pow2_neg(r)))
        result = solve_fixed_point(lhs, cprime)
        fixed_point = result.r_star
        rate = channel_waterfill_rate(spec, p * (1.0 - _pow2_neg(fixed_point)))
    printed = math.log2((p + _inv_one_minus_a2(spec)) / (1.0 + p * _pow2_neg(cprime)))
    return SchemeRate(
        Scheme.DC,
        rate,
        printed_bound=printed,
        bound_tight=_dc_conditions(spec, p, cprime),
        fixed_point=fixed_point,
    )


def rate_im_ec(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Independent messages into per-antenna compressed receivers:
    min{C, log2((N + (1+a^2)P + sqrt((N + (1+a^2)P)^2 - 4a^2 P^2)) / (2N))}
    with N = N_EC.  Reduces to IM at cprime = inf (N = 1)."""
    p = budget.p
    if budget.cprime == 0.0:
        return SchemeRate(Scheme.IM_EC, 0.0)
    noise = ec_equivalent_noise(spec, p, budget.cprime)
    a = spec.alpha
    s = noise + (1.0 + a * a) * p
    # (s - 2ap)(s + 2ap) = s^2 - 4a^2p^2 with both factors positive
    radicand = (noise + (1.0 - a) ** 2 * p) * (s + 2.0 * a * p)
    r_prime = math.log2((s + math.sqrt(radicand)) / (2.0 * noise))
    return SchemeRate(Scheme.IM_EC, max(0.0, min(budget.c, r_prime)))


def rate_im_dc(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Independent messages into distributed-compression receivers:

        R' = log2((1 + AP + 2 a^2 2^-C' P^2 + sqrt(1 + 2AP + (B^2 + 4 a^2 2^-C') P^2))
                  / (2 (1 + 2^-C' P)(1 + a^2 2^-C' P)))

    with A = 1 + a^2, B = 1 - a^2; rate min{C, R'}.  Reduces to IM at
    cprime = inf and vanishes at cprime = 0."""
    p = budget.p
    a2 = spec.alpha ** 2
    s = _pow2_neg(budget.cprime)
    big_a = 1.0 + a2
    big_b = 1.0 - a2
    num = (
        1.0
        + big_a * p
        + 2.0 * a2 * s * p * p
        + math.sqrt(1.0 + 2.0 * big_a * p + (big_b * big_b + 4.0 * a2 * s) * p * p)
    )
    den = 2.0 * (1.0 + s * p) * (1.0 + a2 * s * p)
    r_prime = math.log2(num / den)
    return SchemeRate(Scheme.IM_DC, max(0.0, min(budget.c, r_prime)))


def rate_qw_ec(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Quantized waterfilling into per-antenna compressed receivers:
    waterfill rho = (1-2^-C) G / (N_EC + P 2^-C G) at power P."""
    p, c, cprime = budget.p, budget.c, budget.cprime
    if c == 0.0 or cprime == 0.0:
        return SchemeRate(Scheme.QW_EC, 0.0)
    s = _pow2_neg(c)
    noise = ec_equivalent_noise(spec, p, cprime)
    d = SnrDensity(kappa=1.0 - s, u=noise, v=p * s, channel=spec)
    return SchemeRate(Scheme.QW_EC, waterfill(d, p).rate)


def rate_qw_dc(spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Quantized waterfilling into distributed-compression receivers.

    The capacity split r solves

        R_WF over rho_r = (1 - 2^-r)(1 - 2^-C) G / (1 + P 2^-C G)  ==  C' - r,

    and the reported rate is the left side at the root.  Specializes to QW
    at cprime = inf and to DC at c = inf."""
    p, c, cprime = budget.p, budget.c, budget.cprime
    base = _qw_density(spec, p, c)

    if math.isinf(cprime):
        rate = 0.0 if base.is_zero else waterfill(base, p).rate
        return SchemeRate(Scheme.QW_DC, rate)

    def lhs(r: float) -> float:
        kappa = (1.0 - _pow2_neg(r)) * base.kappa
        if kappa == 0.0:
            return 0.0
        return waterfill(SnrDensity(kappa, base.u, base.v, spec), p).rate

    result = solve_fixed_point(lhs, cprime)
    return SchemeRate(Scheme.QW_DC, max(0.0, lhs(result.r_star)), fixed_point=result.r_star)


_EVALUATORS = {
    Scheme.UB: upper_bound,
    Scheme.IM: rate_im,
    Scheme.QW: rate_qw,
    Scheme.EC: rate_ec,
    Scheme.DC: rate_dc,
    Scheme.IM_EC: rate_im_ec,
    Scheme.IM_DC: rate_im_dc,
    Scheme.QW_EC: rate_qw_ec,
    Scheme.QW_DC: rate_qw_dc,
}


def applicable_schemes(budget: LinkBudget) -> tuple[Scheme, ...]:
    """Schemes whose preconditions the budget satisfies, in enum order."""
    out = []
    for scheme in Scheme:
        if scheme in (Scheme.IM, Scheme.QW) and not math.isinf(budget.cprime):
            continue
        if scheme in (Scheme.EC, Scheme.DC) and not math.isinf(budget.c):
            continue
        out.append(scheme)
    return tuple(out)


def evaluate_scheme(scheme: Scheme, spec: ChannelSpec, budget: LinkBudget) -> SchemeRate:
    """Dispatch a scheme evaluation; raises ValueError on precondition violations."""
    return _EVALUATORS[scheme](spec, budget)
