"""Capacity analysis for distributed MIMO over the circulant interference channel.

The package computes the per-antenna rates achievable when the transmit
and/or receive antennas are connected to the message source / final decoder
through finite-capacity links, together with the matching upper bounds:
spectral waterfilling, scheme closed forms, the compression fixed points,
discrete oracles, and a sweep/report command line.
"""

from .fixedpoint import (
    BracketError,
    FixedPointConvergenceError,
    FixedPointResult,
    solve_fixed_point,
)
from .oracle import OracleReport, brute_quadrature, compare, finite_m_rate
from .schemes import (
    LinkBudget,
    Scheme,
    SchemeRate,
    applicable_schemes,
    ec_equivalent_noise,
    ec_high_power_limit,
    evaluate_scheme,
    rate_dc,
    rate_ec,
    rate_im,
    rate_im_dc,
    rate_im_ec,
    rate_nc,
    rate_qw,
    rate_qw_dc,
    rate_qw_ec,
    upper_bound,
)
from .spectrum import (
    ChannelSpec,
    EigenSpectrum,
    SnrDensity,
    channel_gain,
    density_eval,
    eigen_spectrum,
)
from .waterfill import (
    DegenerateDensityError,
    WaterfillConvergenceError,
    WaterfillSolution,
    channel_waterfill_rate,
    waterfill,
    waterfill_rate_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BracketError",
    "ChannelSpec",
    "DegenerateDensityError",
    "EigenSpectrum",
    "FixedPointConvergenceError",
    "FixedPointResult",
    "LinkBudget",
    "OracleReport",
    "Scheme",
    "SchemeRate",
    "SnrDensity",
    "WaterfillConvergenceError",
    "WaterfillSolution",
    "applicable_schemes",
    "brute_quadrature",
    "channel_gain",
    "channel_waterfill_rate",
    "compare",
    "density_eval",
    "ec_equivalent_noise",
    "ec_high_power_limit",
    "eigen_spectrum",
    "evaluate_scheme",
    "finite_m_rate",
    "rate_dc",
    "rate_ec",
    "rate_im",
    "rate_im_dc",
    "rate_im_ec",
    "rate_nc",
    "rate_qw",
    "rate_qw_dc",
    "rate_qw_ec",
    "solve_fixed_point",
    "upper_bound",
    "waterfill",
    "waterfill_rate_bound",
    "__version__",
]
