"""Independent numerical checks for the continuous-spectrum results.

Two deliberately low-tech routes:

- ``finite_m_rate``: work on the exact m-antenna eigenvalue gains G(k/m).
  Equal-power mode averages log2(1 + P*g); waterfill mode runs the classical
  discrete staircase (sort the inverse gains, closed-form water level per
  active-set size) with total power m*P and reports the per-antenna rate.
  No bisection and no quadrature, so it shares no machinery with the
  continuous solver it is meant to check.

- ``brute_quadrature``: midpoint-rule discretization of any rational SNR
  density with the same staircase water-level search over the samples.

Both converge to the continuous waterfilling value as the resolution grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import ChannelSpec, SnrDensity, eigen_spectrum
from .waterfill import DegenerateDensityError

__all__ = [
    "OracleReport",
    "compare",
    "finite_m_rate",
    "brute_quadrature",
]


@dataclass(frozen=True)
class OracleReport:
    """Reference-vs-tested value pair with the absolute gap, for test logs."""

    target: str
    reference_value: float
    tested_value: float
    abs_gap: float
    m_or_points: int


def compare(target: str, reference_value: float, tested_value: float, m_or_points: int) -> OracleReport:
    return OracleReport(
        target=target,
        reference_value=reference_value,
        tested_value=tested_value,
        abs_gap=abs(reference_value - tested_value),
        m_or_points=m_or_points,
    )


def _staircase(noises: np.ndarray, total_power: float) -> tuple[float, float]:
    """Classical discrete waterfilling over unit-weight channels.

    Returns (sum of log2(mu/n_i) over the active set, mu).  Channels with
    infinite noise (zero gain) can never be active and are dropped up front.
    """
    finite = np.sort(noises[np.isfinite(noises)])
    if finite.size == 0 or total_power <= 0.0:
        return 0.0, float(finite[0]) if finite.size else math.inf
    levels = (total_power + np.cumsum(finite)) / np.arange(1, finite.size + 1)
    feasible = np.nonzero(levels > finite)[0]
    if feasible.size == 0:
        return 0.0, float(finite[0])
    k = int(feasible[-1]) + 1
    mu = float(levels[k - 1])
    return float(np.sum(np.log2(mu / finite[:k]))), mu


def finite_m_rate(spec: ChannelSpec, p: float, m: int, mode: str = "waterfill") -> float:
    """Per-antenna rate on the exact m-antenna eigenvalue gains.

    mode "equal_power": mean_k log2(1 + P * G(k/m)).
    mode "waterfill":   discrete staircase waterfilling of total power m*P
                        over the m gains, divided by m.
    """
    if p < 0.0:
        raise ValueError(f"p must be >= 0, got {p!r}")
    gains = eigen_spectrum(spec, m).gains
    if mode == "equal_power":
        return float(np.mean(np.log2(1.0 + p * gains)))
    if mode == "waterfill":
        with np.errstate(divide="ignore"):
            noises = 1.0 / gains
        total, _ = _staircase(noises, m * p)
        return total / m
    raise ValueError(f"mode must be 'waterfill' or 'equal_power', got {mode!r}")


def brute_quadrature(d: SnrDensity, p: float, points: int) -> float:
    """Midpoint-rule waterfilling rate over `points` uniform frequency samples.

    Serves as the slow reference for the panel-quadrature solver; needs no
    knowledge of band edges because the staircase finds the discrete water
    level directly.
    """
    if points < 1000:
        raise ValueError(f"points must be >= 1000, got {points!r}")
    if p < 0.0:
        raise ValueError(f"p must be >= 0, got {p!r}")
    if d.is_zero:
        if p > 0.0:
            raise DegenerateDensityError("cannot pour positive power into an identically zero density")
        return 0.0
    if p == 0.0:
        return 0.0
    f = (np.arange(points) + 0.5) / points
    rho = d.values(f)
    with np.errstate(divide="ignore"):
        noises = np.where(rho > 0.0, 1.0 / rho, math.inf)
    total, _ = _staircase(noises, p * points)
    return total / points
