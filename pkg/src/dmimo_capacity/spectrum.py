"""Spatial spectrum of the symmetric circulant interference channel.

Each receive antenna hears its own transmitter plus a fraction ``alpha`` of
one neighbor on a ring, so in the wideband (many-antenna) limit the channel
is characterized by the power spectrum

    G(f) = 1 + alpha^2 + 2*alpha*cos(2*pi*f),      f in [0, 1).

Every transmission/compression scheme handled by this package sees the
channel through an effective SNR density of the rational form

    rho(f) = kappa * G(f) / (u + v * G(f)),

so a density is stored as the coefficient triple (kappa, u, v) instead of an
opaque callable.  Downstream code exploits the rational structure to place
water levels analytically (see waterfill.py).

For a finite ring of m antennas the circulant channel matrix has eigenvalue
gains |1 + alpha*exp(-2j*pi*k/m)|^2 = G(k/m); ``eigen_spectrum`` materializes
them exactly, which is what the discrete oracles consume.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChannelSpec",
    "SnrDensity",
    "EigenSpectrum",
    "channel_gain",
    "density_eval",
    "eigen_spectrum",
]


@dataclass(frozen=True)
class ChannelSpec:
    """Circulant interference channel with neighbor gain alpha in [0, 1]."""

    alpha: float

    def __post_init__(self) -> None:
        if not (isinstance(self.alpha, (int, float)) and 0.0 <= self.alpha <= 1.0):
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha!r}")
        object.__setattr__(self, "alpha", float(self.alpha))

    @classmethod
    def from_alpha_squared(cls, alpha2: float) -> "ChannelSpec":
        """Build from alpha^2, the usual sweep parameterization (positive root)."""
        if not 0.0 <= alpha2 <= 1.0:
            raise ValueError(f"alpha^2 must lie in [0, 1], got {alpha2!r}")
        return cls(math.sqrt(alpha2))

    @property
    def gain_min(self) -> float:
        """min_f G(f) = (1 - alpha)^2, attained at f = 1/2."""
        return (1.0 - self.alpha) ** 2

    @property
    def gain_max(self) -> float:
        """max_f G(f) = (1 + alpha)^2, attained at f = 0."""
        return (1.0 + self.alpha) ** 2


def _gain_values(alpha: float, f: np.ndarray) -> np.ndarray:
    # vectorized G(f); no domain checks, internal use only
    return 1.0 + alpha * alpha + 2.0 * alpha * np.cos(2.0 * math.pi * f)


def channel_gain(spec: ChannelSpec, f: float) -> float:
    """Power spectrum G(f) = 1 + alpha^2 + 2*alpha*cos(2*pi*f), f in [0, 1)."""
    if not 0.0 <= f < 1.0:
        raise ValueError(f"frequency must lie in [0, 1), got {f!r}")
    a = spec.alpha
    return 1.0 + a * a + 2.0 * a * math.cos(2.0 * math.pi * f)


@dataclass(frozen=True)
class SnrDensity:
    """Rational SNR density rho(f) = kappa*G(f) / (u + v*G(f)).

    kappa >= 0 scales the useful signal, u > 0 is the flat noise floor and
    v >= 0 the self-interference weight.  The plain channel at unit noise is
    (kappa, u, v) = (1, 1, 0).
    """

    kappa: float
    u: float
    v: float
    channel: ChannelSpec

    def __post_init__(self) -> None:
        if self.kappa < 0.0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa!r}")
        if not self.u > 0.0:
            raise ValueError(f"u must be > 0, got {self.u!r}")
        if self.v < 0.0:
            raise ValueError(f"v must be >= 0, got {self.v!r}")

    @classmethod
    def plain(cls, channel: ChannelSpec) -> "SnrDensity":
        """Density of the raw channel at unit noise: rho = G."""
        return cls(1.0, 1.0, 0.0, channel)

    def value_at_gain(self, g: float) -> float:
        """rho as a function of the gain value g = G(f); increasing in g."""
        denom = self.u + self.v * g
        if denom <= 0.0:
            raise ValueError("degenerate density: u + v*G(f) must stay positive")
        return self.kappa * g / denom

    @property
    def rho_max(self) -> float:
        return self.value_at_gain(self.channel.gain_max)

    @property
    def rho_min(self) -> float:
        return self.value_at_gain(self.channel.gain_min)

    @property
    def is_zero(self) -> bool:
        """True when rho vanishes identically (kappa = 0)."""
        return self.kappa == 0.0

    def values(self, f: np.ndarray) -> np.ndarray:
        # vectorized evaluation for quadrature; internal use
        g = _gain_values(self.channel.alpha, f)
        return self.kappa * g / (self.u + self.v * g)


def density_eval(d: SnrDensity, f: float) -> float:
    """Evaluate rho(f) = kappa*G(f)/(u + v*G(f)) at a single frequency."""
    g = channel_gain(d.channel, f)
    return d.value_at_gain(g)


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigenvalue gains of the m-antenna circulant channel, gains[k] = G(k/m)."""

    m: int
    gains: np.ndarray

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m!r}")
        if len(self.gains) != self.m:
            raise ValueError("gains must hold exactly m values")
        self.gains.setflags(write=False)


def eigen_spectrum(spec: ChannelSpec, m: int) -> EigenSpectrum:
    """Exact finite-m eigenvalue gains G(k/m), k = 0..m-1."""
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    k = np.arange(m, dtype=float)
    return EigenSpectrum(int(m), _gain_values(spec.alpha, k / m))
