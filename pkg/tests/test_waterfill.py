import math

import numpy as np
import pytest

from dmimo_capacity import (
    ChannelSpec,
    DegenerateDensityError,
    SnrDensity,
    brute_quadrature,
    channel_waterfill_rate,
    density_eval,
    finite_m_rate,
    waterfill,
    waterfill_rate_bound,
)

RNG = np.random.default_rng(67405)


def _plain(a2: float) -> SnrDensity:
    return SnrDensity.plain(ChannelSpec.from_alpha_squared(a2))


def test_flat_channel_one_bit():
    sol = waterfill(_plain(0.0), 1.0)
    assert sol.rate == pytest.approx(1.0, abs=1e-15)
    assert sol.mu == pytest.approx(2.0, abs=1e-15)


def test_zero_power():
    sol = waterfill(_plain(0.6), 0.0)
    assert sol.rate == 0.0
    assert sol.power_used == 0.0
    assert sol.active_band == ()
    # convention: water sits at the inversion of the best SNR
    assert sol.mu == pytest.approx(1.0 / _plain(0.6).rho_max, rel=1e-14)


def test_high_power_closed_form():
    # above the tightness threshold the full band is active and the rate
    # collapses to log2(P + 1/(1 - alpha^2))
    sol = waterfill(_plain(0.6), 100.0)
    assert abs(sol.rate - math.log2(102.5)) < 1e-8


def test_channel_rate_flat():
    assert channel_waterfill_rate(ChannelSpec(alpha=0.0), 3.0) == pytest.approx(2.0, abs=1e-14)


def test_channel_rate_below_threshold_strict():
    spec = ChannelSpec.from_alpha_squared(0.6)
    r = channel_waterfill_rate(spec, 10.0)
    bound, tight = waterfill_rate_bound(spec, 10.0)
    assert not tight
    assert r < bound
    assert bound == pytest.approx(math.log2(12.5), abs=1e-15)
    # high-resolution midpoint oracle agrees
    oracle = brute_quadrature(_plain(0.6), 10.0, 1_000_000)
    assert abs(r - oracle) < 1e-9


def test_bound_flat_case():
    bound, tight = waterfill_rate_bound(ChannelSpec(alpha=0.0), 7.0)
    assert bound == 3.0
    assert tight


def test_bound_tight_case():
    bound, tight = waterfill_rate_bound(ChannelSpec.from_alpha_squared(0.6), 100.0)
    assert bound == pytest.approx(math.log2(102.5), abs=1e-15)
    assert tight


def test_bound_threshold_value():
    # tightness flips exactly at 2a / ((1-a)^2 (1-a^2))
    a = math.sqrt(0.6)
    thr = 2.0 * a / ((1.0 - a) ** 2 * (1.0 - a * a))
    spec = ChannelSpec.from_alpha_squared(0.6)
    assert waterfill_rate_bound(spec, thr)[1]
    assert not waterfill_rate_bound(spec, thr * 0.999)[1]


def test_bound_rejects_alpha_one():
    with pytest.raises(ValueError):
        waterfill_rate_bound(ChannelSpec(alpha=1.0), 10.0)


def test_power_conservation_random():
    # 200 random densities, relative power residual below 1e-10
    for _ in range(200):
        spec = ChannelSpec(alpha=float(RNG.uniform(0.0, 1.0)))
        d = SnrDensity(
            kappa=float(RNG.uniform(0.05, 2.0)),
            u=float(RNG.uniform(0.1, 3.0)),
            v=float(RNG.uniform(0.0, 2.0)),
            channel=spec,
        )
        p = float(RNG.uniform(0.0, 300.0))
        sol = waterfill(d, p)
        assert abs(sol.power_used - p) <= 1e-10 * max(p, 1.0)


def test_rate_monotone_in_power():
    spec = ChannelSpec.from_alpha_squared(0.9)
    rates = [channel_waterfill_rate(spec, p) for p in (0.0, 0.1, 1.0, 5.0, 20.0, 200.0)]
    assert all(b >= a - 1e-12 for a, b in zip(rates, rates[1:]))


def test_rate_monotone_in_kappa():
    spec = ChannelSpec.from_alpha_squared(0.6)
    rates = [
        waterfill(SnrDensity(kappa=k, u=1.0, v=0.5, channel=spec), 10.0).rate
        for k in (0.05, 0.2, 0.5, 0.9375, 1.0)
    ]
    assert all(b >= a - 1e-12 for a, b in zip(rates, rates[1:]))


def test_closed_form_agreement_scaled_noise():
    # rho = G/N: tight flag predicts closed-form equality, otherwise strict gap
    for a2 in (0.3, 0.6, 0.9):
        spec = ChannelSpec.from_alpha_squared(a2)
        for n in (0.5, 1.0, 4.0):
            for p in (0.1, 1.0, 10.0, 100.0, 1000.0, 10000.0):
                sol = waterfill(SnrDensity(1.0, n, 0.0, spec), p)
                bound, tight = waterfill_rate_bound(spec, p / n)
                if tight:
                    assert abs(sol.rate - bound) < 1e-8
                else:
                    assert sol.rate < bound


def test_flat_channel_exactness_random():
    spec = ChannelSpec(alpha=0.0)
    for _ in range(50):
        kappa = float(RNG.uniform(0.05, 2.0))
        u = float(RNG.uniform(0.1, 3.0))
        v = float(RNG.uniform(0.0, 2.0))
        p = float(RNG.uniform(0.0, 50.0))
        sol = waterfill(SnrDensity(kappa, u, v, spec), p)
        assert abs(sol.rate - math.log2(1.0 + p * kappa / (u + v))) < 1e-12


def test_active_band_edge_sits_on_waterline():
    spec = ChannelSpec.from_alpha_squared(0.6)
    sol = waterfill(SnrDensity.plain(spec), 10.0)
    (lo, hi), = sol.active_band
    assert lo == 0.0
    assert 0.0 < hi < 0.5
    d = SnrDensity.plain(spec)
    assert sol.mu * density_eval(d, hi) == pytest.approx(1.0, abs=1e-9)


def test_full_band_when_power_large():
    spec = ChannelSpec.from_alpha_squared(0.6)
    sol = waterfill(SnrDensity.plain(spec), 100.0)
    (lo, hi), = sol.active_band
    assert lo == 0.0
    assert hi == 0.5


def test_degenerate_density_rejected():
    spec = ChannelSpec(alpha=0.5)
    zero = SnrDensity(kappa=0.0, u=1.0, v=0.0, channel=spec)
    with pytest.raises(DegenerateDensityError):
        waterfill(zero, 1.0)
    # no power wanted: fine, nothing to pour
    assert waterfill(zero, 0.0).rate == 0.0


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        waterfill(_plain(0.3), -1.0)


def test_discrete_oracle_equivalence():
    # classical discrete waterfilling over 4096 eigenvalue gains stays
    # within 1e-4 of the continuous solution across the evaluation grid
    for a2 in (0.0, 0.3, 0.6, 0.9):
        spec = ChannelSpec.from_alpha_squared(a2)
        for p in (0.1, 1.0, 10.0, 100.0, 1000.0):
            cont = channel_waterfill_rate(spec, p)
            disc = finite_m_rate(spec, p, 4096, "waterfill")
            assert abs(cont - disc) < 1e-4


def test_quantized_density_against_brute():
    spec = ChannelSpec.from_alpha_squared(0.6)
    d = SnrDensity(kappa=0.9375, u=1.0, v=0.625, channel=spec)
    fine = waterfill(d, 10.0).rate
    oracle = brute_quadrature(d, 10.0, 400_000)
    assert abs(fine - oracle) < 1e-8
