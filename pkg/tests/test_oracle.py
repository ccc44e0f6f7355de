import math

import pytest

from dmimo_capacity import (
    ChannelSpec,
    DegenerateDensityError,
    SnrDensity,
    brute_quadrature,
    channel_waterfill_rate,
    compare,
    finite_m_rate,
    rate_nc,
)

SPEC06 = ChannelSpec.from_alpha_squared(0.6)


def test_equal_power_flat_exact():
    spec = ChannelSpec(alpha=0.0)
    assert finite_m_rate(spec, 10.0, 64, "equal_power") == pytest.approx(
        math.log2(11.0), abs=1e-14
    )


def test_waterfill_flat_exact():
    spec = ChannelSpec(alpha=0.0)
    assert finite_m_rate(spec, 10.0, 64, "waterfill") == pytest.approx(
        math.log2(11.0), abs=1e-12
    )


def test_equal_power_tracks_closed_form():
    # the spectral mean over 4096 antenna gains nails the closed form
    gap = abs(finite_m_rate(SPEC06, 10.0, 4096, "equal_power") - rate_nc(SPEC06, 10.0))
    assert gap < 1e-12


def test_waterfill_tracks_continuous():
    for p in (10.0, 100.0):
        cont = channel_waterfill_rate(SPEC06, p)
        disc = finite_m_rate(SPEC06, p, 4096, "waterfill")
        assert abs(cont - disc) < 1e-8


def test_waterfill_discrete_beats_equal_power():
    # optimized power allocation can only help
    for p in (0.1, 1.0, 10.0):
        wf = finite_m_rate(SPEC06, p, 1024, "waterfill")
        ep = finite_m_rate(SPEC06, p, 1024, "equal_power")
        assert wf >= ep - 1e-12


def test_gap_shrinks_with_m():
    # no rate claim on the order of convergence, only that refinement
    # never hurts; the absolute level is far below the 1e-4 contract
    cont = channel_waterfill_rate(SPEC06, 10.0)
    gaps = [
        abs(finite_m_rate(SPEC06, 10.0, m, "waterfill") - cont)
        for m in (512, 1024, 2048, 4096)
    ]
    assert all(b <= a + 1e-15 for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-4


def test_mode_validated():
    with pytest.raises(ValueError):
        finite_m_rate(SPEC06, 1.0, 16, "nope")
    with pytest.raises(ValueError):
        finite_m_rate(SPEC06, 1.0, 0, "waterfill")


def test_brute_quadrature_plain_channel():
    d = SnrDensity.plain(SPEC06)
    ref = brute_quadrature(d, 10.0, 1_000_000)
    assert abs(ref - channel_waterfill_rate(SPEC06, 10.0)) < 1e-9


def test_brute_quadrature_rational_density():
    d = SnrDensity(kappa=0.9375, u=2.0, v=0.625, channel=SPEC06)
    from dmimo_capacity import waterfill

    ref = brute_quadrature(d, 7.0, 500_000)
    assert abs(ref - waterfill(d, 7.0).rate) < 1e-8


def test_brute_quadrature_validates_inputs():
    d = SnrDensity.plain(SPEC06)
    with pytest.raises(ValueError):
        brute_quadrature(d, 1.0, 999)
    zero = SnrDensity(kappa=0.0, u=1.0, v=0.0, channel=SPEC06)
    with pytest.raises(DegenerateDensityError):
        brute_quadrature(zero, 1.0, 2000)


def test_compare_report():
    rep = compare("nc-closed-form", 3.0, 3.0 + 2e-5, 4096)
    assert rep.target == "nc-closed-form"
    assert rep.abs_gap == pytest.approx(2e-5, rel=1e-9)
    assert rep.m_or_points == 4096
