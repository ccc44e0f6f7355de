import math

import pytest

from dmimo_capacity import (
    BracketError,
    FixedPointConvergenceError,
    solve_fixed_point,
)


def test_piecewise_linear_exact_root():
    # min(r, 3) meets 4 - r at r = 2
    res = solve_fixed_point(lambda r: min(r, 3.0), 4.0)
    assert res.r_star == pytest.approx(2.0, abs=1e-9)
    assert res.residual <= 1e-10


def test_identity_lhs():
    # r = 8 - r  ->  r* = 4
    res = solve_fixed_point(lambda r: r, 8.0)
    assert res.r_star == pytest.approx(4.0, abs=1e-9)


def test_saturating_lhs_consistency():
    lhs = lambda r: 5.0 * (1.0 - 2.0 ** (-r))
    res = solve_fixed_point(lhs, 6.0)
    assert abs(lhs(res.r_star) - (6.0 - res.r_star)) <= 1e-10
    assert 0.0 < res.r_star < 6.0


def test_zero_budget():
    res = solve_fixed_point(lambda r: 3.0, 0.0)
    assert res.r_star == 0.0
    assert res.iterations == 0
    assert res.residual == 3.0


def test_root_at_lower_endpoint():
    # lhs(0) already equals cprime: root is r = 0
    res = solve_fixed_point(lambda r: 2.0 - r, 2.0)
    assert res.r_star == 0.0
    assert res.residual == 0.0


def test_bracket_failure_constant_above():
    # lhs(0) - cprime > 0 everywhere: no monotone crossing from below
    with pytest.raises(BracketError):
        solve_fixed_point(lambda r: 5.0, 3.0)


def test_nonconvergence_reported():
    with pytest.raises(FixedPointConvergenceError):
        solve_fixed_point(
            lambda r: 5.0 * (1.0 - 2.0 ** (-r)), 6.0, residual_tol=1e-14, max_iter=3
        )


def test_cprime_must_be_finite_nonnegative():
    with pytest.raises(ValueError):
        solve_fixed_point(lambda r: r, math.inf)
    with pytest.raises(ValueError):
        solve_fixed_point(lambda r: r, -1.0)


def test_residual_scales_with_tolerance():
    lhs = lambda r: 3.0 * (1.0 - 2.0 ** (-0.7 * r))
    loose = solve_fixed_point(lhs, 4.0, residual_tol=1e-4)
    tight = solve_fixed_point(lhs, 4.0, residual_tol=1e-12)
    assert loose.residual <= 1e-4
    assert tight.residual <= 1e-12
    assert tight.iterations >= loose.iterations


def test_root_stable_under_budget_perturbation():
    # g(r) = lhs(r) - (cprime - r) has slope >= 1, so a +1e-6 nudge of the
    # budget moves the root by at most 1e-6 (plus solver tolerance)
    from dmimo_capacity import ChannelSpec, channel_waterfill_rate

    spec = ChannelSpec.from_alpha_squared(0.6)
    for p in (1.0, 100.0):
        for cprime in (2.0, 5.0):
            lhs = lambda r: channel_waterfill_rate(spec, p * (1.0 - 2.0 ** (-r)))
            base = solve_fixed_point(lhs, cprime).r_star
            moved = solve_fixed_point(lhs, cprime + 1e-6).r_star
            assert abs(moved - base) <= 1e-5
