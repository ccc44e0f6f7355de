"""Scalar fixed-point solver for rate-splitting recursions.

Distributed-compression schemes split the receive-link capacity C' between
quantization detail r and message payload C' - r, with the payload pinned to
the rate the chosen spectrum actually supports:

    lhs(r) = C' - r.

``lhs`` is nondecreasing with lhs(0) = 0, and the right side falls with
slope -1, so g(r) = lhs(r) - (C' - r) is strictly increasing with a sign
change on [0, C']: the root is unique and plain bisection is safe.  The
solver stops on the residual |g(r)|, not on the interval width, because the
residual is what the reported rate inherits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "FixedPointResult",
    "BracketError",
    "FixedPointConvergenceError",
    "solve_fixed_point",
]

_RESIDUAL_TOL = 1e-10
_MAX_ITER = 200


class BracketError(ValueError):
    """lhs does not change sign against C' - r on [0, C']; inputs violate the contract."""


class FixedPointConvergenceError(RuntimeError):
    """Bisection hit the iteration cap before meeting the residual tolerance."""


@dataclass(frozen=True)
class FixedPointResult:
    """Root r* in [0, C'], the achieved |lhs(r*) - (C' - r*)|, and iterations used."""

    r_star: float
    residual: float
    iterations: int


def solve_fixed_point(
    lhs: Callable[[float], float],
    cprime: float,
    *,
    residual_tol: float = _RESIDUAL_TOL,
    max_iter: int = _MAX_ITER,
) -> FixedPointResult:
    """Solve lhs(r) = cprime - r for r in [0, cprime] by bisection.

    Args:
        lhs: nondecreasing, continuous, lhs(0) = 0.
        cprime: finite link capacity >= 0 (infinite budgets are specialized
            by callers before reaching here).

    Raises:
        BracketError: endpoint signs contradict the contract.
        FixedPointConvergenceError: residual tolerance unmet after max_iter.
    """
    if not (cprime >= 0.0 and math.isfinite(cprime)):
        raise ValueError(f"cprime must be finite and >= 0, got {cprime!r}")
    if cprime == 0.0:
        return FixedPointResult(r_star=0.0, residual=abs(lhs(0.0)), iterations=0)

    g_lo = lhs(0.0) - cprime
    if abs(g_lo) <= residual_tol:
        return FixedPointResult(r_star=0.0, residual=abs(g_lo), iterations=0)
    g_hi = lhs(cprime)  # g(cprime) = lhs(cprime) - 0
    if g_lo > 0.0 or g_hi < 0.0:
        raise BracketError(
            f"no sign change on [0, {cprime}]: g(0) = {g_lo:.6g}, g(cprime) = {g_hi:.6g}"
        )
    if abs(g_hi) <= residual_tol:
        return FixedPointResult(r_star=cprime, residual=abs(g_hi), iterations=0)

    lo, hi = 0.0, cprime
    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        g_mid = lhs(mid) - (cprime - mid)
        if abs(g_mid) <= residual_tol:
            return FixedPointResult(r_star=mid, residual=abs(g_mid), iterations=iteration)
        if g_mid < 0.0:
            lo = mid
        else:
            hi = mid
    raise FixedPointConvergenceError(
        f"residual tolerance {residual_tol:g} not reached in {max_iter} iterations"
    )
