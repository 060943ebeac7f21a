"""
Scalar functions and root finding behind the analytic side conditions of the extremal
results: the lower endpoint alpha_1 of the path-merge inequality, the auxiliary functions
eta, h, f and g, Jensen gaps, and grid checks of the monotonicity claims.

Functions of x accept floats or numpy arrays.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence, Tuple

import numpy as np

from config import (
    ALPHA1_BRACKET,
    MAX_BISECTION_ITERATIONS,
    MONOTONE_STEP,
    ROOT_TOLERANCE,
)
from type.errors import ClaimRangeError, PreconditionError, RootFindingError
from type.report import RootResult

logger = logging.getLogger(__name__)


def alpha1_ratio_residual(alpha):
    """(3^a - 4^a) / (4^a - 5^a) - 2; its unique negative root is alpha_1."""
    return (np.power(3.0, alpha) - np.power(4.0, alpha)) / (np.power(4.0, alpha) - np.power(5.0, alpha)) - 2.0


def alpha1(
    tolerance: float = ROOT_TOLERANCE,
    bracket: Tuple[float, float] = ALPHA1_BRACKET,
    max_iterations: int = MAX_BISECTION_ITERATIONS,
) -> RootResult:
    """Bisection for alpha_1. Stops once the bracket is narrower than `tolerance`
    and the residual at its midpoint is within `tolerance`."""
    if not tolerance > 0 or not math.isfinite(tolerance):
        raise PreconditionError(f"tolerance must be a positive real, got {tolerance!r}")

    lo, hi = float(bracket[0]), float(bracket[1])
    f_lo, f_hi = float(alpha1_ratio_residual(lo)), float(alpha1_ratio_residual(hi))
    if f_lo * f_hi >= 0:
        raise RootFindingError(
            f"no sign change on [{lo}, {hi}]: r(lo)={f_lo}, r(hi)={f_hi}", (lo, hi)
        )

    iterations = 0
    while iterations < max_iterations:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            logger.debug(f"bracket reached float resolution after {iterations} iterations")
            break
        f_mid = float(alpha1_ratio_residual(mid))
        iterations += 1
        if f_mid * f_lo > 0:
            lo, f_lo = mid, f_mid
        else:
            hi = mid
        if hi - lo <= tolerance and abs(float(alpha1_ratio_residual(0.5 * (lo + hi)))) <= tolerance:
            break

    value = 0.5 * (lo + hi)
    residual = float(alpha1_ratio_residual(value))
    logger.debug(f"alpha_1 = {value!r} after {iterations} iterations, residual {residual:.3e}")
    return RootResult(value=value, bracket=(lo, hi), residual=residual, iterations=iterations)


def count_sign_changes(func: Callable, lo: float, hi: float, points: int = 1000) -> int:
    xs = np.linspace(lo, hi, points)
    signs = np.sign(func(xs))
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def eta(x):
    """2*4^x - 3^x - 6^x: zero at -1 and 0, positive in between."""
    return 2.0 * np.power(4.0, x) - np.power(3.0, x) - np.power(6.0, x)


def h_convex(x):
    return np.asarray(x, dtype=float) / 2.0 + np.power(0.75, x)


def f_theorem3(x, n: int, alpha: float):
    """(x-2)3^a + x(x+2)^a + (n-2x+2)4^a, the low-regime unicyclic maximum as a function of x."""
    if np.any(np.asarray(x) < 2):
        raise PreconditionError(f"f is only defined for x >= 2, got {x!r}")
    x = np.asarray(x, dtype=float)
    return (x - 2) * 3.0 ** alpha + x * np.power(x + 2, alpha) + (n - 2 * x + 2) * 4.0 ** alpha


def g_theorem3(x, alpha: float):
    """(x+2)^a + a*x*(x+2)^(a-1), the variable part of f'."""
    x = np.asarray(x, dtype=float)
    return np.power(x + 2, alpha) + alpha * x * np.power(x + 2, alpha - 1)


def theorem3_slack(n: int, delta: int, alpha: float) -> float:
    """
    (n-2d+1)(3^a - 4^a + (d+2)^a - (d+1)^a): the amount by which the high-regime
    unicyclic maximum falls short of f(d). Negative whenever (n+2)/2 <= d <= n-1.
    """
    return (n - 2 * delta + 1) * (3 ** alpha - 4 ** alpha + (delta + 2) ** alpha - (delta + 1) ** alpha)


def jensen_gap(a: float, b: float, alpha: float) -> float:
    """a^alpha + b^alpha - 2((a+b)/2)^alpha, positive for a != b since t^alpha is convex."""
    if a <= 0 or b <= 0:
        raise PreconditionError(f"jensen_gap needs positive arguments, got a={a}, b={b}")
    if not alpha < 0:
        raise ClaimRangeError(f"jensen_gap is claimed for alpha < 0, got {alpha}")
    if a == b:
        return 0.0
    return a ** alpha + b ** alpha - 2 * ((a + b) / 2) ** alpha


# --- Monotonicity claims ---

@dataclass(frozen=True)
class _Claim:
    description: str
    domain_start: float
    increasing: bool
    alpha_low: float      # inclusive
    alpha_high: float     # exclusive
    build: Callable       # (alpha, delta, n) -> function of x


class MonotoneClaim(Enum):
    TREE_INCREMENT = _Claim(
        "(x+2)^a - (x+1)^a increasing for x >= 3", 3.0, True, -math.inf, 0.0,
        lambda a, d, n: lambda x: np.power(x + 2, a) - np.power(x + 1, a),
    )
    UNICYCLIC_INCREMENT = _Claim(
        "(x+2)^a - (x+1)^a strictly increasing for x >= 0", 0.0, True, -math.inf, 0.0,
        lambda a, d, n: lambda x: np.power(x + 2, a) - np.power(x + 1, a),
    )
    REROUTE_STEP = _Claim(
        "(x+2)^a - (x+3)^a decreasing for x >= 0", 0.0, False, -math.inf, 0.0,
        lambda a, d, n: lambda x: np.power(x + 2, a) - np.power(x + 3, a),
    )
    RELOCATION_STEP = _Claim(
        "(x+3)^a - (x+delta)^a strictly decreasing for x >= 0, delta >= 4", 0.0, False, -math.inf, 0.0,
        lambda a, d, n: lambda x: np.power(x + 3, a) - np.power(x + d, a),
    )
    POWER_STEP = _Claim(
        "x^a - (x+1)^a strictly decreasing for x > 0", 0.5, False, -math.inf, 0.0,
        lambda a, d, n: lambda x: np.power(x, a) - np.power(x + 1, a),
    )
    G_DECREASING = _Claim(
        "g(x) = (x+2)^a + a x (x+2)^(a-1) strictly decreasing for x >= 2", 2.0, False, -1.0, 0.0,
        lambda a, d, n: lambda x: g_theorem3(x, a),
    )
    F_DECREASING = _Claim(
        "f(x) strictly decreasing for x >= 2", 2.0, False, -1.0, 0.0,
        lambda a, d, n: lambda x: f_theorem3(x, n, a),
    )

    @property
    def claim(self) -> _Claim:
        return self.value

    def covers(self, alpha: float) -> bool:
        return self.claim.alpha_low <= alpha < self.claim.alpha_high


def default_grid(claim: MonotoneClaim, span: float = 18.0, step: float = MONOTONE_STEP) -> np.ndarray:
    start = claim.claim.domain_start
    return start + step * np.arange(int(round(span / step)) + 1)


def check_claim(
    claim: MonotoneClaim,
    alpha: float,
    grid: Optional[Sequence[float]] = None,
    delta: int = 4,
    n: int = 10,
) -> bool:
    """True iff the claimed strict monotonicity holds between every adjacent grid pair."""
    spec = claim.claim
    if not claim.covers(alpha):
        raise ClaimRangeError(
            f"'{spec.description}' is claimed for {spec.alpha_low} <= alpha < {spec.alpha_high}, got {alpha}"
        )
    if claim is MonotoneClaim.RELOCATION_STEP and delta < 4:
        raise ClaimRangeError(f"relocation claim needs delta >= 4, got {delta}")
    xs = default_grid(claim) if grid is None else np.asarray(grid, dtype=float)
    if xs.size < 100:
        raise PreconditionError(f"monotonicity grids need at least 100 points, got {xs.size}")
    if xs.min() < spec.domain_start or np.any(np.diff(xs) <= 0):
        raise PreconditionError(
            f"grid must be increasing and start at or after {spec.domain_start} for '{spec.description}'"
        )
    values = spec.build(alpha, delta, n)(xs)
    steps = np.diff(values)
    ok = bool(np.all(steps > 0)) if spec.increasing else bool(np.all(steps < 0))
    if not ok:
        logger.warning(f"monotonicity check failed: '{spec.description}' at alpha={alpha}")
    return ok


def monotone_checks(
    alpha: float,
    grid: Optional[Sequence[float]] = None,
    claims: Optional[Iterable[MonotoneClaim]] = None,
    delta: int = 4,
    n: int = 10,
) -> bool:
    """
    Checks every requested claim (default: every claim whose alpha range contains alpha).
    A custom grid applies to all requested claims.
    """
    if claims is None:
        selected = [c for c in MonotoneClaim if c.covers(alpha)]
        if not selected:
            raise ClaimRangeError(f"no monotonicity claim covers alpha={alpha}")
    else:
        selected = list(claims)
    return all(check_claim(c, alpha, grid, delta=delta, n=n) for c in selected)
