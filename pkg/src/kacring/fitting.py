"""Curve fits for recurrence scaling and entropy occupancy shapes.

Three families cover everything the toolkit measures: straight lines for
mean recurrence versus ring size, geometric growth for the quantum case,
and a symmetric heavy-tailed bump for the time distribution of entropy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

__all__ = [
    "FitResult",
    "cauchy_like",
    "fit_cauchy_like",
    "fit_linear",
    "fit_geometric",
]


@dataclass(frozen=True)
class FitResult:
    """Fitted parameters plus bookkeeping from the optimizer.

    ``residual_sum_squares`` is in the space the fit was performed in
    (log space for the geometric family).
    """

    params: dict[str, float]
    residual_sum_squares: float
    converged: bool
    iterations: int


def cauchy_like(x, n_sites: int, a: float, b: float, c: float):
    """Symmetric bump a / (1 + |(x - n/2) / b| ** c), centered at n/2.

    The absolute value keeps fractional exponents real on both flanks.
    """
    if b == 0:
        raise ValueError("width parameter b must be nonzero")
    x = np.asarray(x, dtype=np.float64)
    # 0 ** c for c < 0 is +inf, which the division turns into the correct
    # limit value 0; keep numpy quiet about the intermediate
    with np.errstate(divide="ignore"):
        return a / (1.0 + np.abs((x - n_sites / 2.0) / b) ** c)


def _validate_points(points, minimum: int):
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("points must be an (m, 2) array of (x, y) pairs")
    if pts.shape[0] < minimum:
        raise ValueError(f"need at least {minimum} points, got {pts.shape[0]}")
    return pts[:, 0], pts[:, 1]


def fit_cauchy_like(points, n_sites: int) -> FitResult:
    """Fit the symmetric bump to (entropy level, mean fraction) data.

    Nelder-Mead from a small multistart grid: amplitude seeded at the
    data maximum, widths at n/8, n/4, n/2 and exponents at 2, 4, 6. The
    best simplex wins; the total function-evaluation budget across all
    starts is 10**5. The reported width is normalized positive since the
    model only sees |b|.
    """
    x, y = _validate_points(points, 4)
    if np.any(y < 0):
        raise ValueError("fractions must be nonnegative")

    def objective(theta):
        a, b, c = theta
        if b == 0:
            return np.inf
        resid = y - cauchy_like(x, n_sites, a, b, c)
        return float(resid @ resid)

    a0 = float(y.max()) if y.max() > 0 else 1.0
    starts = [
        (a0, b0, c0)
        for b0 in (n_sites / 8.0, n_sites / 4.0, n_sites / 2.0)
        for c0 in (2.0, 4.0, 6.0)
    ]
    budget = 10**5 // len(starts)

    best = None
    total_iterations = 0
    converged = False
    for start in starts:
        out = minimize(
            objective,
            np.asarray(start),
            method="Nelder-Mead",
            options={"fatol": 1e-10, "xatol": 1e-10, "maxfev": budget},
        )
        total_iterations += out.nit
        if best is None or out.fun < best.fun:
            best = out
            converged = bool(out.success)

    a, b, c = best.x
    return FitResult(
        params={"a": float(a), "b": float(abs(b)), "c": float(c)},
        residual_sum_squares=float(best.fun),
        converged=converged,
        iterations=total_iterations,
    )


def fit_linear(points) -> FitResult:
    """Least-squares line y = slope * x + intercept, closed form.

    Uses the centered normal equations, so data lying exactly on a line
    with representable slope (e.g. doubling data) recovers it without
    rounding drift.
    """
    x, y = _validate_points(points, 2)
    if np.unique(x).size < 2:
        raise ValueError("need at least 2 distinct x values")
    xm = x.mean()
    ym = y.mean()
    dx = x - xm
    slope = float(np.sum(dx * (y - ym)) / np.sum(dx * dx))
    intercept = float(ym - slope * xm)
    resid = y - (slope * x + intercept)
    return FitResult(
        params={"slope": slope, "intercept": intercept},
        residual_sum_squares=float(resid @ resid),
        converged=True,
        iterations=0,
    )


def fit_geometric(points) -> FitResult:
    """Fit y = prefactor * base ** x by straight-line regression on log y.

    Exact geometric data (like mean recurrence 2**n versus n) recovers
    its base to floating-point accuracy. All y must be positive.
    """
    x, y = _validate_points(points, 2)
    if np.any(y <= 0):
        raise ValueError("geometric fit requires positive y values")
    log_fit = fit_linear(np.column_stack([x, np.log(y)]))
    return FitResult(
        params={
            "base": float(np.exp(log_fit.params["slope"])),
            "prefactor": float(np.exp(log_fit.params["intercept"])),
        },
        residual_sum_squares=log_fit.residual_sum_squares,
        converged=True,
        iterations=0,
    )
