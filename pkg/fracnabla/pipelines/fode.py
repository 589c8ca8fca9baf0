"""Gruenwald-Letnikov solvers for D^alpha y = F(t, y), y(0) = 0, on [0, 1]."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray
from scipy import optimize

from fracnabla.config import SolverSettings
from fracnabla.grid import GridFn, UniformGrid
from fracnabla.specfn import gl_weights, ln_gamma
from fracnabla.types import (
    DomainError,
    FracOrder,
    Order,
    RhsDomainError,
    StepFailureError,
)

logger = logging.getLogger(__name__)

RightHandSide = Callable[[float, float], float]
ScalarFunction = Callable[[float], float]

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class FodeProblem:
    """D^alpha y = rhs(t, y) on [0, 1] with y(0) = y0 = 0.

    ``y_min`` is the lower end of the set where ``rhs`` is defined in y; iterates are
    projected onto it before the right-hand side is evaluated.
    """

    alpha: FracOrder
    rhs: RightHandSide
    y0: float = 0.0
    exact: Optional[ScalarFunction] = None
    exact_derivative: Optional[ScalarFunction] = None
    y_min: Optional[float] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", FracOrder.coerce(self.alpha))
        if self.y0 != 0.0:
            raise DomainError(f"only y(0) = 0 is supported, got y0={self.y0!r}")


def example2_problem(alpha: Order, negative_slack: float = 1e-12) -> FodeProblem:
    """Benchmark problem with exact solution y(t) = t^8 - 3 t^(4+a/2) + (9/4) t^a."""
    a = FracOrder.coerce(alpha).alpha
    c8 = math.exp(ln_gamma(9.0) - ln_gamma(9.0 - a))
    c4 = 3.0 * math.exp(ln_gamma(5.0 + a / 2.0) - ln_gamma(5.0 - a / 2.0))
    c0 = 2.25 * math.gamma(a + 1.0)

    def rhs(t: float, y: float) -> float:
        if y < 0.0:
            if y < -negative_slack:
                logger.error(f"example 2 right-hand side undefined at t={t}, y={y}")
                raise RhsDomainError(f"y^(3/2) undefined for y={y!r} at t={t!r}", t=t, y=y)
            y = 0.0
        forcing = (1.5 * t ** (a / 2.0) - t**4) ** 3
        return c8 * t ** (8.0 - a) - c4 * t ** (4.0 - a / 2.0) + c0 + forcing - y**1.5

    def exact(t: float) -> float:
        return (t**4 - 1.5 * t ** (a / 2.0)) ** 2

    def exact_derivative(t: float) -> float:
        if t <= 0.0:
            return 0.0
        return 8.0 * t**7 - 3.0 * (4.0 + a / 2.0) * t ** (3.0 + a / 2.0) + 2.25 * a * t ** (a - 1.0)

    return FodeProblem(
        alpha=FracOrder(a),
        rhs=rhs,
        exact=exact,
        exact_derivative=exact_derivative,
        y_min=0.0,
    )


def _evaluate(problem: FodeProblem, t: float, y: float) -> float:
    if problem.y_min is not None and y < problem.y_min:
        y = problem.y_min
    value = float(problem.rhs(t, y))
    if not math.isfinite(value):
        logger.error(f"right-hand side is not finite at t={t}, y={y}")
        raise RhsDomainError(f"F(t, y) is not finite at t={t!r}, y={y!r}", t=t, y=y)
    return value


def _history(w: NDArray[np.float64], y: NDArray[np.float64], k: int) -> float:
    """sum_{j=1}^{k} w_j y_{k-j}."""
    return float(np.dot(w[1 : k + 1], y[k - 1 :: -1]))


def _implicit_residual(
    problem: FodeProblem, scale: float, history: float, t: float, y: float
) -> float:
    return scale * (y + history) - _evaluate(problem, t, y)


def _roundoff_floor(scale: float, y: float, history_abs: float, f_value: float) -> float:
    return 64.0 * _EPS * (scale * (abs(y) + history_abs) + abs(f_value))


def _newton(
    residual: Callable[[float], float],
    y: float,
    accept: Callable[[float, float], bool],
    settings: SolverSettings,
) -> tuple[float, float, bool]:
    r = residual(y)
    for iteration in range(settings.max_iter):
        if accept(y, r):
            return y, r, True
        step = settings.derivative_step * max(1.0, abs(y))
        slope = (residual(y + step) - residual(y - step)) / (2.0 * step)
        if slope == 0.0 or not math.isfinite(slope):
            break
        delta = r / slope
        damping = 1.0
        # 阻尼：残差不下降时步长减半
        for _ in range(30):
            candidate = y - damping * delta
            r_candidate = residual(candidate)
            if abs(r_candidate) < abs(r):
                break
            damping *= 0.5
        else:
            break
        y, r = candidate, r_candidate
        logger.debug("newton iteration %d: y=%.17g residual=%.3e", iteration, y, r)
    return y, r, accept(y, r)


def _bracketed_root(
    residual: Callable[[float], float], center: float, settings: SolverSettings
) -> Optional[float]:
    halfwidth = settings.bracket_halfwidth
    for _ in range(settings.max_bracket_doublings):
        lo, hi = center - halfwidth, center + halfwidth
        r_lo, r_hi = residual(lo), residual(hi)
        if r_lo == 0.0:
            return lo
        if r_hi == 0.0:
            return hi
        if math.copysign(1.0, r_lo) != math.copysign(1.0, r_hi):
            return optimize.brentq(
                residual, lo, hi, xtol=1e-300, rtol=4.0 * _EPS, maxiter=500
            )
        halfwidth *= 2.0
    return None


def solve_gl_implicit(
    problem: FodeProblem,
    grid: UniformGrid,
    newton_tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    settings: Optional[SolverSettings] = None,
) -> GridFn:
    """Implicit stepping h^-a (w_0 y_k + sum_{j>=1} w_j y_{k-j}) = F(t_k, y_k).

    Each step runs damped Newton from y_{k-1}; on failure the root is bracketed around
    y_{k-1} and refined with Brent's method. A step is accepted when its residual is at
    most ``newton_tol`` (or, when that lies below what binary64 can resolve at this
    scale, at most 64 ulps of the terms involved).
    """
    settings = settings or SolverSettings()
    tol = settings.newton_tol if newton_tol is None else float(newton_tol)
    if max_iter is not None:
        settings = replace(settings, max_iter=int(max_iter))
    if not tol > 0.0:
        raise DomainError(f"newton_tol must be positive, got {tol!r}")
    a = problem.alpha.alpha
    n, h = grid.n, grid.h
    w = gl_weights(a, n).w
    scale = h ** (-a)
    t = grid.nodes
    y = np.zeros(n + 1)
    logger.info(f"Implicit GL solve: alpha={a}, h={h}, n={n}")

    for k in range(1, n + 1):
        tk = float(t[k])
        history = _history(w, y, k)
        history_abs = float(np.dot(np.abs(w[1 : k + 1]), np.abs(y[k - 1 :: -1])))

        def residual(value: float) -> float:
            return _implicit_residual(problem, scale, history, tk, value)

        def accept(value: float, r: float) -> bool:
            floor = _roundoff_floor(scale, value, history_abs, scale * (value + history) - r)
            return abs(r) <= max(tol, floor)

        yk, rk, ok = _newton(residual, float(y[k - 1]), accept, settings)
        if not ok:
            logger.warning(f"Newton stalled at k={k} (residual {rk:.3e}); bracketing")
            root = _bracketed_root(residual, float(y[k - 1]), settings)
            if root is not None:
                yk, rk = root, residual(root)
                ok = accept(yk, rk)
        if not ok:
            logger.error(f"step {k} failed at t={tk}: residual {rk:.3e}")
            raise StepFailureError(
                f"no root found at step k={k} (t={tk}), last residual {rk:.3e}", k=k, residual=rk
            )
        if problem.y_min is not None and yk < problem.y_min:
            if yk < problem.y_min - settings.negative_slack:
                logger.error(f"accepted root {yk} at t={tk} leaves the domain of F")
                raise RhsDomainError(
                    f"accepted root y={yk!r} lies outside the domain of F at t={tk!r}", t=tk, y=yk
                )
            yk = problem.y_min
        y[k] = yk
    return GridFn(grid, y)


def solve_gl_explicit(
    problem: FodeProblem,
    grid: UniformGrid,
    settings: Optional[SolverSettings] = None,
) -> GridFn:
    """Explicit stepping h^-a sum_{j=0}^{k} w_j y_{k-j} = F(t_{k-1}, y_{k-1})."""
    settings = settings or SolverSettings()
    a = problem.alpha.alpha
    n, h = grid.n, grid.h
    w = gl_weights(a, n).w
    step = h**a
    t = grid.nodes
    y = np.zeros(n + 1)
    logger.info(f"Explicit GL solve: alpha={a}, h={h}, n={n}")
    for k in range(1, n + 1):
        previous = float(y[k - 1])
        if problem.y_min is not None and previous < problem.y_min - settings.negative_slack:
            tk = float(t[k - 1])
            logger.error(f"iterate {previous} at t={tk} leaves the domain of F")
            raise RhsDomainError(
                f"iterate y={previous!r} lies outside the domain of F at t={tk!r}", t=tk, y=previous
            )
        y[k] = step * _evaluate(problem, float(t[k - 1]), previous) - _history(w, y, k)
    return GridFn(grid, y)


def fode_residuals(problem: FodeProblem, solution: GridFn) -> NDArray[np.float64]:
    """Implicit-scheme residual at every node; entry 0 is 0."""
    a = problem.alpha.alpha
    grid = solution.grid
    w = gl_weights(a, grid.n).w
    scale = grid.h ** (-a)
    y = np.asarray(solution.values, dtype=float)
    out = np.zeros(grid.n + 1)
    for k in range(1, grid.n + 1):
        out[k] = _implicit_residual(problem, scale, _history(w, y, k), float(grid.nodes[k]), y[k])
    return out
