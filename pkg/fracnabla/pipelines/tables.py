from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Literal, Optional, Sequence, Union

import numpy as np

from fracnabla.config import SolverSettings
from fracnabla.fractional import exact_frac_deriv_power_log, frac_nabla, power_log_function
from fracnabla.grid import GridFn, UniformGrid, holder_error, sample
from fracnabla.pipelines.fode import example2_problem, solve_gl_explicit, solve_gl_implicit
from fracnabla.types import DomainError, FracOrder, HolderExponent, Order

logger = logging.getLogger(__name__)

TableKind = Literal["example1", "example2"]
Scheme = Literal["explicit", "implicit"]

TABLE1_DEFAULTS = {"mu": 1.5, "alpha": 0.3, "beta": 0.1, "h_exponents": tuple(range(6, 13))}
TABLE2_DEFAULTS = {"alpha": 0.5, "betas": (0.1, 0.01), "h_exponents": tuple(range(7, 14))}


@dataclass(frozen=True)
class ConvergenceRow:
    h: float
    error: float
    beta: float
    exponent: Optional[int] = None

    def csv_row(self) -> tuple[str, float, float]:
        step = f"2^-{self.exponent}" if self.exponent is not None else format(self.h, ".17g")
        return step, self.beta, self.error


CSV_HEADER = ("h", "beta", "error")


def _betas(beta: Union[float, Sequence[float]]) -> list[float]:
    values = [beta] if isinstance(beta, (int, float, HolderExponent)) else list(beta)
    if not values:
        raise DomainError("at least one beta is required")
    return [HolderExponent.coerce(b).beta for b in values]


def _example1_pair(mu: float, alpha: float, grid: UniformGrid, identical: bool) -> tuple[GridFn, GridFn]:
    exact = sample(lambda x: exact_frac_deriv_power_log(mu, alpha, x), grid)
    if identical:
        return exact, exact
    return frac_nabla(sample(power_log_function(mu), grid), alpha), exact


def _example2_pair(
    alpha: float, grid: UniformGrid, scheme: str, identical: bool, settings: SolverSettings
) -> tuple[GridFn, GridFn]:
    problem = example2_problem(alpha, negative_slack=settings.negative_slack)
    exact = GridFn(grid, np.array([problem.exact(float(t)) for t in grid.nodes]))
    if identical:
        return exact, exact
    if scheme == "explicit":
        approx = solve_gl_explicit(problem, grid, settings=settings)
    elif scheme == "implicit":
        approx = solve_gl_implicit(problem, grid, settings=settings)
    else:
        raise DomainError(f"unknown scheme: {scheme!r}")
    return approx, exact


def convergence_table(
    kind: TableKind,
    *,
    alpha: Order,
    beta: Union[float, Sequence[float]],
    h_exponents: Sequence[int],
    mu: Optional[float] = None,
    scheme: Optional[Scheme] = None,
    compare_identical: bool = False,
    settings: Optional[SolverSettings] = None,
) -> list[ConvergenceRow]:
    """Hoelderian errors at h = 2^-m for each beta (outer) and m (inner).

    ``example1`` compares nabla_h^alpha (t^mu ln t) with its exact fractional
    derivative; ``example2`` compares a GL solution of the benchmark FODE with the
    exact solution. ``compare_identical`` compares the exact side with itself.
    """
    a = FracOrder.coerce(alpha).alpha
    betas = _betas(beta)
    exponents = [int(m) for m in h_exponents]
    if not exponents:
        raise DomainError("at least one grid exponent is required")
    settings = settings or SolverSettings()
    scheme = scheme or settings.scheme
    if kind == "example1":
        mu = TABLE1_DEFAULTS["mu"] if mu is None else float(mu)

    pairs: dict[int, tuple[GridFn, GridFn]] = {}
    for m in exponents:
        grid = UniformGrid.from_exponent(m)
        started = time.perf_counter()
        if kind == "example1":
            pairs[m] = _example1_pair(mu, a, grid, compare_identical)
        elif kind == "example2":
            pairs[m] = _example2_pair(a, grid, scheme, compare_identical, settings)
        else:
            raise DomainError(f"unknown table kind: {kind!r}")
        logger.debug(f"{kind} h=2^-{m}: discretisation took {time.perf_counter() - started:.3f}s")

    rows: list[ConvergenceRow] = []
    for b in betas:
        for m in exponents:
            approx, exact = pairs[m]
            error = holder_error(approx, exact, b)
            rows.append(ConvergenceRow(h=approx.h, error=error, beta=b, exponent=m))
            logger.info(f"{kind} beta={b} h=2^-{m}: error {error:.7f}")
    return rows
