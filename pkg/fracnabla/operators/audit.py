from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence

from fracnabla.grid import (
    GridFn,
    GridFunction,
    UniformGrid,
    holder_error,
    holder_seminorm,
    modulus,
    sample,
)
from fracnabla.operators.base import GridOperator
from fracnabla.operators.nabla import (
    ExtendedNablaOperator,
    NablaOperator,
    interpolate,
)
from fracnabla.types import Exponent, HolderExponent, PreconditionError

logger = logging.getLogger(__name__)

OperatorKind = Literal["nabla", "extended"]

# relative slack on the sectorial bound for rounding in the measured ratios
AUDIT_REL_SLACK = 1e-9


@dataclass
class SectorialAuditReport:
    omega_prime: float
    bound: float
    samples: list[tuple[complex, float]] = field(default_factory=list)
    rel_slack: float = AUDIT_REL_SLACK

    @property
    def max_ratio(self) -> float:
        return max((ratio for _, ratio in self.samples), default=0.0)

    @property
    def passed(self) -> bool:
        return self.max_ratio <= self.bound * (1.0 + self.rel_slack)

    def rows(self) -> list[tuple[float, float, float, float, bool]]:
        """``re_lambda, im_lambda, ratio, bound, pass`` per sample."""
        limit = self.bound * (1.0 + self.rel_slack)
        return [
            (lam.real, lam.imag, ratio, self.bound, ratio <= limit) for lam, ratio in self.samples
        ]


def make_operator(which: OperatorKind, refine: int = 4) -> GridOperator:
    if which == "nabla":
        return NablaOperator()
    if which == "extended":
        return ExtendedNablaOperator(refine=refine)
    raise PreconditionError(f"unknown operator kind: {which!r}")


def _check_sector(omega_prime: float, lambda_samples: Sequence[complex]) -> None:
    if not math.pi / 2 < omega_prime <= math.pi:
        raise PreconditionError(f"omega_prime must lie in (pi/2, pi], got {omega_prime!r}")
    for lam in lambda_samples:
        lam = complex(lam)
        if lam == 0 or abs(cmath.phase(lam)) < omega_prime - 1e-12:
            raise PreconditionError(
                f"lambda={lam} lies inside the sector |arg| < {omega_prime:.6f}"
            )


def sectorial_audit(
    which: OperatorKind,
    g: GridFn,
    beta: Exponent,
    omega_prime: float,
    lambda_samples: Sequence[complex],
    *,
    f: Optional[GridFunction] = None,
    refine: int = 4,
    rel_slack: float = AUDIT_REL_SLACK,
) -> SectorialAuditReport:
    """Measure ||lam R(lam, B) g||_beta / ||g||_beta against the sectorial bound.

    ``f`` is an optional continuous representative of ``g``; the extended operator
    then measures its resolvent on a grid refined by ``refine``.
    """
    b = HolderExponent.coerce(beta).beta
    _check_sector(omega_prime, lambda_samples)
    operator = make_operator(which, refine=refine)
    report = SectorialAuditReport(
        omega_prime=omega_prime,
        bound=operator.sectorial_bound(omega_prime),
        rel_slack=rel_slack,
    )
    for lam in lambda_samples:
        ratio = operator.scaled_resolvent_ratio(complex(lam), g, b, f)
        report.samples.append((complex(lam), ratio))
    logger.debug(
        "Sectorial audit %s: %d samples, max ratio %.6g, bound %.6g",
        operator.name,
        len(report.samples),
        report.max_ratio,
        report.bound,
    )
    if not report.passed:
        logger.warning(
            "Sectorial bound exceeded for %s: %.12g > %.12g",
            operator.name,
            report.max_ratio,
            report.bound,
        )
    return report


def interpolation_remainder(
    f: GridFunction, grid: UniformGrid, beta: Exponent, refine: int = 4
) -> tuple[float, float]:
    """Return (||f - I_h f||_beta, 4 omega_beta(f, h)), both on the grid refined by ``refine``."""
    fine = grid.refine(refine)
    f_fine = sample(f, fine)
    polygon = interpolate(sample(f, grid), fine.nodes)
    remainder = holder_seminorm(f_fine - GridFn(fine, polygon), beta)
    bound = 4.0 * modulus(f_fine, beta, grid.h)
    return remainder, bound


def extended_nabla_convergence(
    f: GridFunction,
    fprime: GridFunction,
    grid: UniformGrid,
    beta: Exponent,
    refine: int = 4,
) -> tuple[float, float]:
    """Return (||f' - A_h f||_beta at nodes, 6 omega_beta(f', h) from a refined sampling)."""
    operator = ExtendedNablaOperator(refine)
    error = holder_error(sample(fprime, grid), operator.apply(sample(f, grid)), beta)
    bound = 6.0 * modulus(sample(fprime, grid.refine(refine)), beta, grid.h)
    return error, bound


def nonconvergence_gap(h: float, beta: Exponent) -> float:
    """|(A_h - A_{h/2}) f (h/2)| for f(x) = x^beta."""
    b = HolderExponent.coerce(beta).beta

    def power(x):
        return x**b

    operator = ExtendedNablaOperator()
    coarse, fine = UniformGrid(h), UniformGrid(h / 2)
    value_coarse = interpolate(operator.apply(sample(power, coarse)), h / 2)
    value_fine = interpolate(operator.apply(sample(power, fine)), h / 2)
    return abs(value_coarse - value_fine)


def nonconvergence_lower_bound(beta: Exponent) -> float:
    b = HolderExponent.coerce(beta).beta
    return 0.5 ** (b - 1.0) - 0.5
