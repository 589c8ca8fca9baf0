"""Built-in audit suites: each checks an operator bound over a fixed sample set."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from numpy.typing import NDArray
from scipy import special

from fracnabla.config import AuditSettings, QuadratureSettings
from fracnabla.fractional import balakrishnan_weight_oracle
from fracnabla.grid import GridFunction, UniformGrid, sample
from fracnabla.operators import NablaOperator, interpolation_remainder, sectorial_audit
from fracnabla.specfn import phi_alpha_bound, phi_alpha_residual
from fracnabla.types import PreconditionError

logger = logging.getLogger(__name__)

SUITES = (
    "sectorial-nabla",
    "sectorial-extended",
    "balakrishnan",
    "gamma-lemma",
    "resolvent-identity",
    "interpolation-remainder",
)

BALAKRISHNAN_ALPHAS = (0.2, 0.5, 0.8)
BALAKRISHNAN_EXPONENTS = (4, 8)
BALAKRISHNAN_MAX_J = 50
BALAKRISHNAN_RTOL = 1e-6
GAMMA_LEMMA_ALPHAS = tuple(round(0.1 * i, 1) for i in range(1, 10))
GAMMA_LEMMA_MAX_M = 10_000
RESOLVENT_RTOL = 1e-10
REMAINDER_SLACK = 0.05
REMAINDER_EXPONENTS = tuple(range(4, 9))


@dataclass
class AuditResult:
    """Per-case rows of one suite; the last column of each row is its pass flag."""

    name: str
    header: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    @property
    def failures(self) -> int:
        return sum(1 for row in self.rows if not row[-1])

    @property
    def passed(self) -> bool:
        return self.failures == 0


def random_holder_function(rng: np.random.Generator, beta: float) -> GridFunction:
    """Random element of H^beta[0, 1] with f(0) = 0.

    A short sum of powers t^p (p >= beta) plus an oscillating t^beta sin(k t) term.
    """
    count = int(rng.integers(1, 4))
    powers = rng.uniform(beta, 3.0, size=count)
    coefficients = rng.normal(size=count)
    amplitude = float(rng.normal())
    frequency = float(rng.uniform(1.0, 20.0))

    def f(t: NDArray) -> NDArray:
        t = np.asarray(t, dtype=float)
        polynomial = sum(c * t**p for c, p in zip(coefficients, powers))
        return polynomial + amplitude * t**beta * np.sin(frequency * t)

    return f


def _ray_samples(settings: AuditSettings) -> list[tuple[float, list[complex]]]:
    lo, hi = settings.magnitude_range
    rays = []
    for angle, count in zip(settings.ray_angles, settings.samples_per_ray):
        radii = np.logspace(math.log10(lo), math.log10(hi), count)
        rays.append((angle, [complex(r * math.cos(angle), r * math.sin(angle)) for r in radii]))
    return rays


def _sectorial(which: str, settings: AuditSettings) -> AuditResult:
    kind = "nabla" if which == "sectorial-nabla" else "extended"
    result = AuditResult(which, ("re_lambda", "im_lambda", "ratio", "bound", "pass"))
    rng = np.random.default_rng(settings.seed)
    grid = UniformGrid.from_exponent(settings.h_exponent)
    rays = _ray_samples(settings)
    for _ in range(settings.n_functions):
        f = random_holder_function(rng, settings.beta)
        g = sample(f, grid)
        for angle, lambdas in rays:
            report = sectorial_audit(
                kind,
                g,
                settings.beta,
                angle,
                lambdas,
                f=f if kind == "extended" else None,
                refine=settings.refine,
                rel_slack=settings.rel_slack,
            )
            result.rows.extend(report.rows())
    return result


def _balakrishnan(quadrature: QuadratureSettings) -> AuditResult:
    result = AuditResult(
        "balakrishnan", ("j", "alpha", "h", "quadrature", "closed_form", "rel_error", "pass")
    )
    for alpha in BALAKRISHNAN_ALPHAS:
        for m in BALAKRISHNAN_EXPONENTS:
            h = 2.0**-m
            for j in range(BALAKRISHNAN_MAX_J + 1):
                numeric = balakrishnan_weight_oracle(j, alpha, h, quadrature)
                closed = h ** (-alpha) * math.exp(
                    special.gammaln(j + 1.0 - alpha) + special.gammaln(alpha) - special.gammaln(j + 1.0)
                )
                rel = abs(numeric - closed) / closed
                result.rows.append((j, alpha, h, numeric, closed, rel, rel <= BALAKRISHNAN_RTOL))
    return result


def _gamma_lemma() -> AuditResult:
    result = AuditResult("gamma-lemma", ("m", "alpha", "phi", "bound", "pass"))
    m = np.arange(1, GAMMA_LEMMA_MAX_M + 1)
    for alpha in GAMMA_LEMMA_ALPHAS:
        phi = phi_alpha_residual(m, alpha)
        bound = phi_alpha_bound(m, alpha)
        ok = np.abs(phi) <= bound
        result.rows.extend(
            (int(mi), alpha, float(p), float(b), bool(o)) for mi, p, b, o in zip(m, phi, bound, ok)
        )
    return result


def _resolvent_identity(settings: AuditSettings) -> AuditResult:
    result = AuditResult(
        "resolvent-identity", ("function", "re_lambda", "im_lambda", "rel_residual", "pass")
    )
    rng = np.random.default_rng(settings.seed)
    operator = NablaOperator()
    grid = UniformGrid.from_exponent(settings.h_exponent)
    for index in range(settings.n_functions):
        g = sample(random_holder_function(rng, settings.beta), grid)
        scale = float(np.max(np.abs(g.values)))
        for lam in settings.resolvent_lambdas:
            r = operator.resolvent(lam, g)
            defect = lam * r.values - operator.apply(r).values - g.values
            rel = float(np.max(np.abs(defect))) / scale if scale > 0.0 else 0.0
            result.rows.append((index, lam.real, lam.imag, rel, rel <= RESOLVENT_RTOL))
    return result


def _smooth_surrogate(t: NDArray) -> NDArray:
    # degree-5 Taylor polynomial of sin
    return t - t**3 / 6.0 + t**5 / 120.0


REMAINDER_FUNCTIONS: dict[str, Callable[[NDArray], NDArray]] = {
    "x^2": lambda t: np.asarray(t, dtype=float) ** 2,
    "x^2.5": lambda t: np.asarray(t, dtype=float) ** 2.5,
    "sin5": _smooth_surrogate,
}


def _interpolation_remainder(settings: AuditSettings) -> AuditResult:
    result = AuditResult(
        "interpolation-remainder", ("function", "h", "remainder", "bound", "pass")
    )
    for name, f in REMAINDER_FUNCTIONS.items():
        for m in REMAINDER_EXPONENTS:
            grid = UniformGrid.from_exponent(m)
            remainder, bound = interpolation_remainder(f, grid, settings.beta, settings.refine)
            result.rows.append(
                (name, grid.h, remainder, bound, remainder <= bound * (1.0 + REMAINDER_SLACK))
            )
    return result


def run_audit(
    which: str,
    settings: Optional[AuditSettings] = None,
    quadrature: Optional[QuadratureSettings] = None,
) -> AuditResult:
    settings = settings or AuditSettings()
    logger.info(f"Running audit suite {which} (seed={settings.seed})")
    if which in ("sectorial-nabla", "sectorial-extended"):
        result = _sectorial(which, settings)
    elif which == "balakrishnan":
        result = _balakrishnan(quadrature or QuadratureSettings())
    elif which == "gamma-lemma":
        result = _gamma_lemma()
    elif which == "resolvent-identity":
        result = _resolvent_identity(settings)
    elif which == "interpolation-remainder":
        result = _interpolation_remainder(settings)
    else:
        raise PreconditionError(f"unknown audit suite: {which!r}; expected one of {SUITES}")
    level = logging.INFO if result.passed else logging.WARNING
    logger.log(level, "Audit %s: %d cases, %d failures", which, len(result.rows), result.failures)
    return result
