"""Closed-form fractional derivatives and the Riemann-Liouville quadrature oracle."""

from __future__ import annotations

import logging
import math
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import integrate

from fracnabla.config import QuadratureSettings
from fracnabla.specfn import digamma, ln_gamma
from fracnabla.types import DomainError, FracOrder, Order, ToleranceError

logger = logging.getLogger(__name__)

ScalarFunction = Callable[[float], float]


def _unit_points(x: ArrayLike) -> NDArray[np.float64]:
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)) or np.any((xs < 0.0) | (xs > 1.0)):
        raise DomainError(f"evaluation points must lie in [0, 1], got {x!r}")
    return xs


def _result(values: NDArray) -> float | NDArray:
    return float(values) if values.ndim == 0 else values


def power_function(mu: float) -> Callable[[ArrayLike], NDArray]:
    def f(t: ArrayLike) -> NDArray:
        return np.asarray(t, dtype=float) ** mu

    return f


def power_log_function(mu: float) -> Callable[[ArrayLike], NDArray]:
    """t^mu ln t, extended by its limit 0 at t = 0."""

    def f(t: ArrayLike) -> NDArray:
        ts = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(ts > 0.0, ts**mu * np.log(np.where(ts > 0.0, ts, 1.0)), 0.0)

    return f


def power_log_derivative(mu: float) -> Callable[[ArrayLike], NDArray]:
    """d/dt (t^mu ln t) = mu t^(mu-1) ln t + t^(mu-1); 0 at t = 0 when mu > 1."""

    def fprime(t: ArrayLike) -> NDArray:
        ts = np.asarray(t, dtype=float)
        safe = np.where(ts > 0.0, ts, 1.0)
        value = mu * safe ** (mu - 1.0) * np.log(safe) + safe ** (mu - 1.0)
        return np.where(ts > 0.0, value, 0.0 if mu > 1.0 else np.inf)

    return fprime


def _check_mu(mu: float, alpha: float) -> None:
    if not mu > alpha:
        raise DomainError(f"mu must exceed alpha, got mu={mu!r}, alpha={alpha!r}")


def exact_frac_deriv_power(mu: float, alpha: Order, x: ArrayLike) -> float | NDArray:
    """A^alpha t^mu = Gamma(mu+1)/Gamma(mu+1-alpha) x^(mu-alpha)."""
    a = FracOrder.coerce(alpha).alpha
    _check_mu(mu, a)
    xs = _unit_points(x)
    scale = math.exp(ln_gamma(mu + 1.0) - ln_gamma(mu + 1.0 - a))
    return _result(scale * xs ** (mu - a))


def exact_frac_deriv_power_log(mu: float, alpha: Order, x: ArrayLike) -> float | NDArray:
    """A^alpha (t^mu ln t) = Gamma(mu+1)/Gamma(mu+1-alpha) x^(mu-alpha) [ln x + psi(mu+1) - psi(mu+1-alpha)]."""
    a = FracOrder.coerce(alpha).alpha
    _check_mu(mu, a)
    xs = _unit_points(x)
    scale = math.exp(ln_gamma(mu + 1.0) - ln_gamma(mu + 1.0 - a))
    shift = digamma(mu + 1.0) - digamma(mu + 1.0 - a)
    safe = np.where(xs > 0.0, xs, 1.0)
    values = np.where(xs > 0.0, scale * safe ** (mu - a) * (np.log(safe) + shift), 0.0)
    return _result(values)


def rl_quadrature_oracle(
    fprime: ScalarFunction,
    alpha: Order,
    x: float,
    settings: Optional[QuadratureSettings] = None,
) -> float:
    """(1/Gamma(1-alpha)) int_0^x (x-t)^(-alpha) f'(t) dt by adaptive quadrature.

    The substitution s = (x - t)^(1-alpha) removes the kernel singularity at t = x;
    a remaining integrable singularity of f' at t = 0 is left to the extrapolating
    QUADPACK driver.
    """
    a = FracOrder.coerce(alpha).alpha
    x = float(x)
    if not 0.0 < x <= 1.0:
        raise DomainError(f"rl_quadrature_oracle requires x in (0, 1], got {x!r}")
    settings = settings or QuadratureSettings()
    power = 1.0 / (1.0 - a)

    def integrand(s: float) -> float:
        t = x - s**power
        if t <= 0.0:
            return 0.0
        return float(fprime(t))

    result = integrate.quad(
        integrand,
        0.0,
        x ** (1.0 - a),
        epsabs=settings.accept_atol * 1e-2,
        epsrel=settings.epsrel,
        limit=settings.limit,
        full_output=1,
    )
    value, abserr = result[0], result[1]
    _accept(value, abserr, result[3] if len(result) > 3 else None, settings, "rl_quadrature")
    return value / ((1.0 - a) * math.gamma(1.0 - a))


def balakrishnan_weight_oracle(
    j: int,
    alpha: Order,
    h: float,
    settings: Optional[QuadratureSettings] = None,
) -> float:
    """int_0^inf lam^(alpha-1) (1 + lam h)^(-(j+1)) d lam by quadrature.

    With u = lam h / (1 + lam h) the integral becomes
    h^(-alpha) int_0^1 u^(alpha-1) (1-u)^(-alpha) (1-u)^j du; the algebraic endpoint
    factors go into QUADPACK's singular weight and (1-u)^j is integrated adaptively.
    """
    a = FracOrder.coerce(alpha).alpha
    if j < 0:
        raise DomainError(f"balakrishnan_weight_oracle requires j >= 0, got {j}")
    if not 0.0 < h < 1.0:
        raise DomainError(f"balakrishnan_weight_oracle requires h in (0, 1), got {h!r}")
    settings = settings or QuadratureSettings()
    result = integrate.quad(
        lambda u: (1.0 - u) ** j,
        0.0,
        1.0,
        weight="alg",
        wvar=(a - 1.0, -a),
        epsabs=0.0,
        epsrel=settings.epsrel,
        limit=settings.limit,
        full_output=1,
    )
    value, abserr = result[0], result[1]
    _accept(value, abserr, result[3] if len(result) > 3 else None, settings, "balakrishnan")
    logger.debug("Balakrishnan weight j=%d alpha=%s: %.16g (+/- %.2e)", j, a, value, abserr)
    return h ** (-a) * value


def _accept(
    value: float,
    abserr: float,
    message: Optional[str],
    settings: QuadratureSettings,
    label: str,
) -> None:
    target = max(settings.accept_rtol * abs(value), settings.accept_atol)
    if message is not None and abserr > target:
        logger.error(f"{label} quadrature stalled: {message} (estimate {value}, error {abserr})")
        raise ToleranceError(
            f"{label} quadrature did not reach tolerance: {message}",
            estimate=value,
            error_estimate=abserr,
        )
    if message is not None:
        logger.debug(f"{label} quadrature flagged ({message}) but error {abserr:.2e} is acceptable")
