"""Special functions: log-gamma, digamma, zeta, Gruenwald-Letnikov weights and gamma ratios.

All gamma ratios are evaluated in log space so that indices up to ~10^4 do not overflow.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import special

from fracnabla.types import DomainError, FracOrder, Order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GLWeights:
    """Coefficients w_j = (-1)^j binom(alpha, j) for j = 0..n."""

    alpha: float
    w: NDArray[np.float64]

    def __len__(self) -> int:
        return int(self.w.size)

    def partial_sums(self) -> NDArray[np.float64]:
        return np.cumsum(self.w)


def _positive_scalar(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} requires a finite positive argument, got {x!r}")
    return x


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    x = _positive_scalar(x, "ln_gamma")
    return float(special.gammaln(x))


def digamma(x: float) -> float:
    x = _positive_scalar(x, "digamma")
    return float(special.digamma(x))


def zeta(s: float) -> float:
    """Riemann zeta for real s > 1 (no analytic continuation)."""
    s = float(s)
    if not math.isfinite(s) or s <= 1.0:
        raise DomainError(f"zeta requires s > 1, got {s!r}")
    return float(special.zeta(s, 1.0))


def gl_weights(alpha: Order, n: int) -> GLWeights:
    """Build w_0..w_n with the recurrence w_j = w_{j-1} (j - 1 - alpha) / j."""
    a = FracOrder.coerce(alpha).alpha
    if n < 0:
        raise DomainError(f"gl_weights requires n >= 0, got {n}")
    j = np.arange(1, n + 1, dtype=float)
    factors = (j - 1.0 - a) / j
    w = np.empty(n + 1, dtype=float)
    w[0] = 1.0
    # cumprod is the sequential recurrence, no cancellation
    w[1:] = np.cumprod(factors)
    logger.debug("Built %d GL weights for alpha=%s", n + 1, a)
    return GLWeights(alpha=a, w=w)


def gamma_ratio(j: ArrayLike, alpha: Order) -> float | NDArray[np.float64]:
    """Gamma(j + 1 - alpha) / Gamma(j + 1), scalar or elementwise over an index array."""
    a = FracOrder.coerce(alpha).alpha
    jj = np.asarray(j, dtype=float)
    if np.any(jj < 0):
        raise DomainError("gamma_ratio requires j >= 0")
    value = np.exp(special.gammaln(jj + 1.0 - a) - special.gammaln(jj + 1.0))
    return float(value) if value.ndim == 0 else value


def phi_alpha_residual(m: ArrayLike, alpha: Order) -> float | NDArray[np.float64]:
    """Phi_alpha(m) = Gamma(1 - alpha) (Gamma(m + alpha) / Gamma(m + 1) - m^(alpha - 1))."""
    a = FracOrder.coerce(alpha).alpha
    mm = np.asarray(m, dtype=float)
    if np.any(mm < 1):
        raise DomainError("phi_alpha_residual requires m >= 1")
    ratio = np.exp(special.gammaln(mm + a) - special.gammaln(mm + 1.0))
    value = special.gamma(1.0 - a) * (ratio - mm ** (a - 1.0))
    return float(value) if value.ndim == 0 else value


def phi_alpha_bound(m: ArrayLike, alpha: Order) -> float | NDArray[np.float64]:
    """Upper bound Gamma(2 - alpha)/2 * m^(alpha - 2) on |Phi_alpha(m)|."""
    a = FracOrder.coerce(alpha).alpha
    mm = np.asarray(m, dtype=float)
    value = 0.5 * special.gamma(2.0 - a) * mm ** (a - 2.0)
    return float(value) if value.ndim == 0 else value


def convergence_constant(alpha: Order) -> float:
    """C(alpha) = 1/(1 - alpha) - Gamma(2 - alpha) + 1 + (alpha/2) zeta(1 + alpha)."""
    a = FracOrder.coerce(alpha).alpha
    return 1.0 / (1.0 - a) - math.gamma(2.0 - a) + 1.0 + 0.5 * a * zeta(1.0 + a)
