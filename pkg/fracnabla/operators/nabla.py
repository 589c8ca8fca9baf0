from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.signal import lfilter

from fracnabla.grid import GridFn, GridFunction, holder_seminorm, sample
from fracnabla.operators.base import GridOperator
from fracnabla.types import DomainError, Exponent, SingularResolventError

logger = logging.getLogger(__name__)


def nabla(g: GridFn) -> GridFn:
    """Backward difference (v_k - v_{k-1}) / h, with v_0 / h at node 0."""
    previous = np.concatenate(([0.0], g.values[:-1]))
    return GridFn(g.grid, (g.values - previous) / g.h)


def interpolate(g: GridFn, x: ArrayLike) -> float | complex | NDArray:
    """Evaluate the polygonal line through (t_k, v_k) at x in [0, 1].

    Points beyond t_n (when n h < 1) continue the last segment linearly.
    """
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)) or np.any((xs < 0.0) | (xs > 1.0)):
        raise DomainError(f"interpolation points must lie in [0, 1], got {x!r}")
    t, v = g.nodes, g.values
    out = np.interp(xs, t, v)
    tail = xs > t[-1]
    if np.any(tail):
        slope = (v[-1] - v[-2]) / g.h
        out = np.where(tail, v[-1] + slope * (xs - t[-1]), out)
    return out.item() if out.ndim == 0 else out


def extended_nabla(g: GridFn) -> GridFn:
    """Vertices of A_h g = I_h nabla_h g; evaluate off-node with :func:`interpolate`."""
    return nabla(g)


def resolvent_nabla(lam: complex, g: GridFn) -> GridFn:
    """R(lam, nabla_h) g at nodes: -h sum_{j<=k} (1 - lam h)^{-(j+1)} v_{k-j}.

    Evaluated through the recursion S_k = q (v_k + S_{k-1}), q = 1/(1 - lam h),
    which is the same sum without forming the powers.
    """
    lam = complex(lam)
    denom = 1.0 - lam * g.h
    if denom == 0:
        logger.error("Resolvent of nabla is singular at lambda=%s (h=%s)", lam, g.h)
        raise SingularResolventError(f"lambda = 1/h = {lam} is in the spectrum of nabla_h")
    q = 1.0 / denom
    partial = lfilter([q], [1.0, -q], g.values.astype(complex))
    values = -g.h * partial
    if not np.all(np.isfinite(values)):
        raise SingularResolventError(
            f"resolvent overflow at lambda={lam}: |1 - lambda h| = {abs(denom):.3e}"
        )
    return GridFn(g.grid, values)


def resolvent_extended(lam: complex, g: GridFn) -> GridFn:
    """Nodal values of R(lam, A_h) g; (I - I_h) vanishes at the nodes."""
    lam = complex(lam)
    if lam == 0:
        raise SingularResolventError("the extended resolvent formula needs lambda != 0")
    return resolvent_nabla(lam, g)


def resolvent_extended_at(
    lam: complex,
    g: GridFn,
    x: ArrayLike,
    f: Optional[GridFunction] = None,
) -> complex | NDArray:
    """R(lam, A_h) f(x) = I_h R(lam, nabla_h) f (x) + (f(x) - I_h f(x)) / lam."""
    lam = complex(lam)
    value = interpolate(resolvent_extended(lam, g), x)
    if f is not None:
        xs = np.asarray(x, dtype=float)
        value = value + (np.asarray(f(xs)) - interpolate(g, xs)) / lam
    return value


class NablaOperator(GridOperator):
    name = "nabla"

    def apply(self, g: GridFn) -> GridFn:
        return nabla(g)

    def resolvent(self, lam: complex, g: GridFn) -> GridFn:
        return resolvent_nabla(lam, g)

    def sectorial_bound(self, omega_prime: float) -> float:
        return -1.0 / math.cos(omega_prime)


class ExtendedNablaOperator(GridOperator):
    """A_h = I_h nabla_h; ratios are measured on a grid refined by ``refine``."""

    name = "extended"

    def __init__(self, refine: int = 4) -> None:
        self.refine = refine

    def apply(self, g: GridFn) -> GridFn:
        return extended_nabla(g)

    def resolvent(self, lam: complex, g: GridFn) -> GridFn:
        return resolvent_extended(lam, g)

    def sectorial_bound(self, omega_prime: float) -> float:
        return -1.0 / math.cos(omega_prime) + 4.0

    def scaled_resolvent_ratio(
        self,
        lam: complex,
        g: GridFn,
        beta: Exponent,
        f: Optional[GridFunction] = None,
    ) -> float:
        if f is None:
            # the continuous representative is the polygon of g itself
            return super().scaled_resolvent_ratio(lam, g, beta)
        fine = g.grid.refine(self.refine)
        f_fine = sample(f, fine)
        norm = holder_seminorm(f_fine, beta)
        if norm == 0.0:
            return 0.0
        values = resolvent_extended_at(lam, g, fine.nodes, f)
        return abs(lam) * holder_seminorm(GridFn(fine, values), beta) / norm
