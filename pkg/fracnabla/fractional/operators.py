from __future__ import annotations

import logging
import math
from typing import Literal, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fracnabla.config import QuadratureSettings
from fracnabla.fractional.exact import balakrishnan_weight_oracle
from fracnabla.grid import GridFn
from fracnabla.operators import interpolate, nabla
from fracnabla.specfn import gamma_ratio, gl_weights
from fracnabla.types import DomainError, FracOrder, Order

logger = logging.getLogger(__name__)

WeightMethod = Literal["gl", "gamma-ratio", "quadrature"]


def _truncated_convolution(weights: NDArray, values: NDArray) -> NDArray:
    # direct O(n^2) sum, out[k] = sum_{j<=k} weights[j] values[k-j]
    return np.convolve(weights, values)[: values.size]


def frac_nabla(
    g: GridFn,
    alpha: Order,
    method: WeightMethod = "gl",
    settings: Optional[QuadratureSettings] = None,
) -> GridFn:
    """Fractional nabla nabla_h^alpha at the nodes.

    ``"gl"``: h^(-alpha) sum_j w_j v_{k-j} with Gruenwald-Letnikov weights.
    ``"gamma-ratio"``: h^(1-alpha)/Gamma(1-alpha) sum_j Gamma(j+1-alpha)/Gamma(j+1) (nabla_h v)_{k-j}.
    ``"quadrature"``: the same sum with the Balakrishnan integrals evaluated numerically.
    """
    a = FracOrder.coerce(alpha).alpha
    n, h = g.grid.n, g.h
    if not g.is_holder_element():
        logger.warning("frac_nabla input has v_0 = %r != 0; it is not an H^beta element", g.values[0])

    if method == "gl":
        weights = gl_weights(a, n).w
        values = h ** (-a) * _truncated_convolution(weights, g.values)
    elif method == "gamma-ratio":
        weights = gamma_ratio(np.arange(n + 1), a) / math.gamma(1.0 - a)
        values = h ** (1.0 - a) * _truncated_convolution(weights, nabla(g).values)
    elif method == "quadrature":
        scale = h * math.sin(a * math.pi) / math.pi
        weights = np.array(
            [scale * balakrishnan_weight_oracle(j, a, h, settings) for j in range(n + 1)]
        )
        values = _truncated_convolution(weights, nabla(g).values)
    else:
        raise DomainError(f"unknown weight method: {method!r}")
    return GridFn(g.grid, values)


def frac_extended_nabla(g: GridFn, alpha: Order, x: ArrayLike) -> float | NDArray:
    """A_h^alpha g (x) = I_h nabla_h^alpha g (x)."""
    return interpolate(frac_nabla(g, alpha), x)
