from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from fracnabla.types import (
    DimensionError,
    DomainError,
    EvaluationError,
    Exponent,
    HolderExponent,
)

logger = logging.getLogger(__name__)

GridFunction = Callable[[NDArray[np.float64]], ArrayLike]


@dataclass(frozen=True)
class UniformGrid:
    """Nodes t_k = k h, k = 0..n, with n = floor(1/h) on [0, 1]."""

    h: float

    def __post_init__(self) -> None:
        h = float(self.h)
        if not math.isfinite(h) or not 0.0 < h < 1.0:
            raise DomainError(f"grid step must lie in (0, 1), got {self.h!r}")
        object.__setattr__(self, "h", h)

    @classmethod
    def from_exponent(cls, m: int) -> "UniformGrid":
        if m < 1:
            raise DomainError(f"grid exponent must be >= 1, got {m}")
        return cls(2.0**-m)

    @cached_property
    def n(self) -> int:
        n = int(math.floor(1.0 / self.h))
        # floor(1/h) may land one off when 1/h rounds across an integer
        while n * self.h > 1.0:
            n -= 1
        while (n + 1) * self.h <= 1.0:
            n += 1
        return n

    @cached_property
    def nodes(self) -> NDArray[np.float64]:
        nodes = np.arange(self.n + 1, dtype=float) * self.h
        nodes.setflags(write=False)
        return nodes

    def refine(self, factor: int) -> "UniformGrid":
        if factor < 1:
            raise DomainError(f"refinement factor must be >= 1, got {factor}")
        return UniformGrid(self.h / factor)

    def __len__(self) -> int:
        return self.n + 1


@dataclass(frozen=True, eq=False)
class GridFn:
    """Values v_k sampled at the nodes of a uniform grid (real or complex)."""

    grid: UniformGrid
    values: NDArray

    def __post_init__(self) -> None:
        values = np.asarray(self.values)
        if not np.iscomplexobj(values):
            values = values.astype(float, copy=False)
        if values.shape != (self.grid.n + 1,):
            raise DimensionError(
                f"expected {self.grid.n + 1} values for h={self.grid.h}, got shape {values.shape}"
            )
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0])
            raise EvaluationError(
                f"non-finite value at node {bad} (t={self.grid.nodes[bad]!r})",
                index=bad,
                t=float(self.grid.nodes[bad]),
            )
        object.__setattr__(self, "values", values)

    @property
    def h(self) -> float:
        return self.grid.h

    @property
    def nodes(self) -> NDArray[np.float64]:
        return self.grid.nodes

    def is_holder_element(self) -> bool:
        return self.values[0] == 0

    def _check_same_grid(self, other: "GridFn") -> None:
        if self.grid != other.grid:
            raise DimensionError(
                f"grid mismatch: h={self.grid.h} (n={self.grid.n}) vs "
                f"h={other.grid.h} (n={other.grid.n})"
            )

    def __add__(self, other: "GridFn") -> "GridFn":
        self._check_same_grid(other)
        return GridFn(self.grid, self.values + other.values)

    def __sub__(self, other: "GridFn") -> "GridFn":
        self._check_same_grid(other)
        return GridFn(self.grid, self.values - other.values)

    def __mul__(self, scalar: Union[float, complex]) -> "GridFn":
        return GridFn(self.grid, self.values * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "GridFn":
        return GridFn(self.grid, -self.values)


def sample(f: GridFunction, grid: UniformGrid) -> GridFn:
    """Evaluate a vectorised function at the grid nodes."""
    nodes = grid.nodes
    with np.errstate(all="ignore"):
        raw = np.asarray(f(nodes))
    values = np.broadcast_to(raw, nodes.shape).copy()
    finite = np.isfinite(values)
    if not np.all(finite):
        bad = int(np.flatnonzero(~finite)[0])
        logger.error("Sampled value at node %d (t=%r) is not finite", bad, nodes[bad])
        raise EvaluationError(
            f"function value is not finite at node {bad} (t={nodes[bad]!r})",
            index=bad,
            t=float(nodes[bad]),
        )
    return GridFn(grid, values)


def _gap_maxima(values: NDArray, max_gap: int) -> NDArray[np.float64]:
    """M[k-1] = max_i |v_{i+k} - v_i| for gaps k = 1..max_gap."""
    out = np.empty(max_gap, dtype=float)
    for k in range(1, max_gap + 1):
        out[k - 1] = np.max(np.abs(values[k:] - values[:-k]))
    return out


def _max_quotient(g: GridFn, beta: float, max_gap: int) -> float:
    if max_gap < 1:
        return 0.0
    maxima = _gap_maxima(g.values, max_gap)
    gaps = np.arange(1, maxima.size + 1, dtype=float) * g.h
    return float(np.max(maxima / gaps**beta))


def holder_seminorm(g: GridFn, beta: Exponent) -> float:
    """max over i < j of |v_j - v_i| / (t_j - t_i)^beta.

    For polygonal data this equals the Hoelder seminorm over the whole interval,
    since the supremum over a polygonal line is attained at a pair of vertices.
    """
    b = HolderExponent.coerce(beta).beta
    return _max_quotient(g, b, g.grid.n)


def modulus(g: GridFn, beta: Exponent, delta: float) -> float:
    """Restricted Hoelder quotient over node pairs with 0 < t_j - t_i <= delta."""
    b = HolderExponent.coerce(beta).beta
    if not delta > 0.0:
        raise DomainError(f"modulus requires delta > 0, got {delta!r}")
    max_gap = min(g.grid.n, int(math.floor(delta / g.h * (1.0 + 1e-12))))
    return _max_quotient(g, b, max_gap)


def holder_error(g1: GridFn, g2: GridFn, beta: Exponent) -> float:
    """Hoelderian error: seminorm of the nodewise difference."""
    g1._check_same_grid(g2)
    return holder_seminorm(g1 - g2, beta)
