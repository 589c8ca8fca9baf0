from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

from fracnabla.grid import GridFn, GridFunction, holder_seminorm
from fracnabla.types import Exponent


class GridOperator(ABC):
    """Abstract discrete operator acting on grid functions of H^beta."""

    name: str = "operator"

    @abstractmethod
    def apply(self, g: GridFn) -> GridFn:
        raise NotImplementedError

    @abstractmethod
    def resolvent(self, lam: complex, g: GridFn) -> GridFn:
        """Nodal values of R(lam, B) g = (lam I - B)^{-1} g."""
        raise NotImplementedError

    @abstractmethod
    def sectorial_bound(self, omega_prime: float) -> float:
        """Upper bound on ||lam R(lam, B)|| for |arg lam| >= omega_prime."""
        raise NotImplementedError

    def scaled_resolvent_ratio(
        self,
        lam: complex,
        g: GridFn,
        beta: Exponent,
        f: Optional[GridFunction] = None,
    ) -> float:
        """||lam R(lam, B) g||_beta / ||g||_beta, reported as 0 for g = 0."""
        norm = holder_seminorm(g, beta)
        if norm == 0.0:
            return 0.0
        return abs(lam) * holder_seminorm(self.resolvent(lam, g), beta) / norm
