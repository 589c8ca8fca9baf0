from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

# λ in R(λ, B); plain Python complex numbers, finite components.
ComplexScalar = complex


def _check_open_unit(value: float, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value!r}")
    return value


@dataclass(frozen=True)
class FracOrder:
    """Fractional order alpha, strictly inside (0, 1)."""

    alpha: float

    def __post_init__(self) -> None:
        _check_open_unit(self.alpha, "alpha")

    @classmethod
    def coerce(cls, value: Union[float, "FracOrder"]) -> "FracOrder":
        return value if isinstance(value, FracOrder) else cls(float(value))

    def __float__(self) -> float:
        return self.alpha


@dataclass(frozen=True)
class HolderExponent:
    """Hoelder exponent beta, strictly inside (0, 1)."""

    beta: float

    def __post_init__(self) -> None:
        _check_open_unit(self.beta, "beta")

    @classmethod
    def coerce(cls, value: Union[float, "HolderExponent"]) -> "HolderExponent":
        return value if isinstance(value, HolderExponent) else cls(float(value))

    def __float__(self) -> float:
        return self.beta


Order = Union[float, FracOrder]
Exponent = Union[float, HolderExponent]


class FracNablaError(RuntimeError):
    pass


class DomainError(FracNablaError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class EvaluationError(FracNablaError):
    def __init__(self, message: str, *, index: int | None = None, t: float | None = None):
        super().__init__(message)
        self.index = index
        self.t = t


class DimensionError(FracNablaError, ValueError):
    pass


class SingularResolventError(FracNablaError):
    pass


class PreconditionError(FracNablaError, ValueError):
    pass


class ToleranceError(FracNablaError):
    def __init__(self, message: str, *, estimate: float, error_estimate: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class StepFailureError(FracNablaError):
    def __init__(self, message: str, *, k: int, residual: float):
        super().__init__(message)
        self.k = k
        self.residual = residual


class RhsDomainError(DomainError):
    def __init__(self, message: str, *, t: float, y: float):
        super().__init__(message)
        self.t = t
        self.y = y


class CsvParseError(FracNablaError, ValueError):
    def __init__(self, message: str, *, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
