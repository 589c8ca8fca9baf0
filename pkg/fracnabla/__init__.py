"""Fractional powers of the backward-difference operator on uniform grids over [0, 1]."""

from .api import audit, get_settings, reproduce_table1, reproduce_table2
from .fractional import frac_extended_nabla, frac_nabla
from .grid import GridFn, UniformGrid, holder_error, holder_seminorm, modulus, sample
from .pipelines import ConvergenceRow, FodeProblem, convergence_table
from .types import FracNablaError, FracOrder, HolderExponent

__all__ = [
    "UniformGrid",
    "GridFn",
    "sample",
    "holder_seminorm",
    "holder_error",
    "modulus",
    "frac_nabla",
    "frac_extended_nabla",
    "FodeProblem",
    "ConvergenceRow",
    "convergence_table",
    "reproduce_table1",
    "reproduce_table2",
    "audit",
    "get_settings",
    "FracOrder",
    "HolderExponent",
    "FracNablaError",
]
