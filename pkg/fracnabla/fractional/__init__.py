"""Fractional nabla operators and exact fractional derivatives."""

from .bounds import theoretical_error_bound
from .exact import (
    balakrishnan_weight_oracle,
    exact_frac_deriv_power,
    exact_frac_deriv_power_log,
    power_function,
    power_log_derivative,
    power_log_function,
    rl_quadrature_oracle,
)
from .operators import frac_extended_nabla, frac_nabla

__all__ = [
    "frac_nabla",
    "frac_extended_nabla",
    "balakrishnan_weight_oracle",
    "exact_frac_deriv_power",
    "exact_frac_deriv_power_log",
    "rl_quadrature_oracle",
    "power_function",
    "power_log_function",
    "power_log_derivative",
    "theoretical_error_bound",
]
