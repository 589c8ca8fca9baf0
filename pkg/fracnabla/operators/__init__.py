"""Discrete nabla operators, resolvents and sectoriality audits."""

from .audit import (
    SectorialAuditReport,
    extended_nabla_convergence,
    interpolation_remainder,
    make_operator,
    nonconvergence_gap,
    nonconvergence_lower_bound,
    sectorial_audit,
)
from .base import GridOperator
from .nabla import (
    ExtendedNablaOperator,
    NablaOperator,
    extended_nabla,
    interpolate,
    nabla,
    resolvent_extended,
    resolvent_extended_at,
    resolvent_nabla,
)

__all__ = [
    "GridOperator",
    "NablaOperator",
    "ExtendedNablaOperator",
    "nabla",
    "interpolate",
    "extended_nabla",
    "resolvent_nabla",
    "resolvent_extended",
    "resolvent_extended_at",
    "SectorialAuditReport",
    "sectorial_audit",
    "make_operator",
    "interpolation_remainder",
    "extended_nabla_convergence",
    "nonconvergence_gap",
    "nonconvergence_lower_bound",
]
