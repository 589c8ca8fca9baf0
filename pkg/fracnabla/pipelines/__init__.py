"""FODE solvers, convergence tables and audit suites."""

from .audits import SUITES, AuditResult, random_holder_function, run_audit
from .fode import (
    FodeProblem,
    example2_problem,
    fode_residuals,
    solve_gl_explicit,
    solve_gl_implicit,
)
from .tables import CSV_HEADER, ConvergenceRow, convergence_table

__all__ = [
    "FodeProblem",
    "example2_problem",
    "solve_gl_implicit",
    "solve_gl_explicit",
    "fode_residuals",
    "ConvergenceRow",
    "CSV_HEADER",
    "convergence_table",
    "AuditResult",
    "SUITES",
    "random_holder_function",
    "run_audit",
]
