import logging

import numpy as np
import pytest

from fracnabla.fractional import frac_nabla
from fracnabla.grid import GridFn, UniformGrid
from fracnabla.pipelines import FodeProblem, convergence_table, solve_gl_implicit
from fracnabla.types import StepFailureError


def test_imports() -> None:
    from fracnabla import convergence_table as exported
    from fracnabla.cli import main
    from fracnabla.operators import NablaOperator

    assert callable(exported) and callable(main) and NablaOperator().name == "nabla"


def test_table_rows_are_logged(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.INFO, logger="fracnabla")
    convergence_table("example1", alpha=0.3, beta=0.1, h_exponents=[4], mu=1.5)
    messages = [r.getMessage() for r in caplog.records if r.name == "fracnabla.pipelines.tables"]
    assert any("h=2^-4" in message for message in messages)


def test_nonzero_initial_value_warns(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING, logger="fracnabla")
    frac_nabla(GridFn(UniformGrid(0.25), np.ones(5)), 0.5)
    assert any(
        r.levelno == logging.WARNING and r.name == "fracnabla.fractional.operators"
        for r in caplog.records
    )


def test_step_failure_is_logged(caplog: pytest.LogCaptureFixture) -> None:
    caplog.set_level(logging.WARNING, logger="fracnabla")
    problem = FodeProblem(alpha=0.5, rhs=lambda t, y: 2.0 * y + 1.0)
    with pytest.raises(StepFailureError):
        solve_gl_implicit(problem, UniformGrid(0.25))
    levels = [r.levelno for r in caplog.records if r.name == "fracnabla.pipelines.fode"]
    # Newton stalls first, then the bracketing fallback fails
    assert logging.WARNING in levels
    assert logging.ERROR in levels
