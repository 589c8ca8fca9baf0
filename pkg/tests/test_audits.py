import numpy as np
import pytest

from fracnabla.config import AuditSettings
from fracnabla.pipelines import SUITES, random_holder_function, run_audit
from fracnabla.types import PreconditionError


@pytest.mark.parametrize("which", SUITES)
def test_suite_passes(which: str) -> None:
    result = run_audit(which)
    assert result.rows
    assert result.failures == 0, [row for row in result.rows if not row[-1]][:5]
    assert result.passed
    assert all(len(row) == len(result.header) for row in result.rows)


def test_sectorial_sample_counts() -> None:
    result = run_audit("sectorial-nabla")
    assert result.header == ("re_lambda", "im_lambda", "ratio", "bound", "pass")
    assert len(result.rows) == 20 * 100
    negative_axis = [row for row in result.rows if row[3] == pytest.approx(1.0)]
    assert len(negative_axis) == 20 * 33
    assert all(row[2] <= 1 + 1e-9 for row in negative_axis)


def test_balakrishnan_rows() -> None:
    result = run_audit("balakrishnan")
    assert result.header == ("j", "alpha", "h", "quadrature", "closed_form", "rel_error", "pass")
    assert len(result.rows) == 51 * 3 * 2
    assert max(row[5] for row in result.rows) <= 1e-6


def test_gamma_lemma_covers_range() -> None:
    result = run_audit("gamma-lemma")
    assert result.header == ("m", "alpha", "phi", "bound", "pass")
    assert len(result.rows) == 9 * 10_000
    assert {row[0] for row in result.rows} == set(range(1, 10_001))


def test_seed_changes_functions() -> None:
    a = run_audit("resolvent-identity", AuditSettings(seed=1, n_functions=3))
    b = run_audit("resolvent-identity", AuditSettings(seed=1, n_functions=3))
    c = run_audit("resolvent-identity", AuditSettings(seed=2, n_functions=3))
    assert a.rows == b.rows
    assert a.rows != c.rows
    assert len(a.rows) == 3 * 4


def test_random_holder_function() -> None:
    rng = np.random.default_rng(7)
    for _ in range(10):
        f = random_holder_function(rng, 0.1)
        t = np.linspace(0.0, 1.0, 65)
        values = f(t)
        assert values[0] == 0.0
        assert np.all(np.isfinite(values))


def test_unknown_suite() -> None:
    with pytest.raises(PreconditionError):
        run_audit("sectorial-adams")
