import math

import mpmath
import numpy as np
import pytest

from fracnabla.specfn import (
    convergence_constant,
    digamma,
    gamma_ratio,
    gl_weights,
    ln_gamma,
    phi_alpha_bound,
    phi_alpha_residual,
    zeta,
)
from fracnabla.types import DomainError

mpmath.mp.dps = 30

ALPHAS = [round(0.1 * i, 1) for i in range(1, 10)]


def test_ln_gamma_known_values() -> None:
    assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    assert ln_gamma(0.5) == pytest.approx(0.5723649429247001, rel=1e-13)


def test_ln_gamma_matches_mpmath() -> None:
    for x in np.logspace(-3, 4, 57):
        reference = float(mpmath.loggamma(mpmath.mpf(float(x))))
        assert abs(ln_gamma(x) - reference) <= 1e-13 * max(1.0, abs(reference))


def test_digamma_known_values() -> None:
    assert digamma(2.0) - digamma(1.0) == pytest.approx(1.0, abs=1e-14)
    assert digamma(1.0) == pytest.approx(-0.5772156649015329, abs=1e-13)
    assert digamma(0.5) == pytest.approx(-1.9635100260214235, abs=1e-13)


def test_digamma_matches_mpmath() -> None:
    for x in np.logspace(-2, 4, 49):
        reference = float(mpmath.digamma(mpmath.mpf(float(x))))
        assert abs(digamma(x) - reference) <= 1e-12 * max(1.0, abs(reference))


def test_digamma_is_derivative_of_ln_gamma() -> None:
    eps = 1e-5
    for x in np.linspace(0.5, 100.0, 40):
        central = (ln_gamma(x + eps) - ln_gamma(x - eps)) / (2 * eps)
        assert central == pytest.approx(digamma(x), abs=1e-6)


def test_zeta_known_values() -> None:
    assert zeta(2.0) == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert zeta(4.0) == pytest.approx(math.pi**4 / 90, abs=1e-12)
    assert zeta(1.5) == pytest.approx(2.612375348685488, abs=1e-10)


def test_zeta_matches_mpmath() -> None:
    for s in np.linspace(1.011, 10.0, 40):
        reference = float(mpmath.zeta(mpmath.mpf(float(s))))
        assert abs(zeta(s) - reference) <= 1e-10 * max(1.0, reference)


@pytest.mark.parametrize("call", [lambda: ln_gamma(0.0), lambda: ln_gamma(-1.0),
                                  lambda: ln_gamma(float("nan")), lambda: digamma(0.0),
                                  lambda: zeta(1.0), lambda: zeta(0.5)])
def test_domain_errors(call) -> None:
    with pytest.raises(DomainError):
        call()


def test_gl_weights_examples() -> None:
    assert gl_weights(0.5, 4).w.tolist() == [1.0, -0.5, -0.125, -0.0625, -0.0390625]
    assert gl_weights(0.3, 1).w.tolist() == pytest.approx([1.0, -0.3], rel=1e-15)
    single = gl_weights(0.7, 0)
    assert len(single) == 1
    assert single.partial_sums().tolist() == [1.0]


@pytest.mark.parametrize("alpha", ALPHAS)
def test_gl_weights_invariants(alpha: float) -> None:
    weights = gl_weights(alpha, 300)
    w = weights.w
    assert w[0] == 1.0
    assert w[1] == pytest.approx(-alpha, rel=1e-15)
    assert np.all(w[1:] < 0)
    assert np.all(np.diff(np.abs(w[1:])) < 0)
    sums = weights.partial_sums()
    assert np.all(sums > 0)
    assert np.all(np.diff(sums) < 0)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_gl_recurrence_matches_gamma_formula(alpha: float) -> None:
    w = gl_weights(alpha, 200).w
    j = np.arange(1, 201)
    reference = -alpha * np.array(
        [math.exp(ln_gamma(k - alpha) - ln_gamma(1 - alpha) - ln_gamma(k + 1)) for k in j]
    )
    np.testing.assert_allclose(w[1:], reference, rtol=1e-10)


def test_gamma_ratio_values() -> None:
    assert gamma_ratio(0, 0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert gamma_ratio(1, 0.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-12)
    ratios = gamma_ratio(np.arange(0, 5000), 0.3)
    assert np.all(ratios > 0)
    assert np.all(ratios <= math.gamma(0.7) * (1 + 1e-14))
    assert np.all(np.diff(ratios) < 0)


def _phi_reference(m: int, alpha: float) -> float:
    with mpmath.workdps(30):
        a = mpmath.mpf(alpha)
        ratio = mpmath.gamma(m + a) / mpmath.gamma(m + 1)
        return float(mpmath.gamma(1 - a) * (ratio - mpmath.power(m, a - 1)))


def test_phi_alpha_example() -> None:
    assert phi_alpha_residual(1, 0.5) == pytest.approx(-0.20165752411062, abs=1e-13)


@pytest.mark.parametrize(("m", "alpha"), [(1, 0.5), (2, 0.3), (17, 0.9), (100, 0.1)])
def test_phi_alpha_matches_mpmath(m: int, alpha: float) -> None:
    assert phi_alpha_residual(m, alpha) == pytest.approx(_phi_reference(m, alpha), rel=1e-8)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_phi_alpha_bound_holds(alpha: float) -> None:
    m = np.arange(1, 10_001)
    assert np.all(np.abs(phi_alpha_residual(m, alpha)) <= phi_alpha_bound(m, alpha))


def test_phi_alpha_requires_m_at_least_one() -> None:
    with pytest.raises(DomainError):
        phi_alpha_residual(0.5, 0.3)


def test_convergence_constant_positive() -> None:
    for alpha in np.arange(1, 1000) * 1e-3:
        assert convergence_constant(alpha) > 0
    with pytest.raises(DomainError):
        convergence_constant(1.0)
