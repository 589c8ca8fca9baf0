from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from fracnabla.config import AuditSettings, QuadratureSettings, SolverSettings
from fracnabla.pipelines.audits import AuditResult, run_audit
from fracnabla.pipelines.tables import (
    TABLE1_DEFAULTS,
    TABLE2_DEFAULTS,
    ConvergenceRow,
    convergence_table,
)

# 设置日志记录器
logger = logging.getLogger(__name__)


@dataclass
class Settings:
    solver: SolverSettings
    quadrature: QuadratureSettings
    audit: AuditSettings

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(SolverSettings.from_env(), QuadratureSettings.from_env(), AuditSettings.from_env())


_settings_singleton: Settings | None = None


def get_settings() -> Settings:
    global _settings_singleton
    if _settings_singleton is None:
        _settings_singleton = Settings.from_env()
    return _settings_singleton


def reproduce_table1(
    *,
    mu: float = TABLE1_DEFAULTS["mu"],
    alpha: float = TABLE1_DEFAULTS["alpha"],
    beta: float = TABLE1_DEFAULTS["beta"],
    h_exponents: Sequence[int] = TABLE1_DEFAULTS["h_exponents"],
) -> list[ConvergenceRow]:
    logger.info(f"Reproducing table 1: mu={mu}, alpha={alpha}, beta={beta}")
    rows = convergence_table(
        "example1", alpha=alpha, beta=beta, h_exponents=h_exponents, mu=mu,
        settings=get_settings().solver,
    )
    logger.info("Table 1 completed")
    return rows


def reproduce_table2(
    *,
    alpha: float = TABLE2_DEFAULTS["alpha"],
    betas: Sequence[float] = TABLE2_DEFAULTS["betas"],
    h_exponents: Sequence[int] = TABLE2_DEFAULTS["h_exponents"],
    scheme: Optional[str] = None,
    solver: Optional[SolverSettings] = None,
) -> list[ConvergenceRow]:
    """Example 2 errors; ``scheme`` defaults to ``SolverSettings.scheme``."""
    logger.info(f"Reproducing table 2: alpha={alpha}, betas={list(betas)}, scheme={scheme}")
    return convergence_table(
        "example2",
        alpha=alpha,
        beta=betas,
        h_exponents=h_exponents,
        scheme=scheme,
        settings=solver or get_settings().solver,
    )


def audit(which: str, *, seed: Optional[int] = None) -> AuditResult:
    settings = get_settings()
    audit_settings = settings.audit
    if seed is not None:
        audit_settings = replace(audit_settings, seed=seed)
    return run_audit(which, audit_settings, settings.quadrature)
