import math
import os
from dataclasses import dataclass, field


@dataclass
class SolverSettings:
    """Configuration for the Gruenwald-Letnikov FODE solvers."""

    newton_tol: float = 1e-12
    max_iter: int = 50
    # 括号搜索的初始半宽，失败时加倍
    bracket_halfwidth: float = 1.0
    max_bracket_doublings: int = 40
    derivative_step: float = 1e-7
    negative_slack: float = 1e-12
    # "explicit" is the Euler-like variant of the example 2 solver
    scheme: str = "implicit"

    @classmethod
    def from_env(cls) -> "SolverSettings":
        return cls(
            newton_tol=float(os.getenv("FRACNABLA_NEWTON_TOL", cls.newton_tol)),
            max_iter=int(os.getenv("FRACNABLA_MAX_ITER", cls.max_iter)),
            scheme=os.getenv("FRACNABLA_SCHEME", cls.scheme),
        )


@dataclass
class QuadratureSettings:
    """Configuration for the adaptive quadrature oracles (QUADPACK via scipy)."""

    epsrel: float = 1e-10
    accept_rtol: float = 1e-8
    accept_atol: float = 1e-12
    limit: int = 200

    @classmethod
    def from_env(cls) -> "QuadratureSettings":
        return cls(
            epsrel=float(os.getenv("FRACNABLA_QUAD_EPSREL", cls.epsrel)),
            limit=int(os.getenv("FRACNABLA_QUAD_LIMIT", cls.limit)),
        )


@dataclass
class AuditSettings:
    """Sample sets used by the built-in audit suites."""

    seed: int = 0
    n_functions: int = 20
    h_exponent: int = 6
    beta: float = 0.1
    refine: int = 4
    ray_angles: tuple[float, ...] = field(
        default_factory=lambda: (0.6 * math.pi, 0.75 * math.pi, math.pi)
    )
    samples_per_ray: tuple[int, ...] = field(default_factory=lambda: (34, 33, 33))
    magnitude_range: tuple[float, float] = (1e-2, 1e4)
    rel_slack: float = 1e-9
    resolvent_lambdas: tuple[complex, ...] = field(
        default_factory=lambda: (-1.0 + 0j, -10.0 + 0j, 3.0 + 4.0j, 10.0j)
    )

    @classmethod
    def from_env(cls) -> "AuditSettings":
        return cls(seed=int(os.getenv("FRACNABLA_AUDIT_SEED", cls.seed)))
