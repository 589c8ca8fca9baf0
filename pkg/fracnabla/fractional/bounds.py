from __future__ import annotations

import math

from fracnabla.grid import GridFn, holder_seminorm, modulus
from fracnabla.specfn import convergence_constant
from fracnabla.types import DomainError, Exponent, FracOrder, HolderExponent, Order


def theoretical_error_bound(fprime_fine: GridFn, h: float, alpha: Order, beta: Exponent) -> float:
    """Strong-convergence envelope for ||A^alpha f - nabla_h^alpha f||_beta.

    2 (16/Gamma(2-a) + C(a)/Gamma(1-a) + 1) ||f'||_beta h^(1-a-b)
    + (2^(b+1) + 6)/Gamma(2-a) omega_beta(f', 2h),
    with the seminorm and modulus of f' read off ``fprime_fine``.
    """
    a = FracOrder.coerce(alpha).alpha
    b = HolderExponent.coerce(beta).beta
    if not a + b < 1.0:
        raise DomainError(f"the envelope needs alpha + beta < 1, got {a} + {b}")
    g2 = math.gamma(2.0 - a)
    leading = 2.0 * (16.0 / g2 + convergence_constant(a) / math.gamma(1.0 - a) + 1.0)
    norm = holder_seminorm(fprime_fine, b)
    local = modulus(fprime_fine, b, 2.0 * h)
    return leading * norm * h ** (1.0 - a - b) + (2.0 ** (b + 1.0) + 6.0) / g2 * local
