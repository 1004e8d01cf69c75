"""The deformed Laplacian L_m and its eigen-identity on the hook basis.

L_m = sum_i d^2/dx_i^2 - 2m sum_{i<j} (x_i - x_j)^{-1} (d/dx_i - d/dx_j).

The 1/(x_i - x_j) factor is realized as exact polynomial division; inputs
outside the operator's polynomial domain raise NonPolynomialError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import MultiPoly, divide_exact, partial_derivative
from .hookbasis import HookSpec, q_integral


class NonPolynomialError(ArithmeticError):
    """The operator image left the polynomial ring."""


@dataclass(frozen=True)
class LmOperator:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise ValueError("need n >= 1 and m >= 0")


def apply_lm(op: LmOperator, p: MultiPoly) -> MultiPoly:
    if p.nvars != op.n:
        raise ValueError("polynomial nvars mismatch")
    n = op.n
    result = MultiPoly.zero(n)
    for i in range(1, n + 1):
        result = result + partial_derivative(partial_derivative(p, i), i)
    if op.m == 0:
        return result
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            diff = partial_derivative(p, i) - partial_derivative(p, j)
            if diff.is_zero():
                continue
            quotient = divide_exact(
                diff, MultiPoly.variable(n, i) - MultiPoly.variable(n, j)
            )
            if quotient is None:
                raise NonPolynomialError(
                    f"(x_{i} - x_{j}) does not divide the derivative difference"
                )
            result = result - quotient * (2 * op.m)
    return result


def lm_eigen_check(spec: HookSpec) -> MultiPoly:
    """L_m Q^(k,m) - k(k-1) Q^(k-2,m); the zero polynomial when the
    eigen-identity holds (the subtracted term is omitted for k < 2)."""
    op = LmOperator(n=spec.n, m=spec.m)
    residual = apply_lm(op, q_integral(spec))
    if spec.k >= 2:
        lower = HookSpec(n=spec.n, m=spec.m, j=spec.j, k=spec.k - 2)
        residual = residual - q_integral(lower) * (spec.k * (spec.k - 1))
    return residual
