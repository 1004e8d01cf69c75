"""The explicit basis of the projected component for the shape [n-1, 1].

Each basis element is the definite integral of t^k prod_i (t - x_i)^m from
x_1 to x_j, realized two independent ways: by exact symbolic integration
and by the closed-form coefficient formula in the separation variable
z = x_2 - x_1 (transposed to general j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .exactalg import (
    MultiPoly,
    TPoly,
    divide_exact,
    elementary_symmetric,
    substitute,
    t_integrate_definite,
)
from .symgroup import Perm, act
from .tableaux import gamma, hook_tableau


class TheoremViolationError(AssertionError):
    """An exact identity the construction relies on failed to hold."""


@dataclass(frozen=True)
class HookSpec:
    """Parameters of one basis element: n variables, deformation order m,
    second-row entry j, and power k."""

    n: int
    m: int
    j: int
    k: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if self.m < 0 or self.k < 0:
            raise ValueError("m and k must be non-negative")
        if not 2 <= self.j <= self.n:
            raise ValueError(f"second-row entry {self.j} outside 2..{self.n}")

    def in_basis_range(self) -> bool:
        return self.k <= self.n - 2


def q_integral(spec: HookSpec) -> MultiPoly:
    """Integrate t^k prod_i (t - x_i)^m dt from x_1 to x_j."""
    n = spec.n
    integrand = TPoly.t_power(n, spec.k)
    for i in range(1, n + 1):
        integrand = integrand * TPoly.t_minus(n, i) ** spec.m
    return t_integrate_definite(integrand, lower=1, upper=spec.j)


def _q_m0(n: int, j: int, k: int) -> MultiPoly:
    """(x_j^(k+1) - x_1^(k+1)) / (k+1)."""
    xj = MultiPoly.variable(n, j)
    x1 = MultiPoly.variable(n, 1)
    return (xj ** (k + 1) - x1 ** (k + 1)) * Fraction(1, k + 1)


def q_closed_form(spec: HookSpec) -> MultiPoly:
    """Assemble the basis element from the z-expansion coefficient formula.

    For j = 2, the coefficient of z^r = (x_2 - x_1)^r is

        m! / (r (r-1) ... (r-m)) * sum over (i_3..i_n) in {0..m}^(n-2) of
        (-1)^(m + sum i_t) * prod C(m, i_t) * C(K, r - (2m+1))
        * x_1^(K - (r - (2m+1))) * prod x_t^(i_t)

    with K = k + m(n-2) - sum i_t and 2m+1 <= r <= K + 2m+1.  General j is
    the (2, j)-image of the j = 2 polynomial.
    """
    n, m, j, k = spec.n, spec.m, spec.j, spec.k
    if m == 0:
        return _q_m0(n, j, k)
    z = MultiPoly.variable(n, 2) - MultiPoly.variable(n, 1)
    z_pow = {}

    def zp(r):
        if r not in z_pow:
            z_pow[r] = z ** r
        return z_pow[r]

    result = MultiPoly.zero(n)
    m_fact = math.factorial(m)
    for idx in product(range(m + 1), repeat=n - 2):
        s = sum(idx)
        K = k + m * (n - 2) - s
        weight = (-1) ** (m + s)
        for it in idx:
            weight *= math.comb(m, it)
        mono = [0] * n
        for slot, it in zip(range(3, n + 1), idx):
            mono[slot - 1] = it
        for R in range(K + 1):
            r = R + 2 * m + 1
            falling = 1
            for a in range(m + 1):
                falling *= r - a
            coeff = Fraction(m_fact * weight * math.comb(K, R), falling)
            exp = list(mono)
            exp[0] = K - R
            result = result + MultiPoly.monomial(tuple(exp), coeff) * zp(r)
    if j != 2:
        result = act(Perm.transposition(n, 2, j), result)
    return result


def recursion_residual(spec: HookSpec) -> MultiPoly:
    """Q^(k,m) minus sum_{i=0..n} (-1)^i e_i Q^(n-i+k, m-1); zero when
    the recursion holds.  The identity is asserted for every m >= 1."""
    if spec.m < 1:
        raise ValueError("recursion needs m >= 1")
    n = spec.n
    total = q_integral(spec)
    for i in range(n + 1):
        lower = HookSpec(n=n, m=spec.m - 1, j=spec.j, k=n - i + spec.k)
        total = total - elementary_symmetric(n, i) * q_integral(lower) * ((-1) ** i)
    return total


def gamma_fixed_check(spec: HookSpec) -> bool:
    """True iff the hook projector fixes the basis element."""
    q = q_integral(spec)
    t = hook_tableau(spec.n, spec.j)
    return gamma(t).apply(q) == q


def lowest_quotient(spec: HookSpec) -> MultiPoly:
    """Exact quotient by (x_j - x_1)^(2m+1) evaluated at x_1 = x_j.

    Divisibility failure would contradict the membership theorem, so it
    raises rather than returning a sentinel.
    """
    n, m, j = spec.n, spec.m, spec.j
    q = q_integral(spec)
    divisor = (MultiPoly.variable(n, j) - MultiPoly.variable(n, 1)) ** (2 * m + 1)
    quotient = divide_exact(q, divisor)
    if quotient is None:
        raise TheoremViolationError(
            f"(x_{j} - x_1)^{2 * m + 1} does not divide Q for {spec}"
        )
    return substitute(quotient, {1: MultiPoly.variable(n, j)})


def lowest_quotient_rhs(spec: HookSpec) -> MultiPoly:
    """(-1)^m m!^2 / (2m+1)! * x_j^k * prod_{i != 1, j} (x_j - x_i)^m."""
    n, m, j, k = spec.n, spec.m, spec.j, spec.k
    scale = Fraction((-1) ** m * math.factorial(m) ** 2, math.factorial(2 * m + 1))
    xj = MultiPoly.variable(n, j)
    result = xj ** k * scale
    for i in range(2, n + 1):
        if i == j:
            continue
        result = result * (xj - MultiPoly.variable(n, i)) ** m
    return result


def hook_basis(n: int, m: int, j: int, verify: bool = False):
    """[Q^(0,m), ..., Q^(n-2,m)] for the hook tableau with second-row
    entry j, via the closed form; with ``verify`` the integral construction
    and the degree contract are asserted as well."""
    if n < 2:
        raise ValueError("need n >= 2")
    basis = []
    for k in range(n - 1):
        spec = HookSpec(n=n, m=m, j=j, k=k)
        q = q_closed_form(spec)
        if verify:
            if q != q_integral(spec):
                raise TheoremViolationError(f"dual constructions disagree for {spec}")
            if not (q.is_homogeneous() and q.degree() == m * n + k + 1):
                raise TheoremViolationError(f"degree contract failed for {spec}")
        basis.append(q)
    return basis
