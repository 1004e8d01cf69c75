"""Hook-shape basis elements: dual construction, degree contract,
elementary-symmetric recursion, limit formula, and hand-verified values."""

from fractions import Fraction

import pytest

from quasiinv.exactalg import MultiPoly, divide_exact, substitute
from quasiinv.hookbasis import (
    HookSpec,
    TheoremViolationError,
    gamma_fixed_check,
    hook_basis,
    lowest_quotient,
    lowest_quotient_rhs,
    q_closed_form,
    q_integral,
    recursion_residual,
)
from quasiinv.quasi import in_gamma_component, is_quasiinvariant
from quasiinv.tableaux import hook_tableau


def x(i, n):
    return MultiPoly.variable(n, i)


def grid(n_range=(2, 3), m_range=(0, 1, 2)):
    for n in n_range:
        for m in m_range:
            for j in range(2, n + 1):
                for k in range(n - 1):
                    yield HookSpec(n=n, m=m, j=j, k=k)


class TestSpecValidation:
    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            HookSpec(n=1, m=0, j=2, k=0)
        with pytest.raises(ValueError):
            HookSpec(n=3, m=-1, j=2, k=0)
        with pytest.raises(ValueError):
            HookSpec(n=3, m=0, j=4, k=0)
        with pytest.raises(ValueError):
            HookSpec(n=3, m=0, j=2, k=-1)

    def test_basis_range(self):
        assert HookSpec(n=3, m=1, j=2, k=1).in_basis_range()
        assert not HookSpec(n=3, m=1, j=2, k=5).in_basis_range()


class TestHandValues:
    def test_n2_m1(self):
        z = x(2, 2) - x(1, 2)
        expected = z ** 3 * MultiPoly.constant(2, Fraction(-1, 6))
        assert q_integral(HookSpec(n=2, m=1, j=2, k=0)) == expected

    def test_n3_m1_value(self):
        # int_{x1}^{x2} t (t-x1)(t-x2)(t-x3) ... with k=0, m=1:
        # u-substitution gives (x2-x1)^3 (2 x3 - x1 - x2) / 12
        q = q_integral(HookSpec(n=3, m=1, j=2, k=0))
        z = x(2, 3) - x(1, 3)
        w = x(3, 3) * 2 - x(1, 3) - x(2, 3)
        assert q == z ** 3 * w * Fraction(1, 12)

    def test_m0_is_power_difference(self):
        # m = 0: int_{x1}^{xj} t^k dt = (xj^{k+1} - x1^{k+1}) / (k+1)
        for n in (2, 3, 4):
            for j in range(2, n + 1):
                for k in range(n - 1):
                    q = q_integral(HookSpec(n=n, m=0, j=j, k=k))
                    expected = (x(j, n) ** (k + 1) - x(1, n) ** (k + 1)) * Fraction(
                        1, k + 1
                    )
                    assert q == expected


class TestDualConstruction:
    @pytest.mark.parametrize("spec", list(grid()), ids=str)
    def test_closed_form_matches_integral(self, spec):
        assert q_closed_form(spec) == q_integral(spec)

    def test_degree_contract(self):
        for spec in grid():
            q = q_integral(spec)
            assert q.is_homogeneous()
            assert q.degree() == spec.m * spec.n + spec.k + 1


class TestMembership:
    @pytest.mark.parametrize("spec", list(grid()), ids=str)
    def test_component_and_quasiinvariance(self, spec):
        q = q_integral(spec)
        t = hook_tableau(spec.n, spec.j)
        assert gamma_fixed_check(spec)
        assert in_gamma_component(q, t, spec.m)
        assert is_quasiinvariant(q, spec.m)

    def test_divisibility_by_v_t_power(self):
        spec = HookSpec(n=3, m=2, j=3, k=1)
        q = q_integral(spec)
        vt = x(3, 3) - x(1, 3)
        assert divide_exact(q, vt ** 5) is not None
        assert divide_exact(q, vt ** 6) is None


class TestRecursion:
    @pytest.mark.parametrize("spec",
                             [s for s in grid(m_range=(1, 2)) if s.m >= 1],
                             ids=str)
    def test_residual_vanishes(self, spec):
        assert recursion_residual(spec).is_zero()

    def test_hand_instance_n3(self):
        # Q^{1,1} = Q^{4,0} - e1 Q^{3,0} + e2 Q^{2,0} - e3 Q^{1,0} at n=3, j=2
        from quasiinv.exactalg import elementary_symmetric

        total = q_integral(HookSpec(n=3, m=1, j=2, k=1))
        acc = MultiPoly.zero(3)
        for i in range(4):
            sign = -1 if i % 2 else 1
            lower = q_integral(HookSpec(n=3, m=0, j=2, k=4 - i))
            acc = acc + elementary_symmetric(3, i) * lower * sign
        assert total == acc

    def test_m0_raises(self):
        with pytest.raises(ValueError):
            recursion_residual(HookSpec(n=3, m=0, j=2, k=0))


class TestLimitFormula:
    @pytest.mark.parametrize("spec", list(grid()), ids=str)
    def test_quotient_matches_closed_form(self, spec):
        assert lowest_quotient(spec) == lowest_quotient_rhs(spec)

    def test_n3_hand_value(self):
        # quotient at n=3, m=1, j=2, k=0 is (x3 - x2)/6; the closed form is
        # (-1)^m m!^2/(2m+1)! x_j^k prod (x_j - x_i)^m = -(x2 - x3)/6
        got = lowest_quotient(HookSpec(n=3, m=1, j=2, k=0))
        assert got == (x(3, 3) - x(2, 3)) * Fraction(1, 6)

    def test_quotient_defines_limit(self):
        # substituting x_1 -> x_j in Q / (x_j - x_1)^(2m+1) before the
        # substitution agrees with dividing then substituting
        spec = HookSpec(n=3, m=1, j=3, k=1)
        q = q_integral(spec)
        vt = x(3, 3) - x(1, 3)
        quotient = divide_exact(q, vt ** 3)
        assert substitute(quotient, {1: x(3, 3)}) == lowest_quotient(spec)


class TestBasisBuilder:
    def test_sizes_and_degrees(self):
        for n in (2, 3, 4):
            for m in (0, 1):
                basis = hook_basis(n, m, 2, verify=True)
                assert len(basis) == n - 1
                assert [p.degree() for p in basis] == [
                    m * n + k + 1 for k in range(n - 1)
                ]

    def test_independent(self):
        from quasiinv.quasi import poly_rank

        basis = hook_basis(3, 1, 2)
        assert poly_rank(list(basis)) == 2

    def test_violation_error_is_assertion(self):
        assert issubclass(TheoremViolationError, AssertionError)
