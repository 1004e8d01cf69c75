"""Partitions, standard tableaux, cocharge, and the Young-symmetrizer
projections gamma_T with their algebraic identities."""

import math
from fractions import Fraction

import pytest

from quasiinv.exactalg import MultiPoly
from quasiinv.symgroup import act, subgroup_perms
from quasiinv.tableaux import (
    Partition,
    Tableau,
    alpha,
    cocharge,
    col_antisymmetrizer,
    col_union_antisym,
    content,
    f_lambda,
    gamma,
    hook_tableau,
    partitions_of,
    row_symmetrizer,
    standard_tableaux,
    v_t,
)

PARTITION_COUNTS = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11}


class TestPartition:
    def test_enumeration_counts(self):
        for n, count in PARTITION_COUNTS.items():
            assert len(list(partitions_of(n))) == count

    def test_conjugate_involution(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                assert shape.conjugate().conjugate() == shape

    def test_content(self):
        assert content(Partition([3])) == 3
        assert content(Partition([1, 1, 1])) == -3
        assert content(Partition([2, 1])) == 0
        for n in range(2, 7):
            for shape in partitions_of(n):
                assert content(shape.conjugate()) == -content(shape)

    def test_invalid(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([2, 0])


class TestStandardTableaux:
    def test_counts_match_hook_formula(self):
        for n in range(1, 7):
            for shape in partitions_of(n):
                tabs = standard_tableaux(shape)
                assert len(tabs) == f_lambda(shape)
                assert all(t.is_standard() for t in tabs)
                assert len(set(tabs)) == len(tabs)

    def test_dimension_sum_of_squares(self):
        for n in range(1, 7):
            total = sum(f_lambda(s) ** 2 for s in partitions_of(n))
            assert total == math.factorial(n)

    def test_conjugate_multiplicity(self):
        for n in range(2, 7):
            for shape in partitions_of(n):
                assert f_lambda(shape) == f_lambda(shape.conjugate())

    def test_hook_tableau(self):
        t = hook_tableau(4, 3)
        assert t.rows == ((1, 2, 4), (3,))
        assert t.is_standard()
        with pytest.raises(ValueError):
            hook_tableau(4, 1)

    def test_non_standard_detected(self):
        assert not Tableau([(2, 3), (1,)]).is_standard()
        assert not Tableau([(1, 3), (4, 2)]).is_standard()


class TestCocharge:
    def test_row_tableau_is_zero(self):
        for n in range(1, 7):
            t = standard_tableaux(Partition([n]))[0]
            assert cocharge(t) == 0

    def test_column_tableau(self):
        t = Tableau([(1,), (2,), (3,)])
        assert cocharge(t) == 3
        assert cocharge(Tableau([(1,), (2,), (3,), (4,)])) == 6

    def test_hook_values(self):
        # the hook tableau with j in the second row has cocharge n - j + 1
        for n in range(2, 6):
            for j in range(2, n + 1):
                assert cocharge(hook_tableau(n, j)) == n - j + 1

    def test_sum_over_shape_is_q_analog(self):
        # sum of q^cocharge over ST([2,1]) has exponents {1, 2}
        tabs = standard_tableaux(Partition([2, 1]))
        assert sorted(cocharge(t) for t in tabs) == [1, 2]


class TestSymmetrizers:
    def test_gamma_idempotent(self):
        for n in range(2, 5):
            for shape in partitions_of(n):
                for t in standard_tableaux(shape):
                    g = gamma(t)
                    assert g * g == g

    def test_row_symmetrizer_fixes_row_symmetric(self):
        t = hook_tableau(3, 3)  # rows (1,2), (3,)
        x1 = MultiPoly.variable(3, 1)
        x2 = MultiPoly.variable(3, 2)
        p = x1 * x2
        f = row_symmetrizer(t)
        assert f.apply(p) == p * 2  # unnormalized sum over the row group

    def test_col_antisymmetrizer_alternates(self):
        t = hook_tableau(3, 2)  # columns {1,2}
        f = col_antisymmetrizer(t)
        x1 = MultiPoly.variable(3, 1)
        x2 = MultiPoly.variable(3, 2)
        assert f.apply(x1) == x1 - x2
        assert f.apply(x1 + x2).is_zero()

    def test_projections_resolve_identity_in_trace(self):
        # sum over standard tableaux of gamma coefficients at the identity
        # equals 1 (the projections decompose the regular representation)
        for n in range(2, 5):
            total = Fraction(0)
            for shape in partitions_of(n):
                for t in standard_tableaux(shape):
                    g = gamma(t)
                    from quasiinv.symgroup import Perm

                    total += g.terms.get(Perm.identity(n), Fraction(0))
            assert total == 1

    def test_zero_products_distinct_tableaux_same_shape(self):
        for shape in (Partition([2, 1]), Partition([2, 2]), Partition([3, 1])):
            tabs = standard_tableaux(shape)
            for a in tabs:
                for b in tabs:
                    if a is b:
                        continue
                    prod = col_antisymmetrizer(a) * row_symmetrizer(b)
                    assert prod.is_zero()

    def test_alpha_fixes_gamma(self):
        # alpha(T, i, cell) gamma_T = gamma_T for each admissible pair
        for n in range(3, 5):
            for shape in partitions_of(n):
                for t in standard_tableaux(shape):
                    g = gamma(t)
                    for i in range(1, t.ncols()):
                        for j in range(i + 1, t.ncols() + 1):
                            for k in range(1, len(t.column(j)) + 1):
                                a = alpha(t, i, (k, j))
                                assert a * g == g

    def test_merged_bracket_factorization(self):
        # (1 - alpha) [C_i]' equals the bracket over C_i with the cell merged
        from quasiinv.symgroup import GroupAlgebraElem, bracket

        for n in range(3, 5):
            for shape in partitions_of(n):
                for t in standard_tableaux(shape):
                    for i in range(1, t.ncols()):
                        for j in range(i + 1, t.ncols() + 1):
                            for k in range(1, len(t.column(j)) + 1):
                                a = alpha(t, i, (k, j))
                                ci = bracket(n, t.column(i), signed=True)
                                lhs = (GroupAlgebraElem.identity(n) - a) * ci
                                assert lhs == col_union_antisym(t, i, (k, j))

    def test_col_union_factorization(self):
        # B(i, cell) = N(T) * alpha-sum structure: applying the merged
        # antisymmetrizer then the row symmetrizer kills gamma components
        t = hook_tableau(3, 2)  # rows (1,3),(2,): column 1 = {1,2}, column 2 = {3}
        merged = col_union_antisym(t, 1, (1, 2))
        assert not merged.is_zero()
        assert len(merged.terms) == 6  # antisymmetrizes all of {1,2,3}


class TestVT:
    def test_hook_v_t(self):
        for n in range(2, 6):
            for j in range(2, n + 1):
                t = hook_tableau(n, j)
                xj = MultiPoly.variable(n, j)
                x1 = MultiPoly.variable(n, 1)
                assert v_t(t) == xj - x1

    def test_column_shape(self):
        t = Tableau([(1,), (2,), (3,)])
        x = lambda i: MultiPoly.variable(3, i)
        assert v_t(t) == (x(2) - x(1)) * (x(3) - x(1)) * (x(3) - x(2))

    def test_alternates_under_column_group(self):
        t = Tableau([(1, 4), (2,), (3,)])
        vt = v_t(t)
        for s in subgroup_perms(4, (1, 2, 3)):
            assert act(s, vt) == vt * s.sign()
