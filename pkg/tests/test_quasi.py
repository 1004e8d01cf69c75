"""Quasiinvariance predicate, graded dimension oracle, projection
membership, and the degree-cap/resource guards."""

import random
from fractions import Fraction

import pytest

from quasiinv.exactalg import MultiPoly, elementary_symmetric, vandermonde
from quasiinv.quasi import (
    ResourceGuardError,
    bareiss_echelon,
    delta_sq_embed,
    graded_dimension_oracle,
    in_gamma_component,
    integer_nullspace,
    is_quasiinvariant,
    monomials_of_degree,
    poly_rank,
    random_homogeneous,
    rational_nullspace_dimension,
    theorem_main_checks,
)
from quasiinv.tableaux import Partition, hook_tableau, standard_tableaux


def x(i, n):
    return MultiPoly.variable(n, i)


class TestPredicate:
    def test_m0_everything(self):
        rng = random.Random(0)
        for _ in range(10):
            p = random_homogeneous(rng, 3, rng.randrange(0, 4))
            assert is_quasiinvariant(p, 0)

    def test_symmetric_always(self):
        for n in (2, 3):
            for m in (0, 1, 2, 3):
                for i in range(1, n + 1):
                    assert is_quasiinvariant(elementary_symmetric(n, i), m)

    def test_hand_examples_n2(self):
        z = x(2, 2) - x(1, 2)
        assert is_quasiinvariant(z ** 3, 1)
        assert not is_quasiinvariant(z ** 3, 2)
        assert is_quasiinvariant(z ** 5, 2)
        assert not is_quasiinvariant(x(1, 2), 1)

    def test_vandermonde_squared_times_anything(self):
        # Delta^2 P is 1-quasiinvariant whenever P is 0-quasiinvariant
        rng = random.Random(1)
        v2 = vandermonde(3) ** 2
        for _ in range(5):
            p = random_homogeneous(rng, 3, 2)
            assert is_quasiinvariant(v2 * p, 1)

    def test_chain_containment(self):
        # QI_{m+1} subset QI_m on oracle witnesses
        for n, m, dmax in ((2, 1, 6), (2, 2, 8), (3, 1, 6)):
            for d in range(dmax + 1):
                w = graded_dimension_oracle(n, m, d)
                for p in w.basis:
                    for lower in range(m + 1):
                        assert is_quasiinvariant(p, lower)


class TestLinearAlgebra:
    def test_monomials_of_degree(self):
        monos = monomials_of_degree(3, 2)
        assert len(monos) == 6
        assert len(set(monos)) == 6
        assert all(sum(e) == 2 for e in monos)

    def test_bareiss_rank_matches_naive(self):
        rng = random.Random(2)
        for _ in range(15):
            rows = [
                [rng.randint(-4, 4) for _ in range(5)]
                for _ in range(rng.randint(1, 6))
            ]
            _, pivots = bareiss_echelon([list(r) for r in rows])
            naive_nullity = rational_nullspace_dimension(rows, 5)
            assert len(pivots) == 5 - naive_nullity

    def test_integer_nullspace_vectors_are_solutions(self):
        rows = [[1, 2, 3, 4], [0, 1, 1, 1]]
        basis = integer_nullspace(rows, 4)
        assert len(basis) == 2
        for v in basis:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0

    def test_poly_rank(self):
        a = x(1, 2) + x(2, 2)
        b = x(1, 2) - x(2, 2)
        assert poly_rank([a, b, a + b]) == 2
        assert poly_rank([MultiPoly.zero(2)]) == 0


class TestOracle:
    def test_n2_m1_low_degrees(self):
        # independent hand count: degree d space is spanned by e1^d and,
        # once d >= 3, by (x2-x1)^3 e1^(d-3); dimension grows by the
        # symmetric polynomials in between
        dims = [graded_dimension_oracle(2, 1, d).dimension for d in range(6)]
        assert dims == [1, 1, 2, 3, 4, 5]

    def test_n2_m1_degree2_membership(self):
        w = graded_dimension_oracle(2, 1, 2)
        # degree 2: e1^2 and e2 span; both symmetric
        span_checks = [elementary_symmetric(2, 1) ** 2, elementary_symmetric(2, 2)]
        assert poly_rank(list(w.basis) + span_checks) == w.dimension == 2

    def test_m0_full_space(self):
        for d in range(5):
            w = graded_dimension_oracle(3, 0, d)
            assert w.dimension == len(monomials_of_degree(3, d))

    def test_witnesses_are_quasiinvariant(self):
        for n, m, d in ((2, 2, 5), (3, 1, 4), (3, 2, 7)):
            w = graded_dimension_oracle(n, m, d)
            for p in w.basis:
                assert p.is_homogeneous() and p.degree() == d
                assert is_quasiinvariant(p, m)

    def test_resource_guard(self):
        with pytest.raises(ResourceGuardError):
            graded_dimension_oracle(9, 1, 2)


class TestGammaComponent:
    def test_hook_membership(self):
        from quasiinv.hookbasis import HookSpec, q_integral

        q = q_integral(HookSpec(n=3, m=1, j=2, k=0))
        assert in_gamma_component(q, hook_tableau(3, 2), 1)
        assert not in_gamma_component(q, hook_tableau(3, 3), 1)

    def test_trivial_component(self):
        # symmetric polynomials lie in the component of the single-row tableau
        t = standard_tableaux(Partition([3]))[0]
        assert in_gamma_component(elementary_symmetric(3, 2), t, 1)


class TestDeltaSqEmbed:
    def test_embedding_raises_level(self):
        rng = random.Random(3)
        for _ in range(5):
            p = random_homogeneous(rng, 2, 3)
            q = delta_sq_embed(p, 0)
            assert is_quasiinvariant(q, 1)
            assert q == vandermonde(2) ** 2 * p

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            delta_sq_embed(x(1, 2), 1)


class TestMainCharacterization:
    def test_report_passes(self):
        for n, m in ((2, 1), (2, 2), (3, 1)):
            report = theorem_main_checks(n, m, samples=4, seed=7)
            assert report["passed"], report["failures"]
            assert report["checked_a"] > 0
            assert report["checked_b"] > 0

    def test_deterministic_given_seed(self):
        a = theorem_main_checks(2, 1, samples=3, seed=11)
        b = theorem_main_checks(2, 1, samples=3, seed=11)
        assert a == b


class TestDegreeCap:
    def test_env_override(self, monkeypatch):
        from quasiinv import quasi

        monkeypatch.setenv("QI_MAX_DEGREE", "5")
        assert quasi.degree_cap() == 5
        monkeypatch.delenv("QI_MAX_DEGREE")
        assert quasi.degree_cap() == quasi.DEFAULT_DEGREE_CAP

    def test_degree_guard(self):
        with pytest.raises(ResourceGuardError):
            graded_dimension_oracle(2, 1, 100)
