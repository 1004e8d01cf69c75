"""The quasiinvariance predicate, membership in the projected components,
and the brute-force graded-dimension oracle.

The oracle sets up, for a generic homogeneous polynomial of degree d, the
linear conditions that every (1 - (i,j)) image have (x_i - x_j)-adic
valuation at least 2m+1, and computes an exact integer nullspace by
fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exactalg import MultiPoly, binomial_valuation, divide_exact, vandermonde
from .symgroup import Perm, act
from .tableaux import Tableau, gamma, v_t

ORACLE_MAX_N = 4
DEFAULT_DEGREE_CAP = 12


class ResourceGuardError(ValueError):
    """A request exceeded the desk-scale guardrails."""


def degree_cap() -> int:
    value = os.environ.get("QI_MAX_DEGREE")
    return int(value) if value else DEFAULT_DEGREE_CAP


def is_quasiinvariant(p: MultiPoly, m: int) -> bool:
    """True iff (x_i - x_j)^(2m+1) divides (1 - (i,j)) p for all i < j."""
    if m < 0:
        raise ValueError("m must be non-negative")
    n = p.nvars
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            moved = p - act(Perm.transposition(n, i, j), p)
            if binomial_valuation(moved, i, j) < 2 * m + 1:
                return False
    return True


def in_gamma_component(p: MultiPoly, t: Tableau, m: int) -> bool:
    """Membership in gamma_T R intersect V_T^(2m+1) R."""
    if p.nvars != t.n:
        raise ValueError("size mismatch between polynomial and tableau")
    if p.is_zero():
        return True
    if gamma(t).apply(p) != p:
        return False
    return divide_exact(p, v_t(t) ** (2 * m + 1)) is not None


def delta_sq_embed(p: MultiPoly, m: int) -> MultiPoly:
    """Multiply an m-quasiinvariant by Delta_n^2; the result is checked to
    be (m+1)-quasiinvariant."""
    if not is_quasiinvariant(p, m):
        raise ValueError("input is not m-quasiinvariant")
    result = vandermonde(p.nvars) ** 2 * p
    if not is_quasiinvariant(result, m + 1):
        raise AssertionError("Delta^2 embedding failed quasiinvariance")
    return result


# -- exact linear algebra -------------------------------------------------


def bareiss_echelon(rows):
    """Fraction-free row echelon form of an integer matrix.

    Returns (echelon_rows, pivot_cols); echelon rows are integer rows with
    staircase pivots, zero rows dropped.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((k for k in range(r, len(mat)) if mat[k][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivot = mat[r][c]
        for k in range(r + 1, len(mat)):
            if not any(mat[k][c:]):
                continue
            factor = mat[k][c]
            for col in range(ncols):
                mat[k][col] = (mat[k][col] * pivot - factor * mat[r][col]) // prev
        prev = pivot
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    echelon = [row for row in mat[:r]]
    return echelon, pivots


def integer_nullspace(rows, ncols):
    """Nullspace basis of an integer matrix, one primitive integer vector
    per free column, deterministic order."""
    echelon, pivots = bareiss_echelon(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(reversed(echelon), reversed(pivots)):
            s = sum(Fraction(row[k]) * v[k] for k in range(c + 1, ncols) if row[k])
            v[c] = -s / row[c]
        denom = math.lcm(*(x.denominator for x in v))
        ints = [int(x * denom) for x in v]
        g = math.gcd(*ints)
        if g:
            ints = [x // g for x in ints]
        lead = next((x for x in ints if x), 1)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(ints)
    return basis


def rational_nullspace_dimension(rows, ncols) -> int:
    """Naive Fraction Gaussian elimination; cross-check for the Bareiss path."""
    mat = [[Fraction(x) for x in r] for r in rows if any(r)]
    rank = 0
    for c in range(ncols):
        pivot_row = next((k for k in range(rank, len(mat)) if mat[k][c]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = 1 / mat[rank][c]
        mat[rank] = [x * inv for x in mat[rank]]
        for k in range(len(mat)):
            if k != rank and mat[k][c]:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[rank])]
        rank += 1
    return ncols - rank


def poly_rank(polys) -> int:
    """Rank over Q of a list of MultiPoly values."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return 0
    monomials = sorted({e for p in polys for e in p.terms})
    index = {e: k for k, e in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monomials)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return len(monomials) - rational_nullspace_dimension(rows, len(monomials))


# -- the oracle ------------------------------------------------------------


@dataclass(frozen=True)
class QIWitness:
    """An exact basis of the degree-d homogeneous component of QI_m."""

    n: int
    m: int
    degree: int
    basis: tuple = field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def monomials_of_degree(n: int, d: int):
    """Exponent vectors of total degree d, graded-lex descending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], d, n)
    return out


def _constraint_rows(n: int, m: int, monomials):
    """Integer constraint rows: one per (pair, u-power, residual monomial).

    For the pair (i, j), substituting x_i = x_j + u into (1 - (i,j)) x^a
    contributes C(a_i, t) - C(a_j, t) at u^t times the residual monomial
    with the x_j slot carrying a_i + a_j - t.
    """
    col_index = {e: k for k, e in enumerate(monomials)}
    rows = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for exp in monomials:
                ai, aj = exp[i - 1], exp[j - 1]
                if ai == aj:
                    continue
                col = col_index[exp]
                for t in range(min(2 * m, ai + aj) + 1):
                    coeff = math.comb(ai, t) - math.comb(aj, t)
                    if not coeff:
                        continue
                    residual = list(exp)
                    residual[i - 1] = 0
                    residual[j - 1] = ai + aj - t
                    key = (i, j, t, tuple(residual))
                    row = rows.setdefault(key, {})
                    row[col] = row.get(col, 0) + coeff
    dense = []
    for key in sorted(rows):
        row = [0] * len(monomials)
        for col, value in rows[key].items():
            row[col] = value
        dense.append(row)
    return dense


def graded_dimension_oracle(n: int, m: int, d: int) -> QIWitness:
    """Exact basis of the homogeneous degree-d component of QI_m.

    Builds the vanishing conditions on a generic coefficient vector and
    returns the integer nullspace.
    """
    if n > ORACLE_MAX_N:
        raise ResourceGuardError(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    if d > degree_cap():
        raise ResourceGuardError(
            f"degree {d} above cap {degree_cap()} (set QI_MAX_DEGREE to raise)"
        )
    if m < 0 or d < 0:
        raise ValueError("m and d must be non-negative")
    monomials = monomials_of_degree(n, d)
    rows = _constraint_rows(n, m, monomials)
    basis_vectors = integer_nullspace(rows, len(monomials))
    basis = tuple(
        MultiPoly(n, {e: Fraction(c) for e, c in zip(monomials, vec) if c})
        for vec in basis_vectors
    )
    return QIWitness(n=n, m=m, degree=d, basis=basis)


def isotypic_dimension(witness: QIWitness, t: Tableau) -> int:
    """Rank over Q of the gamma_T images of the witness basis."""
    if t.n != witness.n:
        raise ValueError("tableau size mismatch")
    g = gamma(t)
    return poly_rank([g.apply(b) for b in witness.basis])


def random_homogeneous(rng: random.Random, n: int, degree: int, nterms: int = 4) -> MultiPoly:
    """Deterministic pseudo-random homogeneous polynomial (seeded rng)."""
    monomials = monomials_of_degree(n, degree)
    terms = {}
    for _ in range(min(nterms, len(monomials))):
        exp = monomials[rng.randrange(len(monomials))]
        terms[exp] = terms.get(exp, Fraction(0)) + Fraction(rng.randint(-5, 5))
    return MultiPoly(n, terms)


def theorem_main_checks(n: int, m: int, samples: int = 10, seed: int = 0,
                        max_degree: int | None = None) -> dict:
    """Sampled verification of the two directions of the direct-sum
    characterization of QI_m.

    (a) gamma_T projections of oracle witnesses land in V_T^(2m+1) R and
        remain m-quasiinvariant.
    (b) random gamma_T-fixed multiples of V_T^(2m+1) (filtered on
        divisibility, which projection does not preserve automatically)
        are m-quasiinvariant.
    """
    from .tableaux import partitions_of, standard_tableaux

    rng = random.Random(seed)
    if max_degree is None:
        max_degree = min(degree_cap(), m * n + 2)
    all_t = [
        t
        for shape in partitions_of(n)
        for t in standard_tableaux(shape)
    ]
    report = {
        "n": n,
        "m": m,
        "seed": seed,
        "samples": samples,
        "checked_a": 0,
        "checked_b": 0,
        "failures": [],
    }
    vt_pow = {t: v_t(t) ** (2 * m + 1) for t in all_t}
    for d in range(max_degree + 1):
        witness = graded_dimension_oracle(n, m, d)
        for q in witness.basis:
            for t in all_t:
                image = gamma(t).apply(q)
                if image.is_zero():
                    continue
                report["checked_a"] += 1
                if divide_exact(image, vt_pow[t]) is None:
                    report["failures"].append(("a:divisibility", d, t.rows))
                elif not is_quasiinvariant(image, m):
                    report["failures"].append(("a:quasiinvariance", d, t.rows))
    produced = 0
    attempts = 0
    while produced < samples and attempts < 20 * samples:
        attempts += 1
        t = all_t[rng.randrange(len(all_t))]
        p0 = random_homogeneous(rng, n, rng.randrange(0, 3))
        w = gamma(t).apply(vt_pow[t] * p0)
        if w.is_zero() or divide_exact(w, vt_pow[t]) is None:
            continue
        produced += 1
        report["checked_b"] += 1
        if not is_quasiinvariant(w, m):
            report["failures"].append(("b:quasiinvariance", w.degree(), t.rows))
    report["passed"] = not report["failures"]
    return report
