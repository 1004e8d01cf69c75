"""Exact arithmetic foundation.

Rational scalars (``fractions.Fraction``), sparse multivariate polynomials
over Q, a dense auxiliary-variable polynomial layer used for definite
integration, and truncated integer power series in q.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations


class DimensionMismatch(ValueError):
    """Operands belong to polynomial rings with different variable counts."""


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


def grlex_key(exp):
    """Sort key for graded-lexicographic order (ascending)."""
    return (sum(exp), exp)


class MultiPoly:
    """Sparse polynomial over Q in variables x_1..x_n.

    ``terms`` maps exponent tuples (length ``nvars``) to nonzero Fraction
    coefficients.  Zero coefficients are never stored, so equality of term
    maps is equality of polynomials.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean = {}
        for exp, c in (terms or {}).items():
            c = _coerce(c)
            if len(exp) != nvars:
                raise DimensionMismatch(
                    f"exponent vector {exp} has length {len(exp)}, expected {nvars}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if c != 0:
                clean[tuple(exp)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: _coerce(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The polynomial x_i (1-indexed)."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        exp = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls(nvars, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, exp, c=1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): _coerce(c)})

    # -- predicates / views -------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def sorted_terms(self):
        """Terms in graded-lex descending order of exponent vector."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    # -- ring operations ----------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"nvars {self.nvars} != {other.nvars}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            s = terms.get(exp, Fraction(0)) + c
            if s:
                terms[exp] = s
            else:
                terms.pop(exp, None)
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if c == 0:
                return MultiPoly.zero(self.nvars)
            return MultiPoly(self.nvars, {e: k * c for e, k in self.terms.items()})
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(exp, Fraction(0)) + c1 * c2
                if s:
                    terms[exp] = s
                else:
                    del terms[exp]
        return MultiPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"

    def to_text(self) -> str:
        """Fully expanded monomial form, graded-lex descending."""
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i+1}" if e == 1 else f"x{i+1}^{e}"
                for i, e in enumerate(exp)
                if e
            )
            if mono:
                lead = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{lead}{mono}"
            else:
                body = f"{abs(c)}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def substitute(p: MultiPoly, assignment: dict) -> MultiPoly:
    """Simultaneous substitution x_i -> assignment[i] (1-indexed).

    Unmapped variables are left alone.  Every image polynomial must have
    the same nvars as ``p``.
    """
    n = p.nvars
    images = {}
    for i, q in assignment.items():
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range")
        if q.nvars != n:
            raise DimensionMismatch("substitution image has wrong nvars")
        images[i] = q
    result = MultiPoly.zero(n)
    pow_cache = {}

    def power(i, e):
        key = (i, e)
        if key not in pow_cache:
            pow_cache[key] = images[i] ** e
        return pow_cache[key]

    for exp, c in p.terms.items():
        residual = list(exp)
        factor = MultiPoly.constant(n, c)
        for i in images:
            e = residual[i - 1]
            if e:
                residual[i - 1] = 0
                factor = factor * power(i, e)
        result = result + factor * MultiPoly.monomial(tuple(residual))
    return result


def partial_derivative(p: MultiPoly, i: int) -> MultiPoly:
    """Formal partial derivative with respect to x_i (1-indexed)."""
    if not 1 <= i <= p.nvars:
        raise ValueError(f"variable index {i} out of range 1..{p.nvars}")
    terms = {}
    for exp, c in p.terms.items():
        e = exp[i - 1]
        if e:
            new = list(exp)
            new[i - 1] = e - 1
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + c * e
    return MultiPoly(p.nvars, terms)


def divide_exact(p: MultiPoly, d: MultiPoly):
    """Exact quotient p/d in Q[x_1..x_n], or None when d does not divide p.

    Leading-term cancellation under graded-lex: if p = d*q the leading
    terms must cancel at every step, so the loop reaches zero exactly when
    the division is exact.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(d)
    n = p.nvars
    d_exp, d_coef = d.leading()
    quotient = {}
    r = p
    while not r.is_zero():
        r_exp, r_coef = r.leading()
        q_exp = tuple(a - b for a, b in zip(r_exp, d_exp))
        if any(e < 0 for e in q_exp):
            return None
        c = r_coef / d_coef
        quotient[q_exp] = quotient.get(q_exp, Fraction(0)) + c
        r = r - d * MultiPoly.monomial(q_exp, c)
    return MultiPoly(n, quotient)


def binomial_valuation(p: MultiPoly, i: int, j: int) -> float:
    """(x_i - x_j)-adic valuation of p, via the substitution x_i = x_j + u.

    Returns ``math.inf`` for the zero polynomial.  The substitution is
    done exponent-by-exponent; the u-degree distribution is all we need.
    """
    if i == j:
        raise ValueError("need two distinct variables")
    if p.is_zero():
        return math.inf
    # coefficient map keyed by (u-power, residual exponent vector)
    acc = {}
    for exp, c in p.terms.items():
        a = exp[i - 1]
        rest = list(exp)
        rest[i - 1] = 0
        for t in range(a + 1):
            key_exp = list(rest)
            key_exp[j - 1] += a - t
            key = (t, tuple(key_exp))
            s = acc.get(key, Fraction(0)) + c * math.comb(a, t)
            if s:
                acc[key] = s
            else:
                del acc[key]
    if not acc:
        return math.inf
    return min(t for t, _ in acc)


def elementary_symmetric(n: int, i: int) -> MultiPoly:
    """e_i in n variables; e_0 = 1 by convention."""
    if not 0 <= i <= n:
        raise ValueError(f"e_{i} undefined for n={n}")
    if i == 0:
        return MultiPoly.constant(n, 1)
    terms = {}
    for subset in combinations(range(n), i):
        exp = [0] * n
        for s in subset:
            exp[s] = 1
        terms[tuple(exp)] = Fraction(1)
    return MultiPoly(n, terms)


def vandermonde(n: int) -> MultiPoly:
    """The Vandermonde determinant prod_{i<j} (x_i - x_j)."""
    if n < 1:
        raise ValueError("n must be positive")
    result = MultiPoly.constant(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            result = result * (MultiPoly.variable(n, i) - MultiPoly.variable(n, j))
    return result


class TPoly:
    """Polynomial in an auxiliary variable t with MultiPoly coefficients.

    Dense in t: ``coeffs[d]`` is the coefficient of t^d.  Trailing zero
    coefficients are trimmed, so the leading coefficient is nonzero unless
    the whole value is zero (empty coeffs).
    """

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.nvars != nvars:
                raise DimensionMismatch("coefficient nvars mismatch")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TPoly is immutable")

    @classmethod
    def from_multipoly(cls, p: MultiPoly) -> "TPoly":
        return cls(p.nvars, [p])

    @classmethod
    def t_power(cls, nvars: int, k: int) -> "TPoly":
        coeffs = [MultiPoly.zero(nvars)] * k + [MultiPoly.constant(nvars, 1)]
        return cls(nvars, coeffs)

    @classmethod
    def t_minus(cls, nvars: int, i: int) -> "TPoly":
        """The linear factor t - x_i."""
        return cls(nvars, [-MultiPoly.variable(nvars, i), MultiPoly.constant(nvars, 1)])

    def is_zero(self) -> bool:
        return not self.coeffs

    def t_degree(self) -> int:
        return len(self.coeffs) - 1

    def _check(self, other: "TPoly"):
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"nvars {self.nvars} != {other.nvars}")

    def __add__(self, other: "TPoly") -> "TPoly":
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        zero = MultiPoly.zero(self.nvars)
        coeffs = [
            (self.coeffs[d] if d < len(self.coeffs) else zero)
            + (other.coeffs[d] if d < len(other.coeffs) else zero)
            for d in range(size)
        ]
        return TPoly(self.nvars, coeffs)

    def __mul__(self, other: "TPoly") -> "TPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return TPoly(self.nvars, [])
        zero = MultiPoly.zero(self.nvars)
        coeffs = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for d1, c1 in enumerate(self.coeffs):
            if c1.is_zero():
                continue
            for d2, c2 in enumerate(other.coeffs):
                coeffs[d1 + d2] = coeffs[d1 + d2] + c1 * c2
        return TPoly(self.nvars, coeffs)

    def __pow__(self, k: int) -> "TPoly":
        if k < 0:
            raise ValueError("negative power")
        result = TPoly.from_multipoly(MultiPoly.constant(self.nvars, 1))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, self.coeffs))

    def __repr__(self):
        return f"TPoly({self.nvars}, deg_t={self.t_degree()})"


def t_integrate_definite(f: TPoly, lower: int, upper: int) -> MultiPoly:
    """Definite integral of f dt from t = x_lower to t = x_upper.

    Termwise antiderivative t^d -> t^(d+1)/(d+1), then evaluation.
    """
    if lower == upper:
        raise ValueError("lower and upper variables must differ")
    n = f.nvars
    xl = MultiPoly.variable(n, lower)
    xu = MultiPoly.variable(n, upper)
    result = MultiPoly.zero(n)
    for d, c in enumerate(f.coeffs):
        if c.is_zero():
            continue
        result = result + c * (xu ** (d + 1) - xl ** (d + 1)) * Fraction(1, d + 1)
    return result


class PowerSeriesQ:
    """Truncated power series in q with integer coefficients.

    ``coeffs`` has length exactly truncation+1 (degrees 0..D).
    """

    __slots__ = ("truncation", "coeffs")

    def __init__(self, truncation: int, coeffs):
        if truncation < 0:
            raise ValueError("truncation must be non-negative")
        coeffs = list(coeffs)
        if len(coeffs) > truncation + 1:
            coeffs = coeffs[: truncation + 1]
        coeffs += [0] * (truncation + 1 - len(coeffs))
        if not all(isinstance(c, int) for c in coeffs):
            raise TypeError("PowerSeriesQ coefficients must be integers")
        object.__setattr__(self, "truncation", truncation)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeriesQ is immutable")

    @classmethod
    def one(cls, truncation: int) -> "PowerSeriesQ":
        return cls(truncation, [1])

    @classmethod
    def from_exponents(cls, exponents, truncation: int) -> "PowerSeriesQ":
        coeffs = [0] * (truncation + 1)
        for e in exponents:
            if 0 <= e <= truncation:
                coeffs[e] += 1
        return cls(truncation, coeffs)

    def _check(self, other: "PowerSeriesQ"):
        if self.truncation != other.truncation:
            raise ValueError("truncation mismatch")

    def __add__(self, other: "PowerSeriesQ") -> "PowerSeriesQ":
        self._check(other)
        return PowerSeriesQ(
            self.truncation, [a + b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other: "PowerSeriesQ") -> "PowerSeriesQ":
        self._check(other)
        return PowerSeriesQ(
            self.truncation, [a - b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __mul__(self, other: "PowerSeriesQ") -> "PowerSeriesQ":
        self._check(other)
        D = self.truncation
        out = [0] * (D + 1)
        for d1, c1 in enumerate(self.coeffs):
            if not c1:
                continue
            for d2 in range(D + 1 - d1):
                out[d1 + d2] += c1 * other.coeffs[d2]
        return PowerSeriesQ(D, out)

    def mul_one_minus_q_power(self, j: int) -> "PowerSeriesQ":
        """Multiply by (1 - q^j), truncated."""
        D = self.truncation
        out = list(self.coeffs)
        for d in range(D, j - 1, -1):
            out[d] -= self.coeffs[d - j]
        return PowerSeriesQ(D, out)

    def __eq__(self, other):
        if not isinstance(other, PowerSeriesQ):
            return NotImplemented
        return self.truncation == other.truncation and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.truncation, self.coeffs))

    def __repr__(self):
        return f"PowerSeriesQ(D={self.truncation}, {list(self.coeffs)})"


def series_expand(numerator: PowerSeriesQ, n: int, D: int) -> PowerSeriesQ:
    """numerator / prod_{i=1..n} (1 - q^i), truncated at q^D.

    Division by (1 - q^i) is the stride-i prefix sum, which is exact over
    the integers because the constant term of each factor is 1.
    """
    if D < 0:
        raise ValueError("D must be non-negative")
    coeffs = list(numerator.coeffs[: D + 1]) + [0] * max(0, D + 1 - len(numerator.coeffs))
    for i in range(1, n + 1):
        for d in range(i, D + 1):
            coeffs[d] += coeffs[d - i]
    return PowerSeriesQ(D, coeffs)
