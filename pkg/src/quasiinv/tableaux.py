"""Partitions, standard Young tableaux, the row/column symmetrizers, the
Young projector gamma_T, the column polynomial V_T, and the auxiliary
group-algebra elements built from a column plus one cell to its right.

Cell convention: (row i, column j), 1-based, with row 1 the longest row.
Standardness: entries increase left-to-right along rows and top-to-bottom
down columns.  Content is sum of (j - i) over cells, so a single column of
size 3 has content -3.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exactalg import MultiPoly
from .symgroup import GroupAlgebraElem, bracket


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if not parts:
            raise ValueError("empty partition")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def cells(self):
        """All cells (i, j), 1-based, row-major."""
        return [
            (i, j)
            for i, row_len in enumerate(self.parts, start=1)
            for j in range(1, row_len + 1)
        ]

    def conjugate(self) -> "Partition":
        return Partition(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )

    def hook_length_count(self) -> int:
        """f_lambda by the hook length formula."""
        conj = self.conjugate().parts
        product = 1
        for i, j in self.cells():
            product *= (self.parts[i - 1] - j) + (conj[j - 1] - i) + 1
        return math.factorial(self.size) // product

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"


def content(shape: Partition) -> int:
    """Sum of (column - row) over the diagram cells."""
    return sum(j - i for i, j in shape.cells())


def partitions_of(n: int):
    """All partitions of n, largest-first-part order."""
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


class Tableau:
    """A filling of a Young diagram with {1..n}; rows as tuples."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        shape = Partition(len(row) for row in rows)
        n = shape.size
        entries = [v for row in rows for v in row]
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError("entries must be a bijection onto 1..n")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Tableau is immutable")

    @property
    def n(self) -> int:
        return self.shape.size

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def column(self, j: int):
        """Entries of column j, top to bottom."""
        return tuple(row[j - 1] for row in self.rows if len(row) >= j)

    def ncols(self) -> int:
        return self.shape.parts[0]

    def is_standard(self) -> bool:
        for row in self.rows:
            if any(row[k] >= row[k + 1] for k in range(len(row) - 1)):
                return False
        for j in range(1, self.ncols() + 1):
            col = self.column(j)
            if any(col[k] >= col[k + 1] for k in range(len(col) - 1)):
                return False
        return True

    def reading_word(self):
        """Rows left-to-right, last (shortest) row first."""
        word = []
        for row in reversed(self.rows):
            word.extend(row)
        return tuple(word)

    def same_column_pairs(self):
        """Pairs (above, below) of entries sharing a column."""
        pairs = []
        for j in range(1, self.ncols() + 1):
            col = self.column(j)
            for a in range(len(col)):
                for b in range(a + 1, len(col)):
                    pairs.append((col[a], col[b]))
        return pairs

    def __eq__(self, other):
        if not isinstance(other, Tableau):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau{self.rows}"


def standard_tableaux(shape: Partition):
    """All standard tableaux of the given shape, sorted by row-reading word
    (rows concatenated top to bottom, lexicographic)."""
    n = shape.size
    results = []

    def place(value, fill):
        if value > n:
            results.append(Tableau(fill))
            return
        for i, row in enumerate(fill):
            if len(row) < shape.parts[i] and (i == 0 or len(fill[i - 1]) > len(row)):
                row.append(value)
                place(value + 1, fill)
                row.pop()

    place(1, [[] for _ in shape.parts])
    results.sort(key=lambda t: tuple(v for row in t.rows for v in row))
    return results


def f_lambda(shape: Partition) -> int:
    """Number of standard tableaux, by enumeration, cross-checked against
    the hook length formula."""
    count = len(standard_tableaux(shape))
    hook = shape.hook_length_count()
    if count != hook:
        raise AssertionError(f"enumeration {count} != hook formula {hook} for {shape}")
    return count


def cocharge(t: Tableau) -> int:
    """Cocharge of the reading word: label(1) = 0, and label(v+1) is
    label(v)+1 when v+1 sits to the left of v, else label(v)."""
    if not t.is_standard():
        raise ValueError("cocharge requires a standard tableau")
    word = t.reading_word()
    pos = {v: k for k, v in enumerate(word)}
    label = 0
    total = 0
    for v in range(1, t.n):
        if pos[v + 1] < pos[v]:
            label += 1
        total += label
    return total


def row_symmetrizer(t: Tableau) -> GroupAlgebraElem:
    """P(T): product over rows of the unsigned bracket sums."""
    result = GroupAlgebraElem.identity(t.n)
    for row in t.rows:
        result = result * bracket(t.n, row, signed=False)
    return result


def col_antisymmetrizer(t: Tableau) -> GroupAlgebraElem:
    """N(T): product over columns of the signed bracket sums."""
    result = GroupAlgebraElem.identity(t.n)
    for j in range(1, t.ncols() + 1):
        result = result * bracket(t.n, t.column(j), signed=True)
    return result


def gamma(t: Tableau) -> GroupAlgebraElem:
    """The Young projector f_lambda * N(T) P(T) / n! (an idempotent)."""
    if not t.is_standard():
        raise ValueError("gamma requires a standard tableau")
    scale = Fraction(t.shape.hook_length_count(), math.factorial(t.n))
    return (col_antisymmetrizer(t) * row_symmetrizer(t)) * scale


def v_t(t: Tableau) -> MultiPoly:
    """Product of (x_below - x_above) over same-column pairs.

    For a hook tableau with second-row entry j this is x_j - x_1.
    """
    n = t.n
    result = MultiPoly.constant(n, 1)
    for above, below in t.same_column_pairs():
        result = result * (MultiPoly.variable(n, below) - MultiPoly.variable(n, above))
    return result


def _check_column_cell(t: Tableau, i: int, cell):
    k, j = cell
    if not 1 <= i < j <= t.ncols():
        raise ValueError(f"need columns i < j within the diagram, got i={i}, j={j}")
    col_j = t.column(j)
    if not 1 <= k <= len(col_j):
        raise ValueError(f"cell ({k},{j}) not in the tableau")
    return col_j[k - 1]


def alpha(t: Tableau, i: int, cell) -> GroupAlgebraElem:
    """Sum of transpositions (entry of column i, entry at ``cell``)."""
    from .symgroup import Perm

    target = _check_column_cell(t, i, cell)
    terms = {}
    for source in t.column(i):
        terms[Perm.transposition(t.n, source, target)] = Fraction(1)
    return GroupAlgebraElem(t.n, terms)


def col_union_antisym(t: Tableau, i: int, cell) -> GroupAlgebraElem:
    """[C_i union {entry at cell}]', the signed bracket over the enlarged set."""
    target = _check_column_cell(t, i, cell)
    return bracket(t.n, tuple(t.column(i)) + (target,), signed=True)


def hook_tableau(n: int, j: int) -> Tableau:
    """The standard tableau of shape [n-1, 1] with second-row entry j."""
    if n < 2 or not 2 <= j <= n:
        raise ValueError(f"hook tableau needs n >= 2 and 2 <= j <= n, got n={n}, j={j}")
    first = tuple(v for v in range(1, n + 1) if v != j)
    return Tableau([first, (j,)])
