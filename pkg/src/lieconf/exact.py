"""Exact rational linear algebra: matrices, canonical subspaces, inertia.

Every scalar in this module is a `fractions.Fraction`; nothing here ever
touches floating point. Outputs are canonical (reduced row echelon bases,
deterministic pivoting), so equal inputs produce bit-identical results.
The report layer depends on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import DimensionMismatch, NotSymmetric, SingularMatrix

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(value: Fraction | int | str) -> Fraction:
    """Coerce an int, a Fraction, or a "p/q" string to an exact Fraction.

    Floats are rejected on purpose: admitting them would silently launder
    rounding error into the exact pipeline.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact scalar: {value!r}")


def vector(values: Iterable[Fraction | int | str]) -> Vector:
    """Coerce an iterable of scalars to a tuple of Fractions."""
    return tuple(frac(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def basis_vector(n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise DimensionMismatch(f"basis index {i} out of range for dimension {n}")
    return tuple(ONE if j == i else ZERO for j in range(n))


def add_vectors(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != len(y):
        raise DimensionMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def scale_vector(c: Fraction, x: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in x)


def is_zero_vector(x: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in x)


@dataclass(frozen=True)
class Matrix:
    """An immutable rows x cols matrix of Fractions, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> Matrix:
        rows = [vector(r) for r in rows]
        if not rows:
            raise DimensionMismatch("cannot build a matrix from zero rows")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("rows have unequal lengths")
        return cls(len(rows), width, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int | str]) -> Matrix:
        d = vector(values)
        n = len(d)
        return cls(n, n, tuple(d[i] if i == j else ZERO for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> Fraction:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionMismatch(f"index ({i}, {j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def __add__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in cols:
                out.append(sum((a * b for a, b in zip(r, c)), start=ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def scale(self, c: Fraction | int | str) -> Matrix:
        f = frac(c)
        return Matrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def apply(self, v: Sequence[Fraction | int | str]) -> Vector:
        """Matrix-vector product."""
        x = vector(v)
        if len(x) != self.cols:
            raise DimensionMismatch(f"vector of length {len(x)} for {self.rows}x{self.cols}")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), x)), start=ZERO) for i in range(self.rows)
        )

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.at(i, j) == self.at(j, i) for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __str__(self) -> str:
        cells = [[str(self.at(i, j)) for j in range(self.cols)] for i in range(self.rows)]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[" + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.cols)) + "]"
            for i in range(self.rows)
        )

    def _require_same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def stack(matrices: Sequence[Matrix]) -> Matrix:
    """Stack matrices with equal column counts vertically."""
    if not matrices:
        raise DimensionMismatch("cannot stack zero matrices")
    width = matrices[0].cols
    if any(m.cols != width for m in matrices):
        raise DimensionMismatch("stacked matrices must share a column count")
    entries: list[Fraction] = []
    for m in matrices:
        entries.extend(m.entries)
    return Matrix(sum(m.rows for m in matrices), width, tuple(entries))


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and its pivot columns (exact Gauss-Jordan).

    Pivoting is deterministic (first nonzero entry scanning down), so the
    result is the canonical RREF of the row space.
    """
    a = m.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        pivot_row = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix.from_rows(a), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> "Subspace":
    """Right null space {v : m v = 0} as a canonical Subspace."""
    reduced, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -reduced.at(r, f)
        vectors.append(v)
    return Subspace.span(m.cols, vectors)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan on the augmented matrix."""
    if not m.is_square():
        raise DimensionMismatch("only square matrices can be inverted")
    n = m.rows
    a = [list(m.row(i)) + list(Matrix.identity(n).row(i)) for i in range(n)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot_row is None:
            raise SingularMatrix(f"matrix of rank < {n} has no inverse")
        a[c], a[pivot_row] = a[pivot_row], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return Matrix.from_rows([row[n:] for row in a])


def det(m: Matrix) -> Fraction:
    """Determinant via fraction-free Bareiss elimination.

    Rows are first cleared of denominators (tracking the scale factor), so
    the elimination itself runs over integers and every division is exact.
    """
    if not m.is_square():
        raise DimensionMismatch("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return ONE
    scale = 1
    a: list[list[int]] = []
    for i in range(n):
        row = m.row(i)
        mult = lcm(*(x.denominator for x in row))
        scale *= mult
        a.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], scale)


class Inertia(NamedTuple):
    """Sylvester inertia of a symmetric matrix."""

    positive: int
    negative: int
    zero: int


def congruence_diagonalize(m: Matrix) -> tuple[Vector, Matrix]:
    """Diagonalize a symmetric matrix by congruence.

    Returns (d, s) with s.T @ m @ s equal to diag(d). Uses symmetric
    row/column elimination; a zero diagonal pivot is repaired either by a
    symmetric swap with a later nonzero diagonal entry or, failing that, by
    adding a row/column pair (which creates 2*m[i][j] != 0 on the diagonal,
    valid in characteristic zero).
    """
    if not m.is_symmetric():
        raise NotSymmetric("congruence diagonalization requires a symmetric matrix")
    n = m.rows
    a = m.row_lists()
    p = Matrix.identity(n).row_lists()  # accumulates row operations: p @ m @ p.T stays equal to a

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        p[i], p[j] = p[j], p[i]

    def add_row(i: int, j: int) -> None:
        # row_i += row_j, col_i += col_j
        a[i] = [x + y for x, y in zip(a[i], a[j])]
        for row in a:
            row[i] += row[j]
        p[i] = [x + y for x, y in zip(p[i], p[j])]

    def eliminate(i: int, j: int, f: Fraction) -> None:
        # row_j -= f row_i, col_j -= f col_i
        a[j] = [x - f * y for x, y in zip(a[j], a[i])]
        for row in a:
            row[j] -= f * row[i]
        p[j] = [x - f * y for x, y in zip(p[j], p[i])]

    for i in range(n):
        if a[i][i] == 0:
            diag_swap = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if diag_swap is not None:
                swap(i, diag_swap)
            else:
                off = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if off is None:
                    continue  # whole remaining row/column is zero
                add_row(i, off)
        for j in range(i + 1, n):
            if a[j][i] != 0:
                eliminate(i, j, a[j][i] / a[i][i])
    d = tuple(a[i][i] for i in range(n))
    s = Matrix.from_rows(p).transpose()
    return d, s


def signature(m: Matrix) -> Inertia:
    """Sylvester inertia (p, q, z) of a symmetric matrix, computed exactly."""
    d, _ = congruence_diagonalize(m)
    pos = sum(1 for x in d if x > 0)
    neg = sum(1 for x in d if x < 0)
    return Inertia(pos, neg, len(d) - pos - neg)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of QQ^n held by its canonical (RREF) basis.

    Two Subspace values compare equal exactly when they are the same
    subspace; an empty basis encodes the zero subspace.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence[Fraction | int | str]]) -> Subspace:
        coerced = [vector(v) for v in vectors]
        for v in coerced:
            if len(v) != ambient_dim:
                raise DimensionMismatch(
                    f"spanning vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
        coerced = [v for v in coerced if not is_zero_vector(v)]
        if not coerced:
            return cls(ambient_dim, ())
        reduced, pivots = rref(Matrix.from_rows(coerced))
        return cls(ambient_dim, tuple(reduced.row(r) for r in range(len(pivots))))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls.span(ambient_dim, [basis_vector(ambient_dim, i) for i in range(ambient_dim)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence[Fraction | int | str]) -> bool:
        x = vector(v)
        if len(x) != self.ambient_dim:
            raise DimensionMismatch(
                f"vector of length {len(x)} in ambient dimension {self.ambient_dim}"
            )
        if is_zero_vector(x):
            return True
        if self.is_zero():
            return False
        return rank(Matrix.from_rows(list(self.basis) + [x])) == self.dim

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def basis_matrix(self) -> Matrix:
        if self.is_zero():
            raise DimensionMismatch("the zero subspace has no basis matrix")
        return Matrix.from_rows(self.basis)
