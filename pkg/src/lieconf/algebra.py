"""Lie algebras presented by structure constants on a fixed basis.

A bracket table maps ordered basis pairs (i, j) with i < j to the
coordinate vector of [e_i, e_j]; the (j, i) values follow by antisymmetry
and are never stored, so antisymmetry holds by construction. Validation
therefore consists of shape checks plus the Jacobi identity. All indices
in this module are 0-based; the document layer translates to the 1-based
external convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, JacobiViolation
from .exact import (
    Matrix,
    Subspace,
    Vector,
    ZERO,
    add_vectors,
    basis_vector,
    inverse,
    is_zero_vector,
    kernel,
    scale_vector,
    stack,
    vector,
    zero_vector,
)

BracketTable = Mapping[tuple[int, int], Sequence[Fraction | int | str]]


class LieAlgebra:
    """A finite-dimensional Lie algebra over QQ with a distinguished basis.

    The constructor validates the table and raises JacobiViolation on the
    first basis triple whose Jacobi residual is nonzero; a violation is the
    only way construction can fail once shapes are right.
    """

    __slots__ = ("dim", "_table", "_unimodular")

    def __init__(self, dim: int, brackets: BracketTable) -> None:
        if dim < 1:
            raise DimensionMismatch("a Lie algebra needs dimension >= 1")
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), coords in brackets.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(
                    f"bracket key ({i}, {j}) must satisfy 0 <= i < j < {dim}"
                )
            v = vector(coords)
            if len(v) != dim:
                raise DimensionMismatch(
                    f"bracket [e_{i}, e_{j}] has {len(v)} coordinates, expected {dim}"
                )
            if not is_zero_vector(v):
                table[(i, j)] = v
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "_unimodular", None)
        self._check_jacobi()

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LieAlgebra is immutable")

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    ei = basis_vector(self.dim, i)
                    ej = basis_vector(self.dim, j)
                    ek = basis_vector(self.dim, k)
                    residual = add_vectors(
                        add_vectors(
                            self.bracket(self.bracket(ei, ej), ek),
                            self.bracket(self.bracket(ej, ek), ei),
                        ),
                        self.bracket(self.bracket(ek, ei), ej),
                    )
                    if not is_zero_vector(residual):
                        raise JacobiViolation(i, j, k, residual)

    # -- bracket machinery -------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for basis indices, including the antisymmetric flips."""
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise DimensionMismatch(f"basis indices ({i}, {j}) out of range")
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), zero_vector(self.dim))
        return scale_vector(Fraction(-1), self._table.get((j, i), zero_vector(self.dim)))

    def bracket(self, x: Sequence[Fraction | int | str], y: Sequence[Fraction | int | str]) -> Vector:
        """[x, y], extended bilinearly from the table."""
        xv, yv = vector(x), vector(y)
        if len(xv) != self.dim or len(yv) != self.dim:
            raise DimensionMismatch("bracket arguments must match the algebra dimension")
        out = [ZERO] * self.dim
        for (i, j), c in self._table.items():
            coeff = xv[i] * yv[j] - xv[j] * yv[i]
            if coeff != 0:
                for k in range(self.dim):
                    out[k] += coeff * c[k]
        return tuple(out)

    def ad(self, x: Sequence[Fraction | int | str]) -> Matrix:
        """The matrix of ad_x = [x, .] in the distinguished basis."""
        columns = [self.bracket(x, basis_vector(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_rows([[col[i] for col in columns] for i in range(self.dim)])

    def trace_ad(self, x: Sequence[Fraction | int | str]) -> Fraction:
        m = self.ad(x)
        return sum((m.at(i, i) for i in range(self.dim)), start=ZERO)

    # -- structural invariants ---------------------------------------------

    @property
    def is_unimodular(self) -> bool:
        """True when every adjoint map is traceless (checked on the basis)."""
        cached = self._unimodular
        if cached is None:
            cached = all(
                self.trace_ad(basis_vector(self.dim, i)) == 0 for i in range(self.dim)
            )
            object.__setattr__(self, "_unimodular", cached)
        return cached

    def center(self) -> Subspace:
        """{x : [x, y] = 0 for all y}, via the kernel of the stacked adjoints."""
        stacked = stack([self.ad(basis_vector(self.dim, i)) for i in range(self.dim)])
        return kernel(stacked)

    def commutator_ideal(self) -> Subspace:
        """[g, g] = span of all basis brackets."""
        return Subspace.span(self.dim, list(self._table.values()))

    def bracket_subspaces(self, a: Subspace, b: Subspace) -> Subspace:
        """span{[x, y] : x in a, y in b}."""
        vectors = [self.bracket(x, y) for x in a.basis for y in b.basis]
        return Subspace.span(self.dim, vectors)

    def derived_series(self) -> list[Subspace]:
        """g >= [g,g] >= [[g,g],[g,g]] >= ..., listed until it stabilises."""
        series = [Subspace.full(self.dim)]
        while True:
            nxt = self.bracket_subspaces(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def lower_central_series(self) -> list[Subspace]:
        """g >= [g,g] >= [g,[g,g]] >= ..., listed until it stabilises."""
        full = Subspace.full(self.dim)
        series = [full]
        while True:
            nxt = self.bracket_subspaces(full, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].is_zero()

    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero()

    # -- basis changes -------------------------------------------------------

    def change_of_basis(self, s: Matrix) -> LieAlgebra:
        """The same algebra written in the basis f_j = sum_i s[i][j] e_i.

        Requires s invertible; the new table is (s^-1 [s e_i, s e_j])
        and the Jacobi identity is re-validated as a safety net.
        """
        if s.rows != self.dim or s.cols != self.dim:
            raise DimensionMismatch("change of basis matrix must be square of the algebra dimension")
        s_inv = inverse(s)
        columns = [s.column(j) for j in range(self.dim)]
        table = {
            (i, j): s_inv.apply(self.bracket(columns[i], columns[j]))
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        }
        return LieAlgebra(self.dim, table)

    def structure_table(self) -> dict[tuple[int, int], Vector]:
        """A copy of the stored (i < j, nonzero) part of the bracket table."""
        return dict(self._table)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self._table)})"
