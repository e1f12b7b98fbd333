"""Left-invariant pseudo-Riemannian metrics and their curvature.

A left-invariant metric on a Lie group is determined by one symmetric
non-degenerate bilinear form on the Lie algebra, stored here as its exact
Gram matrix in the distinguished basis. The Levi-Civita connection is
recovered algebraically from the Koszul formula

    <nabla_{e_i} e_j, e_k> = (1/2) ( <[e_i,e_j], e_k>
                                   - <[e_j,e_k], e_i>
                                   + <[e_k,e_i], e_j> ),

the only surviving terms for left-invariant fields, and curvature follows
from the convention recorded in CURVATURE_CONVENTION.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra
from .errors import Degenerate, DimensionMismatch, NotSymmetric
from .exact import (
    Inertia,
    Matrix,
    Subspace,
    Vector,
    ZERO,
    basis_vector,
    det,
    inverse,
    kernel,
    signature,
    vector,
)

#: The sign convention used throughout. The two standard conventions differ
#: by a global sign of the Riemann tensor; on the built-in calibration
#: family (damekricci4) both give the same, identically zero, scalar
#: curvature, so the unflipped form below is kept.
CURVATURE_CONVENTION = {
    "riemann": "R(x, y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_[x,y] z",
    "ricci": "ric(y, z) = trace of x -> R(x, y)z",
    "scalar": "sum over i, j of g^{ij} ric_{ij}",
    "sign_flipped": False,
}


class CausalCharacter(Enum):
    """Causal type of a vector; the zero vector counts as lightlike."""

    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


class PseudoMetric:
    """A symmetric non-degenerate bilinear form with exact entries."""

    __slots__ = ("gram", "_inertia", "_inverse")

    def __init__(self, gram: Matrix) -> None:
        if not gram.is_square():
            raise DimensionMismatch("a Gram matrix must be square")
        if not gram.is_symmetric():
            raise NotSymmetric("a metric must have a symmetric Gram matrix")
        if det(gram) == 0:
            raise Degenerate("a metric must be non-degenerate")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "_inertia", None)
        object.__setattr__(self, "_inverse", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("PseudoMetric is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int | str]]) -> PseudoMetric:
        return cls(Matrix.from_rows(rows))

    @classmethod
    def diagonal(cls, values: Sequence[Fraction | int | str]) -> PseudoMetric:
        return cls(Matrix.diagonal(values))

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def inertia(self) -> Inertia:
        cached = self._inertia
        if cached is None:
            cached = signature(self.gram)
            object.__setattr__(self, "_inertia", cached)
        return cached

    @property
    def signature(self) -> tuple[int, int]:
        """(p, q) with p positive and q negative directions; z = 0 always."""
        inertia = self.inertia
        return inertia.positive, inertia.negative

    @property
    def inverse_gram(self) -> Matrix:
        cached = self._inverse
        if cached is None:
            cached = inverse(self.gram)
            object.__setattr__(self, "_inverse", cached)
        return cached

    def inner(self, x: Sequence[Fraction | int | str], y: Sequence[Fraction | int | str]) -> Fraction:
        xv, yv = vector(x), vector(y)
        if len(xv) != self.dim or len(yv) != self.dim:
            raise DimensionMismatch("inner product arguments must match the metric dimension")
        return sum((a * b for a, b in zip(self.gram.apply(yv), xv)), start=ZERO)

    def causal_character(self, x: Sequence[Fraction | int | str]) -> CausalCharacter:
        norm = self.inner(x, x)
        if norm > 0:
            return CausalCharacter.SPACELIKE
        if norm < 0:
            return CausalCharacter.TIMELIKE
        return CausalCharacter.LIGHTLIKE

    def orthogonal_complement(self, s: Subspace) -> Subspace:
        """{v : <b, v> = 0 for every b in s}; dim is complementary, though
        the two spaces can intersect when the restriction is degenerate."""
        if s.ambient_dim != self.dim:
            raise DimensionMismatch("subspace lives in a different dimension")
        if s.is_zero():
            return Subspace.full(self.dim)
        return kernel(s.basis_matrix() @ self.gram)

    def restricted_gram(self, s: Subspace) -> Matrix:
        if s.is_zero():
            raise DimensionMismatch("the zero subspace has no restricted Gram matrix")
        b = s.basis_matrix()
        return b @ self.gram @ b.transpose()

    def restriction_degenerate(self, s: Subspace) -> bool:
        """Whether the metric restricted to s has a radical; False for s = 0."""
        if s.ambient_dim != self.dim:
            raise DimensionMismatch("subspace lives in a different dimension")
        if s.is_zero():
            return False
        return det(self.restricted_gram(s)) == 0

    def transform(self, s: Matrix) -> PseudoMetric:
        """The metric in the basis f_j = sum_i s[i][j] e_i, Gram s.T g s."""
        return PseudoMetric(s.transpose() @ self.gram @ s)

    def __repr__(self) -> str:
        p, q = self.signature
        return f"PseudoMetric(dim={self.dim}, signature=({p}, {q}))"


@dataclass(frozen=True)
class Connection:
    """The Levi-Civita table nabla_{e_i} e_j on a metric Lie algebra."""

    dim: int
    table: tuple[tuple[Vector, ...], ...]  # table[i][j] = nabla_{e_i} e_j

    def nabla_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def nabla(self, i: int, v: Sequence[Fraction | int | str]) -> Vector:
        """nabla_{e_i} v for a constant-coefficient field v."""
        coords = vector(v)
        out = [ZERO] * self.dim
        for j, c in enumerate(coords):
            if c != 0:
                for k in range(self.dim):
                    out[k] += c * self.table[i][j][k]
        return tuple(out)

    def nabla_along(self, u: Sequence[Fraction | int | str], j: int) -> Vector:
        """nabla_u e_j extended linearly in the direction u."""
        coords = vector(u)
        out = [ZERO] * self.dim
        for i, c in enumerate(coords):
            if c != 0:
                for k in range(self.dim):
                    out[k] += c * self.table[i][j][k]
        return tuple(out)


def levi_civita(g: LieAlgebra, m: PseudoMetric) -> Connection:
    """The unique torsion-free metric connection, from the Koszul formula."""
    if g.dim != m.dim:
        raise DimensionMismatch("algebra and metric dimensions differ")
    n = g.dim
    ginv = m.inverse_gram
    half = Fraction(1, 2)
    basis = [basis_vector(n, i) for i in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            # covector c_k = <nabla_{e_i} e_j, e_k>
            covector = [
                half
                * (
                    m.inner(g.bracket_basis(i, j), basis[k])
                    - m.inner(g.bracket_basis(j, k), basis[i])
                    + m.inner(g.bracket_basis(k, i), basis[j])
                )
                for k in range(n)
            ]
            row.append(ginv.apply(covector))
        table.append(tuple(row))
    return Connection(n, tuple(table))


@dataclass(frozen=True)
class CurvatureReport:
    """Riemann tensor on basis triples, Ricci form, and scalar curvature."""

    riemann: tuple[tuple[tuple[Vector, ...], ...], ...]  # riemann[i][j][k] = R(e_i, e_j) e_k
    ricci: Matrix
    scalar: Fraction
    convention: dict


def curvature(g: LieAlgebra, m: PseudoMetric, conn: Connection | None = None) -> CurvatureReport:
    """Riemann, Ricci, and scalar curvature of the metric Lie algebra."""
    if conn is None:
        conn = levi_civita(g, m)
    n = g.dim
    riemann = []
    for i in range(n):
        plane = []
        for j in range(n):
            line = []
            for k in range(n):
                value = tuple(
                    a - b - c
                    for a, b, c in zip(
                        conn.nabla(i, conn.nabla_basis(j, k)),
                        conn.nabla(j, conn.nabla_basis(i, k)),
                        conn.nabla_along(g.bracket_basis(i, j), k),
                    )
                )
                line.append(value)
            plane.append(tuple(line))
        riemann.append(tuple(plane))
    ricci_rows = [
        [
            sum((riemann[i][y][z][i] for i in range(n)), start=ZERO)
            for z in range(n)
        ]
        for y in range(n)
    ]
    ricci = Matrix.from_rows(ricci_rows)
    ginv = m.inverse_gram
    scalar = sum(
        (ginv.at(i, j) * ricci.at(i, j) for i in range(n) for j in range(n)),
        start=ZERO,
    )
    return CurvatureReport(tuple(riemann), ricci, scalar, dict(CURVATURE_CONVENTION))
