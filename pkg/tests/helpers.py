"""Shared hypothesis strategies and independent sympy oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from lieconf import Matrix
from lieconf.algebra import LieAlgebra
from lieconf.geometry import PseudoMetric
from lieconf import sampling

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(lambda f: f != 0)


@st.composite
def matrices(draw, min_dim: int = 1, max_dim: int = 4, square: bool = False):
    rows = draw(st.integers(min_dim, max_dim))
    cols = rows if square else draw(st.integers(min_dim, max_dim))
    entries = [[draw(rationals) for _ in range(cols)] for _ in range(rows)]
    return Matrix.from_rows(entries)


@st.composite
def symmetric_matrices(draw, min_dim: int = 1, max_dim: int = 4):
    n = draw(st.integers(min_dim, max_dim))
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(rationals)
    return Matrix.from_rows(a)


@st.composite
def vectors(draw, dim: int):
    return tuple(draw(rationals) for _ in range(dim))


@st.composite
def algebra_metric_pairs(draw, min_dim: int = 2, max_dim: int = 4):
    """Random valid (LieAlgebra, PseudoMetric) pairs via the seeded samplers."""
    seed = draw(st.integers(0, 2**32 - 1))
    dim = draw(st.integers(min_dim, max_dim))
    rng = random.Random(seed)
    g = sampling.random_algebra(rng, dim)
    m = sampling.random_metric(rng, dim, rng.randint(0, dim))
    return g, m


# -- sympy oracles (independent arithmetic path) --------------------------------


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)]
    )


def sympy_rank(m: Matrix) -> int:
    return to_sympy(m).rank()


def sympy_det(m: Matrix) -> Fraction:
    value = to_sympy(m).det()
    return Fraction(int(value.p), int(value.q))


def sympy_nullspace(m: Matrix) -> list[tuple[Fraction, ...]]:
    out = []
    for column in to_sympy(m).nullspace():
        out.append(tuple(Fraction(int(c.p), int(c.q)) for c in column))
    return out


def sympy_inertia(m: Matrix) -> tuple[int, int, int]:
    """Inertia via Descartes' rule on the characteristic polynomial.

    A symmetric rational matrix has only real eigenvalues, so the count of
    sign changes in the coefficient sequence of det(t I - M) is exactly the
    number of positive eigenvalues (and of p(-t) the negative ones); the
    multiplicity of the zero root is the number of trailing zero
    coefficients. Entirely independent of congruence diagonalization.
    """
    coeffs = to_sympy(m).charpoly().all_coeffs()
    degree = len(coeffs) - 1

    def sign_changes(seq) -> int:
        nonzero = [c for c in seq if c != 0]
        return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))

    positive = sign_changes(coeffs)
    negative = sign_changes([c * (-1) ** (degree - i) for i, c in enumerate(coeffs)])
    zero = next((i for i, c in enumerate(reversed(coeffs)) if c != 0), degree + 1)
    return positive, negative, zero


def brackets_oracle(g: LieAlgebra) -> list[sympy.Matrix]:
    """ad matrices of the basis vectors, rebuilt through sympy arithmetic."""
    n = g.dim
    ads = []
    for k in range(n):
        cols = []
        for j in range(n):
            cols.append([sympy.Rational(c) for c in g.bracket_basis(k, j)])
        ads.append(sympy.Matrix(cols).T)
    return ads


def sympy_conformal_basis(g: LieAlgebra, m: PseudoMetric) -> list[tuple[Fraction, ...]]:
    """The conformal solution space recomputed along a different route.

    Uses the operator identity L_X g = -(Ad_X^T G + G Ad_X) built from
    sympy matrix products instead of per-entry inner products, then takes
    sympy's nullspace.
    """
    n = g.dim
    gram = to_sympy(m.gram)
    ads = brackets_oracle(g)
    forms = [-(ad.T * gram + gram * ad) for ad in ads]
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [forms[k][i, j] for k in range(n)]
            row.append(-2 * gram[i, j])
            rows.append(row)
    system = sympy.Matrix(rows)
    return [
        tuple(Fraction(int(c.p), int(c.q)) for c in column)
        for column in system.nullspace()
    ]


# -- acceptance reporting --------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: str, ok: bool, detail: str) -> bool:
    """Log one pass/fail line for an acceptance criterion; echoed at exit."""
    line = f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok
