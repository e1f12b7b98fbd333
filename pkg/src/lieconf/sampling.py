"""Seeded random generation of exact test instances.

Everything here is driven by `random.Random(seed)`, so a fixed seed gives
a fixed sequence of instances. Metrics with a prescribed signature are
produced as s.T d s with d = diag(I_p, -I_q) and s a random invertible
integer matrix, which guarantees both non-degeneracy and the signature.
Random algebras come from two Jacobi-safe constructions: a semidirect sum
of a line acting on an abelian ideal by an arbitrary matrix, and random
basis conjugations of catalog algebras.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from . import catalog
from .algebra import LieAlgebra
from .exact import Matrix, ZERO, det, vector
from .geometry import PseudoMetric


def random_fraction(rng: random.Random, numerator: int = 9, denominator: int = 4) -> Fraction:
    return Fraction(rng.randint(-numerator, numerator), rng.randint(1, denominator))


def random_vector(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(random_fraction(rng) for _ in range(n))


def random_int_matrix(rng: random.Random, n: int, bound: int = 4) -> Matrix:
    return Matrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
    )


def random_invertible(rng: random.Random, n: int, bound: int = 4) -> Matrix:
    """A random integer matrix with nonzero determinant (rejection sampled)."""
    while True:
        m = random_int_matrix(rng, n, bound)
        if det(m) != 0:
            return m


def random_metric(rng: random.Random, n: int, positive: int) -> PseudoMetric:
    """A random exact metric of signature (positive, n - positive)."""
    if not 0 <= positive <= n:
        raise ValueError(f"signature ({positive}, {n - positive}) is not achievable in dimension {n}")
    d = Matrix.diagonal([1] * positive + [-1] * (n - positive))
    s = random_invertible(rng, n)
    return PseudoMetric(s.transpose() @ d @ s)


def random_line_action_algebra(rng: random.Random, n: int) -> LieAlgebra:
    """A semidirect sum: e_n acts on the abelian span of e_1..e_{n-1}.

    [e_n, e_i] = A e_i for a random integer matrix A; every such table
    satisfies the Jacobi identity, so this samples freely.
    """
    if n < 2:
        return LieAlgebra(1, {})
    a = random_int_matrix(rng, n - 1, bound=3)
    table = {}
    for i in range(n - 1):
        coords = [-a.at(k, i) for k in range(n - 1)] + [ZERO]
        coords = vector(coords)
        table[(i, n - 1)] = coords  # [e_i, e_n] = -A e_i
    return LieAlgebra(n, table)


_CONJUGATION_POOL: tuple[tuple[str, dict], ...] = (
    ("abelian", {"n": 3}),
    ("heisenberg3", {}),
    ("so3", {}),
    ("sl2", {}),
    ("affine2", {}),
    ("nonuni3", {"alpha": 1, "beta": 1}),
    ("damekricci4", {"alpha": 2}),
    ("diagonalN", {"n": 4, "lambda1": 1, "lambda2": 1, "lambda3": 2}),
)


def random_algebra(rng: random.Random, dim: int) -> LieAlgebra:
    """A random Jacobi-valid algebra of the given dimension (2..4)."""
    candidates = [spec for spec in _CONJUGATION_POOL if catalog.instantiate(*spec)[0].dim == dim]
    if rng.random() < 0.5 or not candidates:
        base = random_line_action_algebra(rng, dim)
    else:
        base = catalog.instantiate(*rng.choice(candidates))[0]
    return base.change_of_basis(random_invertible(rng, dim))


def random_instances(
    rng: random.Random, count: int, dims: Sequence[int] = (2, 3, 4)
) -> list[tuple[str, LieAlgebra, PseudoMetric]]:
    """Labeled random (algebra, metric) pairs across the given dimensions."""
    out = []
    for index in range(count):
        n = rng.choice(list(dims))
        g = random_algebra(rng, n)
        m = random_metric(rng, n, rng.randint(0, n))
        out.append((f"random-{index}-dim{n}", g, m))
    return out
