"""Left-invariant conformal vector fields and the theorem verifiers.

A left-invariant field X on a metric Lie group is conformal exactly when
its Lie derivative of the metric is a constant multiple of the metric:

    (L_X g)(e_i, e_j) = -<[X, e_i], e_j> - <e_i, [X, e_j]> = 2 rho g_ij.

Both sides are constant bilinear forms, so the condition is a finite
linear system in the coordinates of X together with the conformal factor
rho. This module solves that system exactly, splits off the Killing part
(rho = 0), and verifies the structural statements that hold for the
resulting solution spaces: unimodular algebras admit only Killing
solutions, a non-Killing solution forces dimension bounds on the center
and the commutator ideal, non-Killing solutions are lightlike, and the
metric degenerates on the commutator ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .algebra import LieAlgebra
from .errors import DimensionMismatch
from .exact import (
    Matrix,
    Subspace,
    Vector,
    ZERO,
    basis_vector,
    congruence_diagonalize,
    frac,
    kernel,
    vector,
)
from .geometry import PseudoMetric


def lie_derivative_metric(
    g: LieAlgebra, m: PseudoMetric, x: Sequence[Fraction | int | str]
) -> Matrix:
    """(L_x g) as an exact symmetric matrix in the distinguished basis."""
    if g.dim != m.dim:
        raise DimensionMismatch("algebra and metric dimensions differ")
    xv = vector(x)
    if len(xv) != g.dim:
        raise DimensionMismatch("field coordinates must match the algebra dimension")
    n = g.dim
    basis = [basis_vector(n, i) for i in range(n)]
    brackets = [g.bracket(xv, basis[i]) for i in range(n)]
    rows = [
        [-m.inner(brackets[i], basis[j]) - m.inner(basis[i], brackets[j]) for j in range(n)]
        for i in range(n)
    ]
    return Matrix.from_rows(rows)


def conformal_system(g: LieAlgebra, m: PseudoMetric) -> Matrix:
    """The linear system whose kernel is the conformal solution space.

    Unknowns are (x_1, ..., x_n, rho); one row per unordered basis pair
    (i, j) with i <= j encodes (L_X g)(e_i, e_j) - 2 rho g_ij = 0.
    """
    if g.dim != m.dim:
        raise DimensionMismatch("algebra and metric dimensions differ")
    n = g.dim
    basis = [basis_vector(n, i) for i in range(n)]
    # column k < n: contribution of x_k, i.e. the bracket [e_k, .] terms
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [
                -m.inner(g.bracket_basis(k, i), basis[j])
                - m.inner(basis[i], g.bracket_basis(k, j))
                for k in range(n)
            ]
            row.append(-2 * m.gram.at(i, j))
            rows.append(row)
    return Matrix.from_rows(rows)


@dataclass(frozen=True)
class ConformalSolutionSpace:
    """All (x, rho) pairs solving the conformal equation, as one subspace.

    The space lives in QQ^(n+1): the first n coordinates are the field,
    the last is the conformal factor. The basis is canonical, so equal
    inputs give identical spaces.
    """

    algebra_dim: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def solutions(self) -> Iterator[tuple[Vector, Fraction]]:
        """The canonical basis, split into (field, factor) pairs."""
        for b in self.space.basis:
            yield b[: self.algebra_dim], b[self.algebra_dim]

    def contains(self, x: Sequence[Fraction | int | str], rho: Fraction | int | str) -> bool:
        return self.space.contains(vector(x) + (frac(rho),))


def conformal_space(g: LieAlgebra, m: PseudoMetric) -> ConformalSolutionSpace:
    """Solve the conformal equation jointly in (x, rho)."""
    return ConformalSolutionSpace(g.dim, kernel(conformal_system(g, m)))


def is_conformal_solution(
    g: LieAlgebra,
    m: PseudoMetric,
    x: Sequence[Fraction | int | str],
    rho: Fraction | int | str,
) -> bool:
    """Residual check of L_x g = 2 rho g, independent of the solver."""
    return (lie_derivative_metric(g, m, x) - m.gram.scale(2 * frac(rho))).is_zero()


def killing_space(c: ConformalSolutionSpace) -> Subspace:
    """The rho = 0 slice of the solution space, projected to the algebra."""
    n = c.algebra_dim
    if c.space.is_zero():
        return Subspace.zero(n)
    rho_row = Matrix.from_rows([[b[n] for b in c.space.basis]])
    coeffs = kernel(rho_row)
    fields = [
        tuple(
            sum((w[s] * c.space.basis[s][k] for s in range(c.space.dim)), start=ZERO)
            for k in range(n)
        )
        for w in coeffs.basis
    ]
    return Subspace.span(n, fields)


def nonkilling_exists(c: ConformalSolutionSpace) -> bool:
    """Whether some solution has rho != 0 (a structural check, no sampling)."""
    return any(b[c.algebra_dim] != 0 for b in c.space.basis)


# -- verifiers ----------------------------------------------------------------


class VerdictStatus(Enum):
    PASSED = "pass"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    VIOLATED = "violated"


@dataclass(frozen=True)
class VerdictReport:
    """Outcome of one verifier on one instance.

    HYPOTHESIS_NOT_MET means the instance is outside the statement's
    hypothesis and nothing was asserted; VIOLATED means a checked
    instance contradicts the statement and carries a counterexample.
    """

    check: str
    status: VerdictStatus
    detail: str
    counterexample: Vector | None = None

    @property
    def passed(self) -> bool:
        return self.status is VerdictStatus.PASSED


def verify_theorem_unimodular(g: LieAlgebra, m: PseudoMetric) -> VerdictReport:
    """On a unimodular algebra every conformal solution must be Killing.

    Two independent routes are checked: the solved space must have a zero
    rho-projection, and every basis solution must satisfy the trace
    identity n * rho = -tr(ad_x) with a traceless adjoint. The same is
    re-checked after an exact congruence change to an orthogonal basis.
    """
    check = "unimodular-conformal-is-killing"
    if not g.is_unimodular:
        return VerdictReport(check, VerdictStatus.HYPOTHESIS_NOT_MET, "algebra is not unimodular")
    routes = []
    diag, s = congruence_diagonalize(m.gram)
    for tag, algebra, metric in (
        ("given basis", g, m),
        ("orthogonal basis", g.change_of_basis(s), m.transform(s)),
    ):
        c = conformal_space(algebra, metric)
        if nonkilling_exists(c):
            witness = next(b for b in c.space.basis if b[algebra.dim] != 0)
            return VerdictReport(
                check,
                VerdictStatus.VIOLATED,
                f"non-Killing solution found in the {tag}",
                witness,
            )
        for x, rho in c.solutions():
            trace = algebra.trace_ad(x)
            if algebra.dim * rho != -trace or trace != 0:
                return VerdictReport(
                    check,
                    VerdictStatus.VIOLATED,
                    f"trace identity fails in the {tag}",
                    x + (rho,),
                )
        routes.append(f"{tag}: dim {c.dim} all Killing")
    return VerdictReport(check, VerdictStatus.PASSED, "; ".join(routes))


def verify_bounds_nonunimodular(g: LieAlgebra, m: PseudoMetric) -> VerdictReport:
    """A non-Killing solution bounds the center and the commutator ideal.

    dim center <= min(p, q) and dim [g, g] >= n - min(p, q).
    """
    check = "nonkilling-dimension-bounds"
    c = conformal_space(g, m)
    if not nonkilling_exists(c):
        return VerdictReport(
            check, VerdictStatus.HYPOTHESIS_NOT_MET, "no non-Killing conformal solution"
        )
    p, q = m.signature
    bound = min(p, q)
    center_dim = g.center().dim
    commutator_dim = g.commutator_ideal().dim
    if center_dim > bound:
        return VerdictReport(
            check,
            VerdictStatus.VIOLATED,
            f"center dimension {center_dim} exceeds min(p, q) = {bound}",
        )
    if commutator_dim < g.dim - bound:
        return VerdictReport(
            check,
            VerdictStatus.VIOLATED,
            f"commutator ideal dimension {commutator_dim} is below n - min(p, q) = {g.dim - bound}",
        )
    return VerdictReport(
        check,
        VerdictStatus.PASSED,
        f"dim center = {center_dim} <= {bound}, dim [g, g] = {commutator_dim} >= {g.dim - bound}",
    )


def verify_lightlike(
    g: LieAlgebra,
    m: PseudoMetric,
    space: ConformalSolutionSpace | None = None,
    samples: int = 50,
    seed: int = 0,
) -> VerdictReport:
    """Every sampled non-Killing solution must be a lightlike field.

    Draws deterministic pseudo-random rational combinations of the solved
    basis and checks <x, x> = 0 exactly whenever the combined rho is
    nonzero. Passes vacuously when no sampled combination has rho != 0.
    """
    check = "nonkilling-solutions-lightlike"
    c = conformal_space(g, m) if space is None else space
    if c.space.is_zero():
        return VerdictReport(check, VerdictStatus.PASSED, "solution space is zero; vacuous")
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        coeffs = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(c.space.dim)
        ]
        combined = [ZERO] * (c.algebra_dim + 1)
        for w, b in zip(coeffs, c.space.basis):
            for k in range(c.algebra_dim + 1):
                combined[k] += w * b[k]
        x, rho = tuple(combined[: c.algebra_dim]), combined[c.algebra_dim]
        if rho == 0:
            continue
        checked += 1
        if m.inner(x, x) != 0:
            return VerdictReport(
                check,
                VerdictStatus.VIOLATED,
                "sampled non-Killing solution is not lightlike",
                tuple(combined),
            )
    detail = (
        f"{checked} of {samples} sampled combinations had rho != 0; all lightlike"
        if checked
        else f"no sampled combination had rho != 0 in {samples} draws; vacuous"
    )
    return VerdictReport(check, VerdictStatus.PASSED, detail)


def verify_degenerate_restriction(g: LieAlgebra, m: PseudoMetric) -> VerdictReport:
    """With a non-Killing solution present, g degenerates on [g, g]."""
    check = "metric-degenerate-on-commutator"
    if g.is_unimodular:
        return VerdictReport(check, VerdictStatus.HYPOTHESIS_NOT_MET, "algebra is unimodular")
    c = conformal_space(g, m)
    if not nonkilling_exists(c):
        return VerdictReport(
            check, VerdictStatus.HYPOTHESIS_NOT_MET, "no non-Killing conformal solution"
        )
    ideal = g.commutator_ideal()
    if not m.restriction_degenerate(ideal):
        return VerdictReport(
            check,
            VerdictStatus.VIOLATED,
            f"metric restricted to the {ideal.dim}-dimensional commutator ideal is non-degenerate",
        )
    return VerdictReport(
        check,
        VerdictStatus.PASSED,
        f"restriction to the {ideal.dim}-dimensional commutator ideal is degenerate",
    )
