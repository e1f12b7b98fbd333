"""Left-invariant Yamabe solitons built from conformal solutions.

A pair (X, lambda) is a Yamabe soliton for the metric when

    (R - lambda) g = (1/2) L_X g,

with R the (constant) scalar curvature. Comparing with the conformal
equation L_X g = 2 rho g shows every conformal solution yields exactly
one soliton constant, lambda = R - rho, and the soliton is trivial
(X Killing) precisely when lambda = R.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .algebra import LieAlgebra
from .conformal import (
    VerdictReport,
    VerdictStatus,
    is_conformal_solution,
    lie_derivative_metric,
)
from .errors import DimensionMismatch, NotAConformalSolution
from .exact import Matrix, Subspace, Vector, basis_vector, frac, kernel, vector
from .geometry import PseudoMetric, curvature


class SolitonClass(Enum):
    """Sign class of the soliton constant."""

    SHRINKING = "shrinking"  # lambda > 0
    STEADY = "steady"  # lambda = 0
    EXPANDING = "expanding"  # lambda < 0


def classify_constant(lam: Fraction) -> SolitonClass:
    if lam > 0:
        return SolitonClass.SHRINKING
    if lam < 0:
        return SolitonClass.EXPANDING
    return SolitonClass.STEADY


@dataclass(frozen=True)
class SolitonReport:
    """One soliton: the field, its conformal factor, and the constant."""

    field: Vector
    rho: Fraction
    constant: Fraction  # the soliton constant lambda
    scalar: Fraction  # scalar curvature of the metric
    kind: SolitonClass
    trivial: bool  # trivial iff the field is Killing iff constant == scalar


def check_soliton(
    g: LieAlgebra,
    m: PseudoMetric,
    x: Sequence[Fraction | int | str],
    lam: Fraction | int | str,
) -> bool:
    """Exact residual check of (R - lambda) g = (1/2) L_x g."""
    lam = frac(lam)
    scalar = curvature(g, m).scalar
    lhs = m.gram.scale(scalar - lam)
    rhs = lie_derivative_metric(g, m, x).scale(Fraction(1, 2))
    return (lhs - rhs).is_zero()


def soliton_from_conformal(
    g: LieAlgebra,
    m: PseudoMetric,
    x: Sequence[Fraction | int | str],
    rho: Fraction | int | str,
) -> SolitonReport:
    """The unique soliton carried by a conformal solution (x, rho).

    Raises NotAConformalSolution when the pair fails the conformal
    equation, so reports are only ever built on verified solutions.
    """
    rho = frac(rho)
    xv = vector(x)
    if not is_conformal_solution(g, m, xv, rho):
        raise NotAConformalSolution(
            f"L_x g != 2 rho g for x = {xv} with rho = {rho}"
        )
    scalar = curvature(g, m).scalar
    lam = scalar - rho
    return SolitonReport(
        field=xv,
        rho=rho,
        constant=lam,
        scalar=scalar,
        kind=classify_constant(lam),
        trivial=rho == 0,
    )


def soliton_system(g: LieAlgebra, m: PseudoMetric) -> Matrix:
    """The soliton equation as a linear system in (x, mu), mu = lambda - R.

    Writing lambda = R - rho turns the soliton equation into
    (L_x g)(e_i, e_j) + 2 mu g_ij = 0 with mu = -rho. This assembles that
    system directly from Lie derivatives of the basis, giving a route to
    the soliton space that does not share rows with the conformal solver.
    """
    if g.dim != m.dim:
        raise DimensionMismatch("algebra and metric dimensions differ")
    n = g.dim
    derivatives = [lie_derivative_metric(g, m, basis_vector(n, k)) for k in range(n)]
    rows = []
    for i in range(n):
        for j in range(i, n):
            row = [derivatives[k].at(i, j) for k in range(n)]
            row.append(2 * m.gram.at(i, j))
            rows.append(row)
    return Matrix.from_rows(rows)


def soliton_solution_space(g: LieAlgebra, m: PseudoMetric) -> Subspace:
    """All (x, mu) soliton pairs, mu = lambda - R, as a canonical subspace."""
    return kernel(soliton_system(g, m))


def verify_corollary_unimodular(g: LieAlgebra, m: PseudoMetric) -> VerdictReport:
    """On a unimodular algebra every soliton must be trivial (lambda = R).

    Solves the soliton system independently of the conformal route and
    requires its mu-projection to vanish.
    """
    check = "unimodular-solitons-trivial"
    if not g.is_unimodular:
        return VerdictReport(check, VerdictStatus.HYPOTHESIS_NOT_MET, "algebra is not unimodular")
    space = soliton_solution_space(g, m)
    offenders = [b for b in space.basis if b[g.dim] != 0]
    if offenders:
        return VerdictReport(
            check,
            VerdictStatus.VIOLATED,
            "soliton with lambda != R on a unimodular algebra",
            offenders[0],
        )
    return VerdictReport(
        check,
        VerdictStatus.PASSED,
        f"soliton space has dimension {space.dim} with lambda = R throughout",
    )
