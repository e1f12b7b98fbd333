"""Exact classification of left-invariant conformal vector fields and
Yamabe solitons on metric Lie algebras.

The public surface re-exports the main types and operations; everything
computes over `fractions.Fraction`, so results are exact and reproducible.
"""

from .algebra import LieAlgebra
from .catalog import FamilySpec, ParamSpec, family, instantiate, list_families, verification_targets
from .conformal import (
    ConformalSolutionSpace,
    VerdictReport,
    VerdictStatus,
    conformal_space,
    conformal_system,
    is_conformal_solution,
    killing_space,
    lie_derivative_metric,
    nonkilling_exists,
    verify_bounds_nonunimodular,
    verify_degenerate_restriction,
    verify_lightlike,
    verify_theorem_unimodular,
)
from .documents import Instance, instance_to_document, parse_instance, parse_instance_json
from .errors import (
    ConstraintViolated,
    Degenerate,
    DimensionMismatch,
    DocumentError,
    HypothesisNotMet,
    JacobiViolation,
    LieconfError,
    NotAConformalSolution,
    NotSymmetric,
    SingularMatrix,
    TheoremViolated,
    UnknownFamily,
)
from .exact import (
    Inertia,
    Matrix,
    Subspace,
    congruence_diagonalize,
    det,
    frac,
    inverse,
    kernel,
    rank,
    rref,
    signature,
)
from .geometry import (
    CURVATURE_CONVENTION,
    CausalCharacter,
    Connection,
    CurvatureReport,
    PseudoMetric,
    curvature,
    levi_civita,
)
from .report import build_report, render_table
from .yamabe import (
    SolitonClass,
    SolitonReport,
    check_soliton,
    classify_constant,
    soliton_from_conformal,
    soliton_solution_space,
    soliton_system,
    verify_corollary_unimodular,
)

__version__ = "0.1.0"

__all__ = [
    "CURVATURE_CONVENTION",
    "CausalCharacter",
    "ConformalSolutionSpace",
    "Connection",
    "ConstraintViolated",
    "CurvatureReport",
    "Degenerate",
    "DimensionMismatch",
    "DocumentError",
    "FamilySpec",
    "HypothesisNotMet",
    "Inertia",
    "Instance",
    "JacobiViolation",
    "LieAlgebra",
    "LieconfError",
    "Matrix",
    "NotAConformalSolution",
    "NotSymmetric",
    "ParamSpec",
    "PseudoMetric",
    "SingularMatrix",
    "SolitonClass",
    "SolitonReport",
    "Subspace",
    "TheoremViolated",
    "UnknownFamily",
    "VerdictReport",
    "VerdictStatus",
    "build_report",
    "check_soliton",
    "classify_constant",
    "conformal_space",
    "conformal_system",
    "congruence_diagonalize",
    "curvature",
    "det",
    "family",
    "frac",
    "instance_to_document",
    "instantiate",
    "inverse",
    "is_conformal_solution",
    "kernel",
    "killing_space",
    "levi_civita",
    "lie_derivative_metric",
    "list_families",
    "nonkilling_exists",
    "parse_instance",
    "parse_instance_json",
    "rank",
    "render_table",
    "rref",
    "signature",
    "soliton_from_conformal",
    "soliton_solution_space",
    "soliton_system",
    "verification_targets",
    "verify_bounds_nonunimodular",
    "verify_corollary_unimodular",
    "verify_degenerate_restriction",
    "verify_lightlike",
    "verify_theorem_unimodular",
]
