"""Deformed Heisenberg algebras realized as deformed oscillators.

Evaluate deformation structure functions (closed form, reconstructed from
the operator functions G and H, or parameter-symmetrized), build truncated
Fock-space matrix representations that verify the defining relations, compute
energy spectra, and solve accidental-degeneracy equations for the deformation
parameter.
"""

from .dsf import (
    DeformationParams,
    FamilyId,
    FamilyTag,
    StructureFunction,
    bracket_pq,
    bracket_q,
    bracket_sym,
    phi_closed,
    phi_from_gh,
    phi_ratio_check,
)
from .errors import (
    DegenerateOperatorError,
    DomainError,
    MetricError,
    NoMetricError,
    PoleError,
    SingularRecipeError,
)
from .families import (
    CoefficientSet,
    GHPair,
    coefficients,
    general_gh,
    gh_pair,
    ratio_kernel_constancy,
    shift_power,
    verify_ratio_recursions,
)
from .fock import (
    HBAR,
    FockRep,
    ResidualReport,
    build_rep,
    verify_gh_relation,
    verify_heisenberg,
    verify_ladder,
)
from .spectra import (
    DegeneracyRoot,
    SpectrumReport,
    degeneracy_equation,
    energy,
    find_degeneracy,
    ground_state_table,
    spectrum,
)
from .symmetry import (
    MetricDiagonal,
    SymmetrizedDSF,
    find_metric,
    hermiticity_defect,
    phi_symmetrized,
    phi_symmetrized_qp,
    symmetrized_routes,
)

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "CoefficientSet",
    "DeformationParams",
    "DegenerateOperatorError",
    "DegeneracyRoot",
    "DomainError",
    "FamilyId",
    "FamilyTag",
    "FockRep",
    "GHPair",
    "MetricDiagonal",
    "MetricError",
    "NoMetricError",
    "PoleError",
    "ResidualReport",
    "SingularRecipeError",
    "SpectrumReport",
    "StructureFunction",
    "SymmetrizedDSF",
    "bracket_pq",
    "bracket_q",
    "bracket_sym",
    "build_rep",
    "coefficients",
    "degeneracy_equation",
    "energy",
    "find_degeneracy",
    "find_metric",
    "general_gh",
    "gh_pair",
    "ground_state_table",
    "hermiticity_defect",
    "phi_closed",
    "phi_from_gh",
    "phi_ratio_check",
    "phi_symmetrized",
    "phi_symmetrized_qp",
    "ratio_kernel_constancy",
    "shift_power",
    "spectrum",
    "symmetrized_routes",
    "verify_gh_relation",
    "verify_heisenberg",
    "verify_ladder",
    "verify_ratio_recursions",
]
