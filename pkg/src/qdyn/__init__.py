"""qdyn: quiver dynamics toolkit.

Positive root systems, Coxeter spectral radii and Serre-functor entropy,
entropy of endofunctors of semisimple categories, phase sets of stability
conditions with their density classification, and constructive
Kronecker-pair witnesses.
"""

__version__ = "0.1.0"

from .coxeter import (
    CoxeterData,
    EntropyLine,
    coxeter_data,
    coxeter_number,
    growth_rate_check,
    serre_entropy,
    stretch_factor_kronecker,
)
from .errors import DomainError, ParseError
from .kronecker import (
    KroneckerWitness,
    exceptional_dim_big,
    find_kronecker_pair,
    hom1_disjoint,
    verify_witness,
)
from .phases import (
    CentralCharge,
    DenseArc,
    Finite,
    KroneckerArc,
    PhaseReport,
    TwoLimitPoints,
    density_verdict,
    euclidean_limits,
    f_function,
    gap_statistic,
    kronecker_arc,
    parse_charge,
    phase_superset,
)
from .quiver import (
    GraphClass,
    Quiver,
    adjacency,
    classify_graph,
    connected_components,
    euler_form,
    euler_matrix,
    make_quiver,
    parse_quiver,
    subquiver,
)
from .roots import (
    AffineRootSystem,
    enumerate_dynkin,
    enumerate_euclidean,
    enumerate_kronecker,
    is_positive_root,
    null_root,
)
from .semisimple import (
    EntropyCurve,
    LaurentMatrix,
    LaurentPoly,
    entropy_at,
    entropy_curve,
    evaluate,
    gelfand_iterate,
    parse_laurent_matrix,
    poincare_complexity,
    spectral_curve_poly,
)

__all__ = [
    "AffineRootSystem",
    "CentralCharge",
    "CoxeterData",
    "DenseArc",
    "DomainError",
    "EntropyCurve",
    "EntropyLine",
    "Finite",
    "GraphClass",
    "KroneckerArc",
    "KroneckerWitness",
    "LaurentMatrix",
    "LaurentPoly",
    "ParseError",
    "PhaseReport",
    "Quiver",
    "TwoLimitPoints",
    "adjacency",
    "classify_graph",
    "connected_components",
    "coxeter_data",
    "coxeter_number",
    "density_verdict",
    "entropy_at",
    "entropy_curve",
    "enumerate_dynkin",
    "enumerate_euclidean",
    "enumerate_kronecker",
    "euclidean_limits",
    "euler_form",
    "euler_matrix",
    "evaluate",
    "exceptional_dim_big",
    "f_function",
    "find_kronecker_pair",
    "gap_statistic",
    "gelfand_iterate",
    "growth_rate_check",
    "hom1_disjoint",
    "is_positive_root",
    "kronecker_arc",
    "make_quiver",
    "null_root",
    "parse_charge",
    "parse_laurent_matrix",
    "parse_quiver",
    "phase_superset",
    "poincare_complexity",
    "serre_entropy",
    "spectral_curve_poly",
    "stretch_factor_kronecker",
    "subquiver",
    "verify_witness",
]
