"""Simultaneous polynomial zero-finding with semilocal convergence certificates.

Three simultaneous iterations (Weierstrass, Ehrlich in two algebraically
identical forms, Nourein), initial-point certificates that guarantee
convergence with a definite order, zero-localization disks, and a priori /
a posteriori error bounds, all verified at desk scale against a
high-precision oracle.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    aposteriori_bound,
    apriori_bound_ehrlich,
    apriori_bound_nourein,
)
from .certify import (
    Certificate,
    CorollaryFamily,
    MethodParams,
    PriorWork,
    ThresholdEquation,
    bound_factors_ehrlich,
    bound_factors_nourein,
    certify,
    certify_ehrlich,
    certify_localization,
    certify_nourein,
    contraction_factor_ehrlich,
    contraction_factor_localization,
    contraction_factor_nourein,
    corollary_threshold,
    linear_threshold_peak,
    majorant_dominance,
    prior_condition,
    solve_l1_threshold,
    threshold_offset_for_slope,
)
from .corpus import CorpusInstance, builtin_corpus, load_instance
from .errors import (
    BracketFailure,
    CertificateDegenerate,
    CertificateNotSatisfied,
    DegenerateBound,
    DistinctnessViolation,
    DomainError,
    Inapplicable,
    InsufficientData,
    MatchingAmbiguous,
    NegativeDenominator,
    OracleFailure,
    PostStepCollision,
    ShiftedCollision,
    SimulrootsError,
    SingularDenominator,
)
from .localize import InclusionDisk, certifies_simple_zeros, inclusion_disks
from .oracle import (
    OrderEstimate,
    ReferenceRoots,
    estimate_order,
    reference_roots,
    true_errors,
)
from .poly import (
    MonicPolynomial,
    RootVector,
    evaluate,
    evaluate_derivative,
    polynomial_from_json,
    polynomial_to_json,
)
from .simul import (
    ApproximationVector,
    Method,
    NormParameter,
    StepQuantities,
    quality_measure,
    separations,
    step,
    step_ehrlich,
    step_ehrlich_derivative,
    step_nourein,
    step_quantities,
    step_weierstrass,
    weierstrass_corrections,
)
from .trace import IterationTrace, RunConfig, TraceRow, run_iteration
