"""Wu pseudometrics of Reinhardt indicatrices.

The pipeline: unit indicatrices of holomorphically invariant pseudometrics
(closed forms on elementary Reinhardt domains, certificate clouds for the
counterexample domains) are pushed through the squared-modulus map to
moduli space, where the minimal-volume enclosing diagonal ellipsoid is a
minimal-volume enclosing simplex, solved as a concave program.  The two
normalizations W-tilde and W = sqrt(m) W-tilde are returned as diagonal
Hermitian seminorms.
"""

from .busemann import (
    DegeneracyReport,
    Indicatrix,
    UnknownBoundednessError,
    UnsupportedIndicatrixError,
    absolute_directions,
    cloud_indicatrix,
    convexify,
    degeneracy,
    radial_indicatrix,
    support,
)
from .cli import eval_metric, main
from .domains import (
    DomainSpec,
    SandwichIndicatrix,
    UnsupportedBasePointError,
    elem_reinhardt,
    g2,
    gn,
    indicatrix_at,
    membership,
    metric_indicatrix,
    polydisc,
    product,
    spec_from_config,
    spec_to_config,
    synthetic,
    synthetic_rem_one,
    synthetic_rem_two,
    truncated_gn,
    truncation_intercepts,
)
from .experiments import (
    EXPERIMENTS,
    GOLDEN_CASES,
    ConfigError,
    ExperimentConfig,
    GoldenCase,
    ResultRow,
    golden_eta_hat,
    run_experiment,
)
from .geometry import (
    DiagonalHermitianForm,
    SimplexParams,
    UnboundedSimplexError,
    form_contains,
    form_to_simplex,
    psi,
    simplex_contains,
    simplex_to_form,
    simplex_volume,
)
from .metrics import (
    BranchInfo,
    MetricValue,
    MultiIndex,
    OutsideDomainError,
    UnsupportedCaseError,
    elem_reinhardt_metric,
    elem_reinhardt_metric_info,
    g2_gamma_lower,
    g2_kappa_upper_points,
    gamma_disc,
    kappa_punctured_disc,
    membership_elem_reinhardt,
    phi_r,
    product_metric,
)
from .wu import (
    ContradictionReport,
    ContradictionReportN,
    DegenerateAxisError,
    InfeasibleProgramError,
    SimplexProgram,
    SolveInfo,
    SolverError,
    WuResult,
    certify_contradiction_g2,
    certify_contradiction_gn,
    gn_constrained_optimum,
    gn_ratio_limit,
    min_vol_simplex,
    min_vol_simplex_bruteforce,
    min_vol_simplex_info,
    simplex_program,
    wu_metric,
    wu_metric_of,
    wu_product,
)

__version__ = "0.1.0"
