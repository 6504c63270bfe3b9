"""diracsplit: verification of the two-system decomposition of free
massive Dirac plane waves, with Weyl and Majorana subsolution checks.

Structural identities run over exact Gaussian-rational arithmetic;
Lorentz-transformation checks run over floats.  The ``verify`` console
command drives the full suite; the same machinery is importable here.
"""

from .errors import (
    BackendMismatch,
    ChargeConjugationNeedsBispinor,
    DiracSplitError,
    ExpDiverged,
    IntertwinerInvalid,
    NotASolution,
    NotMajorana,
    OffShell,
    ProjectorAlgebraViolation,
    SpecialFrameRequiresMass,
    SplitRequiresMass,
    SplitRequiresSpinorRep,
    WeylRequiresMassless,
)
from .fields import (
    FourMomentum,
    PlaneWaveField,
    PlaneWaveTerm,
    charge_conjugate,
    combine_halves,
    conjugate,
    dirac_matrix,
    dirac_op,
    dirac_residual,
    field_of,
    lower_half,
    momentum_op,
    u_spinor,
    upper_half,
    weyl_spinor,
)
from .gamma import (
    GammaRep,
    build_rep,
    clifford_residual,
    conjugation_matrix,
    gamma5_residuals,
    intertwiner,
    intertwiner_pair,
    sigma,
)
from .lorentz import (
    LorentzParams,
    VectorTransform,
    covariance_check,
    pconditions_residual,
    pi_commutation_check,
    reduced_dirac_residual,
    special_frame,
    spinor_transform,
    transform_field,
    vector_transform,
)
from .matrices import Matrix
from .projectors import ProjectorSet, build_projectors, corson_complement, v_swap_check
from .reports import CheckRecord, Report, ResidualEntry, ResidualReport, format_human
from .scalars import EXACT, FLOAT, GaussianRational
from .subsolutions import (
    SplitResult,
    constituent_residuals,
    identity_residuals,
    majorana_build,
    majorana_residuals,
    recombination_residuals,
    sigma_momentum_op,
    split,
    transported_constituent_residuals,
    weyl_residuals,
)
from .suites import DEFAULT_SEED, RunConfig, run

__version__ = "0.1.0"

__all__ = [
    "BackendMismatch",
    "ChargeConjugationNeedsBispinor",
    "CheckRecord",
    "DEFAULT_SEED",
    "DiracSplitError",
    "EXACT",
    "ExpDiverged",
    "FLOAT",
    "FourMomentum",
    "GammaRep",
    "GaussianRational",
    "IntertwinerInvalid",
    "LorentzParams",
    "Matrix",
    "NotASolution",
    "NotMajorana",
    "OffShell",
    "PlaneWaveField",
    "PlaneWaveTerm",
    "ProjectorAlgebraViolation",
    "ProjectorSet",
    "Report",
    "ResidualEntry",
    "ResidualReport",
    "RunConfig",
    "SpecialFrameRequiresMass",
    "SplitRequiresMass",
    "SplitRequiresSpinorRep",
    "SplitResult",
    "VectorTransform",
    "WeylRequiresMassless",
    "build_projectors",
    "build_rep",
    "charge_conjugate",
    "clifford_residual",
    "combine_halves",
    "conjugate",
    "conjugation_matrix",
    "constituent_residuals",
    "corson_complement",
    "covariance_check",
    "dirac_matrix",
    "dirac_op",
    "dirac_residual",
    "field_of",
    "format_human",
    "gamma5_residuals",
    "identity_residuals",
    "intertwiner",
    "intertwiner_pair",
    "lower_half",
    "majorana_build",
    "majorana_residuals",
    "momentum_op",
    "pconditions_residual",
    "pi_commutation_check",
    "recombination_residuals",
    "reduced_dirac_residual",
    "run",
    "sigma",
    "sigma_momentum_op",
    "special_frame",
    "spinor_transform",
    "split",
    "transform_field",
    "transported_constituent_residuals",
    "u_spinor",
    "upper_half",
    "v_swap_check",
    "vector_transform",
    "weyl_residuals",
    "weyl_spinor",
]
