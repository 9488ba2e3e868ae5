"""Quantum 2-designs, mutual information bounds and optimizers for
accessible information and informational power."""

__version__ = "0.1.0"

from .core import (
    DensityOperator,
    Effect,
    Ensemble,
    JointDistribution,
    Povm,
    QuantumValidationError,
    ToleranceConfig,
    average_state,
    born_statistics,
    distorted_ensemble,
    override_tolerances,
    symmetric_projector,
    tolerances,
)
from .designs import (
    MixedStateSet,
    WeightedStateSet,
    as_ensemble,
    as_povm,
    builtin_mub,
    builtin_sic,
    check_design,
    depolarize,
    frame_potential,
    ququart_witness_basis,
    qutrit_sic_povm,
    validate_generalized_mub,
    validate_generalized_sic,
    validate_mub,
    validate_sic,
    weyl_heisenberg_orbit,
)
from .info import (
    accinfo_upper_bound,
    bound_set,
    entropy,
    gen_mub_bound,
    gen_sic_bound,
    infopower_upper_bound,
    mutual_information,
    pg_mub_value,
    pg_sic_value,
    pretty_good_ensemble,
    pretty_good_povm,
    scrooge_bounds,
)
from .optimize import (
    OptimizationResult,
    OptimizerConfig,
    gradient_check,
    infopower_via_duality,
    maximize_accessible_info,
    maximize_informational_power,
)
