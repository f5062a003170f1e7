"""opineq: a numerical workbench for operator inequalities.

Verifies and stress-tests mixed Schwarz inequalities and numerical
radius bounds on finite-dimensional complex matrices, with seeded
instance generators certifying the hypotheses and a campaign harness
producing reproducible machine-readable reports.
"""

from .catalog import (
    InequalityResult,
    InequalitySpec,
    evaluate,
    get_spec,
    list_specs,
    spec_ids,
    sup_search,
)
from .errors import (
    BadDimension,
    BadRange,
    ConfigInvalid,
    DimensionMismatch,
    HypothesisViolated,
    NoConvergence,
    NotHermitian,
    NotInvertible,
    NotPSD,
    OpineqError,
    Overflow,
    ParamOutOfRange,
    UnknownSpec,
    VersionMismatch,
)
from .generators import (
    InstanceBundle,
    build_instance,
    ginibre,
    intertwined_operator,
    lin_dragomir_instance,
    make_A_with_moduli,
    make_rng,
    multi_operator_instance,
    random_psd,
    random_unit_vector,
    reid_instance,
    split_seed,
    theorem1_instance,
)
from .harness import CampaignConfig, CampaignReport, replay, run_campaign
from .linalg import (
    CartesianParts,
    FunctionPair,
    HermitianEigen,
    PolarParts,
    absolute_value,
    adjoint,
    apply_function,
    cartesian,
    frobenius_norm,
    general_eigenvalues,
    hermitian_eigen,
    inner,
    load_matrix,
    matrix_from_dict,
    matrix_to_dict,
    polar,
    power_split,
    save_matrix,
)
from .radii import (
    RadiusEstimate,
    aluthge,
    numerical_radius,
    numerical_radius_grid_oracle,
    operator_norm,
    spectral_radius,
    spectral_radius_gelfand,
)

__version__ = "0.1.0"
