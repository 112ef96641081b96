"""Exact conjugation-curvature diagnostics for finitely generated groups.

The library enumerates balls of Cayley graphs for a handful of concrete
group families, computes the conjugation curvature

    kappa(x) = (1/|S|) * sum_{s in S} (|x| - |s x s^-1|)

in exact rational arithmetic, and certifies the identities and bounds that
follow from it: annulus cancellation, exit bounds, stable-norm brackets,
flatness of conjugation-closed generating sets, and growth consequences of
negative curvature.
"""

from .asymptotics import (
    ChainInstance,
    GrowthReport,
    NegativeGrowthReport,
    StableNormReport,
    growth_series,
    stable_norm,
    verify_negative_curvature_growth,
)
from .balls import (
    DEFAULT_MAX_ELEMENTS,
    DEFAULT_TARGETED_LIMIT,
    MAX_ELEMENTS_ENV,
    BallTable,
    KernelSpec,
    enumerate_ball,
    norm,
    norm_targeted,
    restrict_to_kernel,
)
from .config import (
    SHORTHANDS,
    build_spec,
    group_from_config,
    load_genset,
    load_kernel,
    parse_element,
    z2xdinf_spec,
)
from .conjugacy import (
    BoundaryProfile,
    BoundaryRow,
    ExitRow,
    ExitsReport,
    OrbitResult,
    ReduceResult,
    conjugacy_graph_boundary,
    exiting_time,
    exits_per_sphere,
    orbit,
    reduce_conjugate,
)
from .curvature import (
    AnnulusReport,
    CensusRow,
    CurvatureCensus,
    annulus_sum,
    census,
    delta,
    kappa,
    kappa_bar,
    pair_cancellation_violations,
)
from .errors import (
    EXIT_CONFIG,
    EXIT_INVARIANT,
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_RESOURCE,
    ConfigError,
    FamilyMismatchError,
    GroupCurvError,
    HomomorphismError,
    InvalidGeneratingSetError,
    InvariantError,
    OutOfBallError,
    PreconditionError,
    ResourceLimitError,
    UnreachableElementError,
)
from .gensets import (
    ClosureResult,
    FlatnessReport,
    conjugation_closure,
    dinf_extension_genset,
    verify_flat,
)
from .groups import (
    DirectProductGroup,
    Element,
    FiniteByDihedralGroup,
    FiniteTableGroup,
    FreeAbelianGroup,
    FreeGroup,
    GeneratingSet,
    Group,
    GroupSpec,
    HeisenbergGroup,
    InfiniteDihedralGroup,
    IntegerMatrixGroup,
    commutator,
    conjugate,
)
from .reporting import FigureSpec, Report, Table, emit

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # groups
    "Group", "GroupSpec", "GeneratingSet", "Element",
    "FreeAbelianGroup", "FreeGroup", "HeisenbergGroup", "InfiniteDihedralGroup",
    "FiniteTableGroup", "DirectProductGroup", "FiniteByDihedralGroup",
    "IntegerMatrixGroup", "conjugate", "commutator",
    # balls
    "BallTable", "KernelSpec", "enumerate_ball", "norm", "norm_targeted",
    "DEFAULT_MAX_ELEMENTS", "DEFAULT_TARGETED_LIMIT", "MAX_ELEMENTS_ENV",
    "restrict_to_kernel",
    # curvature
    "delta", "kappa", "kappa_bar", "census", "annulus_sum",
    "pair_cancellation_violations", "CensusRow", "CurvatureCensus", "AnnulusReport",
    # conjugacy
    "orbit", "exiting_time", "exits_per_sphere", "reduce_conjugate",
    "conjugacy_graph_boundary", "OrbitResult", "ExitRow", "ExitsReport",
    "ReduceResult", "BoundaryRow", "BoundaryProfile",
    # asymptotics
    "stable_norm", "growth_series", "verify_negative_curvature_growth",
    "StableNormReport", "GrowthReport", "ChainInstance", "NegativeGrowthReport",
    # gensets
    "conjugation_closure", "dinf_extension_genset", "verify_flat",
    "ClosureResult", "FlatnessReport",
    # config
    "SHORTHANDS", "build_spec", "group_from_config", "parse_element",
    "load_genset", "load_kernel", "z2xdinf_spec",
    # reporting
    "Report", "Table", "FigureSpec", "emit",
    # errors
    "EXIT_OK", "EXIT_CONFIG", "EXIT_PRECONDITION", "EXIT_RESOURCE",
    "EXIT_INVARIANT",
    "GroupCurvError", "ConfigError", "InvalidGeneratingSetError",
    "PreconditionError", "FamilyMismatchError", "OutOfBallError",
    "UnreachableElementError", "ResourceLimitError", "InvariantError",
    "HomomorphismError",
]
