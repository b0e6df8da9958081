"""gravdeco: gravitational time-dilation decoherence vs thermal/collisional
decoherence for spherical crystals in center-of-mass superposition."""

from .channels import (
    ChannelRates,
    EmissionDiagnostics,
    EmissionModel,
    gamma_coll,
    gamma_thermal,
    lambda_abs,
    lambda_coll,
    lambda_em,
    lambda_scatt,
)
from .combine import (
    ChannelSummary,
    DecoherenceSummary,
    coherence_factor,
    evaluate,
    tau_tc,
)
from .errors import (
    ConvergenceError,
    DomainError,
    GravdecoError,
    ResolutionError,
    SingularityError,
)
from .gravitational import (
    model_crossover,
    tau_g_debye,
    tau_g_einstein,
    tau_g_general,
)
from .heat_capacity import HeatCapacityModel, heat_capacity
from .matter import (
    Catalog,
    Environment,
    ExperimentPreset,
    GasMixture,
    GasSpecies,
    Material,
    SystemSpec,
    builtin_catalog,
    load_catalog_file,
    molecule_count,
)
from .quadrature import QuadratureSpec, integrate
from .quantities import CONST, ComplexPermittivity, clausius_mossotti, pressure_to_si
from .scan import GridSpec, ScanResult, refine_contour, sweep, table_one
from .verify import oracle_report

__version__ = "0.1.0"

__all__ = [
    "CONST",
    "Catalog",
    "ChannelRates",
    "ChannelSummary",
    "ComplexPermittivity",
    "ConvergenceError",
    "DecoherenceSummary",
    "DomainError",
    "EmissionDiagnostics",
    "EmissionModel",
    "Environment",
    "ExperimentPreset",
    "GasMixture",
    "GasSpecies",
    "GravdecoError",
    "GridSpec",
    "HeatCapacityModel",
    "Material",
    "QuadratureSpec",
    "ResolutionError",
    "ScanResult",
    "SingularityError",
    "SystemSpec",
    "builtin_catalog",
    "clausius_mossotti",
    "coherence_factor",
    "evaluate",
    "gamma_coll",
    "gamma_thermal",
    "heat_capacity",
    "integrate",
    "lambda_abs",
    "lambda_coll",
    "lambda_em",
    "lambda_scatt",
    "load_catalog_file",
    "model_crossover",
    "molecule_count",
    "oracle_report",
    "pressure_to_si",
    "refine_contour",
    "sweep",
    "table_one",
    "tau_g_debye",
    "tau_g_einstein",
    "tau_g_general",
    "tau_tc",
]
