"""redeos: reduced real-gas equations of state for combustion product gases.

Noble-Abel and first-order virial models (the latter also with a linearly
temperature-dependent specific heat), their two-point closed-bomb
calibration, mixture extensions in temperature and pressure equilibrium,
entropy and convexity machinery, and finite-difference verification
oracles.
"""

__version__ = "0.1.0"

from .constants import P_REF, R_UNIVERSAL, T_REF, molar_mass, specific_gas_constant, universal_constants
from .errors import (
    BracketError,
    ConvergenceError,
    DegenerateDataError,
    DomainError,
    EosError,
    ModelMismatchError,
    NumericalError,
    ParseError,
    RankDeficiencyError,
    ValidationError,
)
from .types import (
    ClosedBombPoint,
    ConvexityReport,
    DEFAULT_ENTROPY_REF,
    EntropyReference,
    FrozennessReport,
    GasParams,
    InertGasParams,
    InertRunRecord,
    MixtureSpec,
    Model,
    ThermoState,
    convexity_signs_ok,
    require_model,
)
from .noble_abel import (
    na_convexity,
    na_cp,
    na_derived,
    na_energy,
    na_enthalpy,
    na_entropy,
    na_entropy_vt,
    na_gamma,
    na_pressure_ve,
    na_pressure_vt,
    na_sound_speed,
    na_temperature,
    na_volume,
)
from .virial import (
    vo1_convexity,
    vo1_cp,
    vo1_density,
    vo1_derived,
    vo1_energy,
    vo1_entropy,
    vo1_entropy_dP,
    vo1_gamma,
    vo1_pressure,
    vo1_pressure_from_energy,
    vo1_sound_speed,
    vo1_temperature,
)
from .virial_cvt import (
    cvt_cv,
    cvt_density,
    cvt_effective_energy,
    cvt_energy,
    cvt_inert_mixture_state,
    cvt_pressure,
    cvt_pressure_from_energy,
    cvt_temperature,
)
from .calibration import (
    ClosedBombPrediction,
    calibrate_cvt,
    calibrate_na,
    calibrate_vo1,
    dilution_flame_temperature,
    frozenness_check,
    predict_closed_bomb,
)
from .mixture import (
    MnaCoefficients,
    Mvo1Solution,
    caloric_coefficients,
    mixture_flame_temperature,
    mna_coefficients,
    mna_pressure,
    mna_pressure_vt,
    mna_sound_speed,
    mvo1_pressure,
    mvo1_pressure_from_energy,
    mvo1_sound_speed,
)
from .numerics import (
    LsqFit,
    OracleSoundSpeed,
    RootResult,
    convexity_audit_fd,
    fd_derivative,
    fd_partial,
    lsq_fit_3,
    solve_monotone,
    sound_speed_fd_oracle,
)
from .state import state_from_P_T, state_from_rho_T, state_from_rho_e
from .materials import (
    INERT_GASES,
    MaterialDatabase,
    builtin_database,
    load_closed_bomb_csv,
    load_inert_runs_csv,
    load_material_db,
    save_material_db,
)
