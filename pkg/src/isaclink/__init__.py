"""Unit-disciplined link-budget engine for a monostatic dual-function
radar-communication base station: SNR equations, the slope-2 operating
line, coupling losses, range planning and detection requirements.
"""

from .config import PRESETS, ParseError, RunConfig, build_config, parse_config
from .coupling import (
    CouplingState,
    SnrPoint,
    apply_coupling,
    loss_factors,
    loss_pair_db,
    loss_pair_linear,
    split_powers,
)
from .detection import (
    DetectionSpec,
    marcum_q1,
    processing_gain,
    required_snr_albersheim,
    required_snr_exact,
)
from .linkbudget import (
    Scenario,
    SystemParams,
    comm_snr,
    radar_snr,
    solve_comm_range,
    solve_radar_range,
)
from .rangeplan import (
    RangePlan,
    TargetSnrs,
    comm_snr_at_ratio,
    delta_beta,
    delta_db,
    plan_ranges,
    snr_from_spectral_efficiency,
    spectral_efficiency_from_snr,
)
from .report import ReproReport, ReproRow, reproduce, run_sweep
from .sop import SopLine, n_tilde, nu_constant, sop_intercept, sop_radar_snr
from .units import (
    SPEED_OF_LIGHT,
    Decibel,
    DomainError,
    LinearRatio,
    NoisePsd,
    PowerDbm,
    PowerWatts,
    db_to_lin,
    dbm_to_watts,
    lin_to_db,
    watts_to_dbm,
)

__version__ = "0.1.0"
