"""Range planning: distance ratio and distances for target SNRs.

Given a desired communication SNR (or spectral efficiency under
Gaussian signaling, R = log2(1 + rho)) and a desired radar SNR, the
distance ratio delta = d_c / d_r follows from the two closed-form range
inversions. ``delta_db`` takes that ratio directly; ``plan_ranges``
returns the full (delta, d_r, d_c) solution.

Coupling enters through ``delta_beta``, the shift of the log-domain
ratio caused by splitting power between the services:

    delta_beta = (10/4) * log10(loss_comm^2 / loss_radar)

which is identically zero for a fully coupled beam (beta = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coupling import CouplingState, loss_factors
from .linkbudget import SystemParams, comm_snr, solve_comm_range, solve_radar_range
from .units import Decibel, DomainError, LinearRatio, db_to_lin, lin_to_db

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class TargetSnrs:
    """Desired (communication, radar) SNRs in dB."""

    comm_db: float
    radar_db: float

    def __post_init__(self) -> None:
        Decibel(self.comm_db)
        Decibel(self.radar_db)


@dataclass(frozen=True)
class RangePlan:
    """A (delta, d_r, d_c) solution with d_c = delta * d_r."""

    delta: float
    d_r_m: float
    d_c_m: float

    def __post_init__(self) -> None:
        for name in ("delta", "d_r_m", "d_c_m"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")
        if abs(self.d_c_m - self.delta * self.d_r_m) > 1e-9 * self.d_c_m:
            raise DomainError("inconsistent plan: d_c_m != delta * d_r_m")


def snr_from_spectral_efficiency(r: float) -> Decibel:
    """Required SNR in dB for R bits/s/Hz: 10*log10(2^R - 1)."""
    r = float(r)
    if not (math.isfinite(r) and r > 0):
        raise DomainError(f"spectral efficiency must be finite and > 0, got {r!r}")
    try:
        rho = math.expm1(r * _LN2)  # 2^r - 1, accurate for small r too
    except OverflowError:
        raise DomainError(f"spectral efficiency too large: {r!r}") from None
    return lin_to_db(rho)


def spectral_efficiency_from_snr(rho_c: float) -> float:
    """R = log2(1 + rho_c) in bits/s/Hz for a linear SNR."""
    return math.log1p(LinearRatio(rho_c)) / _LN2


def delta_beta(beta: float, alpha: float) -> Decibel:
    """Coupling shift of the log-domain distance ratio.

    (10/4) * log10(loss_comm^2 / loss_radar). Exactly 0 dB at beta = 1.
    Raises DomainError at the starved corners (beta = 0 with alpha at 0
    or 1), where one service has no power at all.
    """
    lc, lr = loss_factors(beta, alpha)
    if lr <= 0.0:
        raise DomainError("radar power share is zero (beta=0, alpha=1)")
    if lc <= 0.0:
        raise DomainError("communication power share is zero (beta=0, alpha=0)")
    return Decibel(2.5 * math.log10(lc * lc / lr))


def delta_db(
    params: SystemParams, coupling: CouplingState, targets: TargetSnrs
) -> Decibel:
    """Log-domain distance ratio that meets both target SNRs.

    Evaluated as the ratio of the two closed-form range inversions; the
    literal quarter-weighted dB-term sum is kept as a test oracle.
    """
    d_c = solve_comm_range(params, coupling.loss_comm, db_to_lin(targets.comm_db))
    d_r = solve_radar_range(params, coupling.loss_radar, db_to_lin(targets.radar_db))
    return lin_to_db(d_c / d_r)


def comm_snr_at_ratio(
    params: SystemParams,
    coupling: CouplingState,
    delta: float,
    radar_target_db: float,
) -> Decibel:
    """Comm SNR (dB) when the user sits at delta times the radar range.

    The radar range is the distance at which the echo SNR equals
    radar_target_db; this is the inverse of delta_db in the comm-target
    argument.
    """
    delta = LinearRatio(delta)
    d_r = solve_radar_range(params, coupling.loss_radar, db_to_lin(radar_target_db))
    return lin_to_db(comm_snr(params, coupling.loss_comm, delta * d_r))


def plan_ranges(
    params: SystemParams,
    coupling: CouplingState,
    r: float,
    radar_target_db: float,
) -> RangePlan:
    """Full (delta, d_r, d_c) plan for a spectral efficiency target.

    d_r comes from the radar target SNR, delta from the ratio relation,
    and d_c = delta * d_r; by construction the comm SNR at d_c equals
    the SNR required for R bits/s/Hz.
    """
    targets = TargetSnrs(snr_from_spectral_efficiency(r), Decibel(radar_target_db))
    d_r = solve_radar_range(params, coupling.loss_radar, db_to_lin(targets.radar_db))
    delta = db_to_lin(delta_db(params, coupling, targets))
    return RangePlan(delta=float(delta), d_r_m=d_r, d_c_m=delta * d_r)
