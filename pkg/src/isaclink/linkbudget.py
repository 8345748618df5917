"""Free-space SNR equations of the monostatic dual-function link.

Downlink SNR at the communication user:

    rho_c = P * L_c * G_bs * G_ue / (N_ue * B) * (c / (4*pi*f))^2 / d_c^2

Echo SNR back at the base station (two-way path, same antenna gain on
transmit and receive, so G_bs enters squared):

    rho_r = P * L_r * G_bs^2 * G_p / (N_bs * B) * (c / f)^2
            * sigma_rcs / ((4*pi)^3 * d_r^4)

All arithmetic is done in linear SI units; dB only appears at the API
surface. Both equations invert in closed form, which the solve_*
functions use to turn a target SNR into a distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import SPEED_OF_LIGHT, DomainError, LinearRatio

_FOUR_PI = 4.0 * math.pi


@dataclass(frozen=True)
class SystemParams:
    """Physical parameter set of one link configuration (linear SI units).

    f_hz / b_hz: carrier frequency and bandwidth, Hz
    p_watts: transmit power, W
    g_bs / g_ue / g_p: base-station antenna gain, user antenna gain and
        radar processing gain, linear ratios
    sigma_rcs_m2: radar cross section, m^2
    n_ue_w_hz / n_bs_w_hz: noise PSD at the user and at the base
        station, W/Hz
    """

    f_hz: float
    b_hz: float
    p_watts: float
    g_bs: float
    g_ue: float
    g_p: float
    sigma_rcs_m2: float
    n_ue_w_hz: float
    n_bs_w_hz: float

    def __post_init__(self) -> None:
        for name in (
            "f_hz",
            "b_hz",
            "p_watts",
            "g_bs",
            "g_ue",
            "g_p",
            "sigma_rcs_m2",
            "n_ue_w_hz",
            "n_bs_w_hz",
        ):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")
        if self.b_hz >= self.f_hz:
            raise DomainError(
                f"bandwidth must be below the carrier: b_hz={self.b_hz!r} >= f_hz={self.f_hz!r}"
            )


@dataclass(frozen=True)
class Scenario:
    """A distance pair: user at d_c_m, radar target at d_r_m (meters)."""

    d_c_m: float
    d_r_m: float

    def __post_init__(self) -> None:
        for name in ("d_c_m", "d_r_m"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise DomainError(f"{name} must be finite and > 0, got {v!r}")

    @property
    def delta(self) -> float:
        """Distance ratio d_c / d_r."""
        return self.d_c_m / self.d_r_m


def _comm_factor(params: SystemParams, l_comm: float) -> float:
    # Everything in rho_c except the 1/d^2 dependence.
    l_comm = LinearRatio(l_comm)
    spreading = (SPEED_OF_LIGHT / (_FOUR_PI * params.f_hz)) ** 2
    return (
        params.p_watts
        * l_comm
        * params.g_bs
        * params.g_ue
        * spreading
        / (params.n_ue_w_hz * params.b_hz)
    )


def _radar_factor(params: SystemParams, l_radar: float) -> float:
    # Everything in rho_r except the 1/d^4 dependence.
    l_radar = LinearRatio(l_radar)
    return (
        params.p_watts
        * l_radar
        * params.g_bs**2
        * params.g_p
        * (SPEED_OF_LIGHT / params.f_hz) ** 2
        * params.sigma_rcs_m2
        / (params.n_bs_w_hz * params.b_hz * _FOUR_PI**3)
    )


def comm_snr(params: SystemParams, l_comm: float, d_c_m: float) -> LinearRatio:
    """Linear SNR at the communication user at distance d_c_m."""
    _check_distance(d_c_m)
    return LinearRatio(_comm_factor(params, l_comm) / d_c_m**2)


def radar_snr(params: SystemParams, l_radar: float, d_r_m: float) -> LinearRatio:
    """Linear echo SNR at the base station for a target at d_r_m."""
    _check_distance(d_r_m)
    return LinearRatio(_radar_factor(params, l_radar) / d_r_m**4)


def solve_comm_range(params: SystemParams, l_comm: float, target_snr: float) -> float:
    """Distance (m) at which the communication SNR equals target_snr."""
    target = LinearRatio(target_snr)
    return math.sqrt(_comm_factor(params, l_comm) / target)


def solve_radar_range(params: SystemParams, l_radar: float, target_snr: float) -> float:
    """Target distance (m) at which the radar echo SNR equals target_snr."""
    target = LinearRatio(target_snr)
    return (_radar_factor(params, l_radar) / target) ** 0.25


def _check_distance(d: float) -> None:
    if not (isinstance(d, (int, float)) and math.isfinite(d) and d > 0):
        raise DomainError(f"distance must be finite and > 0 m, got {d!r}")
