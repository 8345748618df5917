"""The SNR operating line.

For a fixed system configuration and a fixed distance ratio
delta = d_c / d_r, the set of reachable (comm SNR, radar SNR) pairs in
dB is a straight line of slope exactly 2: the communication SNR falls
with the square of distance while the radar SNR falls with its fourth
power. Sliding the distance pair moves the operating point along the
line; changing a system parameter shifts the whole line up or down,
except the base-station antenna gain, which cancels and leaves the
line untouched.

``sop_radar_snr`` maps a communication SNR to the radar SNR on that
line. It is evaluated by inverting the communication equation for the
implied distance and feeding d_c / delta to the radar equation, all in
linear SI units; a literal dB-term-sum form of the same relation exists
in the test suite as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .coupling import CouplingState
from .linkbudget import SystemParams, radar_snr, solve_comm_range
from .units import SPEED_OF_LIGHT, Decibel, LinearRatio, NoisePsd, db_to_lin, lin_to_db


@dataclass(frozen=True)
class SopLine:
    """The operating line radar_db = 2 * comm_db + intercept_db."""

    intercept_db: float
    slope: float = field(default=2.0, init=False)

    def radar_db(self, comm_db: float) -> Decibel:
        """Radar SNR on the line for a given communication SNR (dB)."""
        return Decibel(self.slope * Decibel(comm_db) + self.intercept_db)


def nu_constant() -> Decibel:
    """The constant 10*log10(4*pi/c^2) appearing in the line's intercept."""
    return Decibel(10.0 * math.log10(4.0 * math.pi / SPEED_OF_LIGHT**2))


def n_tilde(n_ue: float, n_bs: float) -> Decibel:
    """Combined noise term 2*N_ue - N_bs in dB, PSDs given in W/Hz."""
    return Decibel(
        2.0 * 10.0 * math.log10(NoisePsd(n_ue)) - 10.0 * math.log10(NoisePsd(n_bs))
    )


def sop_radar_snr(
    params: SystemParams,
    coupling: CouplingState,
    comm_snr_db: float,
    delta: float,
) -> Decibel:
    """Radar SNR (dB) on the operating line at a given comm SNR (dB).

    delta is the distance ratio d_c / d_r; the user distance implied by
    comm_snr_db fixes the target distance as d_c / delta.
    """
    delta = LinearRatio(delta)
    d_c = solve_comm_range(params, coupling.loss_comm, db_to_lin(comm_snr_db))
    return lin_to_db(radar_snr(params, coupling.loss_radar, d_c / delta))


def sop_intercept(
    params: SystemParams, coupling: CouplingState, delta: float
) -> SopLine:
    """Operating line for a configuration and distance ratio.

    The intercept is the radar SNR at comm SNR = 0 dB, so that
    sop_radar_snr(x) == line.radar_db(x) for every x.
    """
    return SopLine(intercept_db=sop_radar_snr(params, coupling, 0.0, delta))
