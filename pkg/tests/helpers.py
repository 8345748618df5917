"""Shared builders and independent oracles for the test suite.

The two *_db_sum oracles evaluate the operating-point and ratio
relations as literal dB-term sums (SI units, power in dBW). They share
no code with the library's closed-loop implementations, which makes
them the independent cross-check for those paths.
"""

import math
import random

from hypothesis import strategies as st

from isaclink import CouplingState, SystemParams

C = 299792458.0


def _db(x: float) -> float:
    return 10.0 * math.log10(x)


def make_params(rng: random.Random) -> SystemParams:
    """Random plausible system over f in [1e9, 3e11], B in [1e6, 1e10]."""
    log_f = rng.uniform(9.0, math.log10(3e11))
    log_b = rng.uniform(6.0, min(10.0, log_f - 0.5))
    return SystemParams(
        f_hz=10.0**log_f,
        b_hz=10.0**log_b,
        p_watts=10.0 ** rng.uniform(-2.0, 2.0),
        g_bs=10.0 ** rng.uniform(0.0, 4.0),
        g_ue=10.0 ** rng.uniform(0.0, 2.0),
        g_p=10.0 ** rng.uniform(0.0, 4.0),
        sigma_rcs_m2=10.0 ** rng.uniform(-1.0, 2.0),
        n_ue_w_hz=10.0 ** rng.uniform(-21.0, -19.0),
        n_bs_w_hz=10.0 ** rng.uniform(-21.0, -19.0),
    )


@st.composite
def system_params(draw) -> SystemParams:
    log_f = draw(st.floats(9.0, math.log10(3e11)))
    log_b = draw(st.floats(6.0, min(10.0, log_f - 0.5)))
    return SystemParams(
        f_hz=10.0**log_f,
        b_hz=10.0**log_b,
        p_watts=10.0 ** draw(st.floats(-2.0, 2.0)),
        g_bs=10.0 ** draw(st.floats(0.0, 4.0)),
        g_ue=10.0 ** draw(st.floats(0.0, 2.0)),
        g_p=10.0 ** draw(st.floats(0.0, 4.0)),
        sigma_rcs_m2=10.0 ** draw(st.floats(-1.0, 2.0)),
        n_ue_w_hz=10.0 ** draw(st.floats(-21.0, -19.0)),
        n_bs_w_hz=10.0 ** draw(st.floats(-21.0, -19.0)),
    )


@st.composite
def coupling_states(draw, beta_min: float = 0.1) -> CouplingState:
    beta = draw(st.floats(beta_min, 1.0))
    alpha = draw(st.floats(0.0, 1.0))
    return CouplingState(beta=beta, alpha=alpha)


def sop_db_sum_oracle(
    params: SystemParams, coupling: CouplingState, comm_db: float, delta: float
) -> float:
    """Literal term-sum form of the operating-point relation."""
    nu = _db(4.0 * math.pi / C**2)
    n_t = 2.0 * _db(params.n_ue_w_hz) - _db(params.n_bs_w_hz)
    return (
        2.0 * comm_db
        + _db(coupling.loss_radar)
        + _db(params.b_hz)
        + 2.0 * _db(params.f_hz)
        + _db(params.g_p)
        + _db(params.sigma_rcs_m2)
        + 4.0 * _db(delta)
        + n_t
        - _db(params.p_watts)
        - 2.0 * _db(params.g_ue)
        - 2.0 * _db(coupling.loss_comm)
        + nu
    )


def delta_db_sum_oracle(
    params: SystemParams, coupling: CouplingState, comm_db: float, radar_db: float
) -> float:
    """Literal quarter-weighted term sum for the log distance ratio."""
    nu = _db(4.0 * math.pi / C**2)
    n_t = 2.0 * _db(params.n_ue_w_hz) - _db(params.n_bs_w_hz)
    shift = 2.5 * math.log10(coupling.loss_comm**2 / coupling.loss_radar)
    return (
        radar_db / 4.0
        - comm_db / 2.0
        - _db(params.b_hz) / 4.0
        - _db(params.f_hz) / 2.0
        - _db(params.g_p) / 4.0
        - _db(params.sigma_rcs_m2) / 4.0
        - n_t / 4.0
        + _db(params.p_watts) / 4.0
        + _db(params.g_ue) / 2.0
        - nu / 4.0
        + shift
    )
