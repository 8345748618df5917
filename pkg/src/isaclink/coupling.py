"""Beam-coupling model between the communication and radar channels.

``beta`` is the coupling level of the two transmit beams (1 means a
single shared beam, 0 means fully separate beams). When the beams are
not fully coupled, ``alpha`` sets the share of the uncoupled power
budget that goes to communication; the radar side gets ``1 - alpha``.

The resulting per-service factors

    loss_comm  = beta + (1 - beta) * alpha
    loss_radar = beta + (1 - beta) * (1 - alpha)

scale the transmit power (and hence the SNR) of each service relative
to the fully coupled case. They always satisfy
``loss_comm + loss_radar = 1 + beta`` and lie in ``[beta, 1]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .units import Decibel, DomainError, PowerWatts, lin_to_db

# 1-ulp slack for factors computed as beta + (1-beta)*alpha in floats.
_BOUND_SLACK = 1e-12


class SnrPoint(NamedTuple):
    """A (communication, radar) SNR pair in dB."""

    comm_db: float
    radar_db: float


def loss_factors(beta: float, alpha: float) -> tuple[float, float]:
    """(loss_comm, loss_radar) for beta, alpha in [0, 1].

    The degenerate corners beta=0/alpha=0 and beta=0/alpha=1 yield a
    zero factor for one service; callers that need a positive factor
    must validate downstream.
    """
    _check_unit_interval("beta", beta)
    _check_unit_interval("alpha", alpha)
    return beta + (1.0 - beta) * alpha, beta + (1.0 - beta) * (1.0 - alpha)


@dataclass(frozen=True)
class CouplingState:
    """Validated (beta, alpha) pair with the derived loss factors.

    ``alpha`` may be omitted only when beta = 1, where the power
    trade-off does not exist and the factors are both 1.
    """

    beta: float
    alpha: Optional[float] = None
    loss_comm: float = field(init=False)
    loss_radar: float = field(init=False)

    def __post_init__(self) -> None:
        _check_unit_interval("beta", self.beta)
        if self.alpha is None:
            if self.beta < 1.0:
                raise DomainError("alpha is required when beta < 1")
            a = 0.0  # irrelevant at beta = 1; (1 - beta) removes it
        else:
            _check_unit_interval("alpha", self.alpha)
            a = self.alpha
        lc, lr = loss_factors(self.beta, a)
        object.__setattr__(self, "loss_comm", lc)
        object.__setattr__(self, "loss_radar", lr)


def split_powers(p: float, coupling: CouplingState) -> tuple[PowerWatts, PowerWatts]:
    """Per-service transmit powers (P*loss_comm, P*loss_radar) in watts.

    Raises DomainError if a share is zero (beta = 0 with alpha at an
    endpoint starves one service entirely).
    """
    p = PowerWatts(p)
    return PowerWatts(p * coupling.loss_comm), PowerWatts(p * coupling.loss_radar)


def loss_pair_linear(beta: float, l_comm: float) -> float:
    """Radar loss factor paired with a given communication loss factor.

    For a fixed beta the two factors trade off linearly:
    loss_radar = 1 + beta - loss_comm, with both confined to [beta, 1].
    The result is exactly 0 only at the starved corner beta=0,
    loss_comm=1.
    """
    _check_unit_interval("beta", beta)
    l = float(l_comm)
    if not (beta - _BOUND_SLACK <= l <= 1.0 + _BOUND_SLACK):
        raise DomainError(f"loss_comm must lie in [beta, 1] = [{beta}, 1], got {l!r}")
    return max(1.0 + beta - l, 0.0)


def loss_pair_db(beta: float, l_comm_db: float) -> Decibel:
    """dB-domain form of loss_pair_linear.

    Returns 10*log10(1 + beta - 10^(l_comm_db/10)); the input must lie
    in [10*log10(beta), 0] and the output lands in the same interval.
    """
    _check_unit_interval("beta", beta)
    l_db = Decibel(l_comm_db)
    lower = 10.0 * math.log10(beta) if beta > 0.0 else -math.inf
    if not (lower - _BOUND_SLACK <= l_db <= _BOUND_SLACK):
        raise DomainError(
            f"loss_comm_db must lie in [{lower}, 0] dB for beta={beta}, got {l_db!r}"
        )
    arg = 1.0 + beta - 10.0 ** (min(l_db, 0.0) / 10.0)
    if arg <= 0.0:
        raise DomainError(
            f"no paired radar loss: 1 + beta - loss_comm = {arg!r} is not positive"
        )
    return Decibel(10.0 * math.log10(arg))


def apply_coupling(point_beta1: SnrPoint, coupling: CouplingState) -> SnrPoint:
    """Shift a fully-coupled SNR pair down by the coupling losses.

    The input is the (comm, radar) SNR pair obtained with beta = 1; the
    output is the pair for the given coupling state. At beta = 1 this
    is the identity for every alpha.
    """
    if coupling.loss_comm <= 0.0 or coupling.loss_radar <= 0.0:
        raise DomainError("coupling starves one service; its SNR is undefined")
    return SnrPoint(
        Decibel(point_beta1.comm_db + lin_to_db(coupling.loss_comm)),
        Decibel(point_beta1.radar_db + lin_to_db(coupling.loss_radar)),
    )


def _check_unit_interval(name: str, value: float) -> None:
    if not (isinstance(value, (int, float)) and math.isfinite(value)):
        raise DomainError(f"{name} must be a finite number, got {value!r}")
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
