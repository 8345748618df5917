"""Radar detection requirements.

Three ways to pin down the SNR a detector needs:

* ``required_snr_albersheim``: the closed-form Albersheim
  approximation for a (P_d, P_fa, N) requirement with noncoherent
  integration of N samples. Accurate to a few tenths of a dB inside
  its stated validity region.
* ``required_snr_exact``: exact single-sample value for a steady
  target in Gaussian noise, found by bisecting the Marcum Q relation
  P_d = Q1(sqrt(2*snr), sqrt(-2*ln(P_fa))).
* ``processing_gain``: 10*log10(N) for coherent integration of N
  samples; in this package coherent integration is modeled as the g_p
  factor of the radar equation, with the detector requirement stated
  at the post-integration point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .units import Decibel, DomainError

# Albersheim validity region.
_PFA_MIN, _PFA_MAX = 1e-7, 1e-3
_PD_MIN, _PD_MAX = 0.1, 0.99
_N_MAX = 8096

_MAX_MARCUM_ARG = 100.0
_MAX_SERIES_TERMS = 10_000


@dataclass(frozen=True)
class DetectionSpec:
    """A (P_d, P_fa, N samples) detection requirement."""

    p_d: float
    p_fa: float
    n_samples: int = 1

    def __post_init__(self) -> None:
        if not (
            isinstance(self.p_fa, (int, float))
            and isinstance(self.p_d, (int, float))
            and 0.0 < self.p_fa < self.p_d < 1.0
        ):
            raise DomainError(
                f"need 0 < p_fa < p_d < 1, got p_fa={self.p_fa!r}, p_d={self.p_d!r}"
            )
        if not (isinstance(self.n_samples, int) and self.n_samples >= 1):
            raise DomainError(f"n_samples must be an integer >= 1, got {self.n_samples!r}")


def processing_gain(n: int) -> Decibel:
    """Coherent integration gain 10*log10(n) for n samples."""
    if not (isinstance(n, int) and n >= 1):
        raise DomainError(f"sample count must be an integer >= 1, got {n!r}")
    return Decibel(10.0 * math.log10(n))


def required_snr_albersheim(spec: DetectionSpec) -> Decibel:
    """Albersheim's approximation of the per-sample SNR requirement.

    With A = ln(0.62/p_fa) and Z = ln(p_d/(1-p_d)):

        snr_db = -5*log10(n) + (6.2 + 4.54/sqrt(n + 0.44))
                 * log10(A + 0.12*A*Z + 1.7*Z)

    Valid for p_fa in [1e-7, 1e-3], p_d in [0.1, 0.99], n in [1, 8096];
    inputs outside that region raise DomainError naming the bound.
    """
    if not _PFA_MIN <= spec.p_fa <= _PFA_MAX:
        raise DomainError(
            f"p_fa={spec.p_fa!r} outside Albersheim validity [{_PFA_MIN}, {_PFA_MAX}]"
        )
    if not _PD_MIN <= spec.p_d <= _PD_MAX:
        raise DomainError(
            f"p_d={spec.p_d!r} outside Albersheim validity [{_PD_MIN}, {_PD_MAX}]"
        )
    if spec.n_samples > _N_MAX:
        raise DomainError(
            f"n_samples={spec.n_samples!r} outside Albersheim validity [1, {_N_MAX}]"
        )
    a = math.log(0.62 / spec.p_fa)
    z = math.log(spec.p_d / (1.0 - spec.p_d))
    n = spec.n_samples
    return Decibel(
        -5.0 * math.log10(n)
        + (6.2 + 4.54 / math.sqrt(n + 0.44)) * math.log10(a + 0.12 * a * z + 1.7 * z)
    )


def marcum_q1(a: float, b: float) -> float:
    """First-order Marcum Q function Q1(a, b).

    Poisson-mixture series: Q1 = sum_k pois(k; a^2/2) * P(chi2_{2(k+1)}
    > b^2), with both term families evaluated from log-space so large
    arguments do not underflow prematurely. The remaining Poisson tail
    bounds the truncation error, which stays below 1e-10 absolute for
    arguments under 100.
    """
    for name, v in (("a", a), ("b", b)):
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            raise DomainError(f"{name} must be finite, got {v!r}")
        if v < 0.0 or v >= _MAX_MARCUM_ARG:
            raise DomainError(f"{name} must lie in [0, {_MAX_MARCUM_ARG}), got {v!r}")
    x = 0.5 * a * a  # Poisson mean from the noncentrality
    y = 0.5 * b * b  # chi-square threshold
    if y == 0.0:
        return 1.0
    ln_x = math.log(x) if x > 0.0 else None
    ln_y = math.log(y)
    total = 0.0
    cpois = 0.0
    g = 0.0  # running P(chi2_{2(k+1)} > 2y)
    for k in range(_MAX_SERIES_TERMS):
        lgk = math.lgamma(k + 1)
        g += math.exp(-y + k * ln_y - lgk)
        if ln_x is None:
            p = 1.0 if k == 0 else 0.0
        else:
            p = math.exp(-x + k * ln_x - lgk)
        total += p * g
        cpois += p
        if k >= x and 1.0 - cpois <= 1e-16:
            break
    return min(max(total, 0.0), 1.0)


def required_snr_exact(p_d: float, p_fa: float) -> Decibel:
    """Exact single-sample SNR requirement via Marcum Q bisection.

    Solves Q1(sqrt(2*snr), sqrt(-2*ln(p_fa))) = p_d for the SNR in dB,
    bisected to 1e-6 dB on [-10, 40] dB. Raises RuntimeError if the
    root falls outside that bracket.
    """
    if not 0.0 < p_fa < p_d < 1.0:
        raise DomainError(f"need 0 < p_fa < p_d < 1, got p_fa={p_fa!r}, p_d={p_d!r}")
    b = math.sqrt(-2.0 * math.log(p_fa))

    def detect_prob(snr_db: float) -> float:
        a = math.sqrt(2.0 * 10.0 ** (snr_db / 10.0))
        if a >= _MAX_MARCUM_ARG:
            return 1.0  # monotone tail; 1 - Q1 is below double precision here
        return marcum_q1(a, b)

    lo, hi = -10.0, 40.0
    if detect_prob(lo) >= p_d:
        raise RuntimeError(
            f"required SNR below {lo} dB bracket for p_d={p_d!r}, p_fa={p_fa!r}"
        )
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if detect_prob(mid) < p_d:
            lo = mid
        else:
            hi = mid
    return Decibel(0.5 * (lo + hi))
