"""Unit-safe scalar types and dB/linear/watt conversions.

Everything uses the power convention, dB = 10*log10(ratio). Physically
strict-positive quantities reject zero and negatives at construction
rather than silently becoming -inf dB.
"""

from __future__ import annotations

import math

__all__ = [
    "SPEED_OF_LIGHT",
    "DomainError",
    "LinearRatio",
    "Decibel",
    "PowerWatts",
    "PowerDbm",
    "NoisePsd",
    "lin_to_db",
    "db_to_lin",
    "dbm_to_watts",
    "watts_to_dbm",
]

# Single authoritative constant shared by every module; using the exact
# value instead of 3e8 shifts dB results by well under 0.01 dB.
SPEED_OF_LIGHT = 299_792_458.0  # m/s


class DomainError(ValueError):
    """Input outside the physical or mathematical domain of an operation."""


class LinearRatio(float):
    """Dimensionless power ratio in linear scale, strictly positive."""

    def __new__(cls, value: float) -> "LinearRatio":
        v = float(value)
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"linear ratio must be finite and > 0, got {value!r}")
        return super().__new__(cls, v)


class Decibel(float):
    """A dB value (power convention); NaN and +-inf are rejected."""

    def __new__(cls, value: float) -> "Decibel":
        v = float(value)
        if not math.isfinite(v):
            raise DomainError(f"dB value must be finite, got {value!r}")
        return super().__new__(cls, v)


class PowerWatts(float):
    """Power in watts, strictly positive."""

    def __new__(cls, value: float) -> "PowerWatts":
        v = float(value)
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"power must be finite and > 0 W, got {value!r}")
        return super().__new__(cls, v)


class PowerDbm(float):
    """Power in dB relative to 1 mW; must be finite."""

    def __new__(cls, value: float) -> "PowerDbm":
        v = float(value)
        if not math.isfinite(v):
            raise DomainError(f"dBm value must be finite, got {value!r}")
        return super().__new__(cls, v)


class NoisePsd(float):
    """One-sided noise power spectral density in W/Hz, strictly positive."""

    def __new__(cls, value: float) -> "NoisePsd":
        v = float(value)
        if not math.isfinite(v) or v <= 0.0:
            raise DomainError(f"noise PSD must be finite and > 0 W/Hz, got {value!r}")
        return super().__new__(cls, v)

    @classmethod
    def from_dbm_per_hz(cls, dbm_hz: float) -> "NoisePsd":
        return cls(10.0 ** ((PowerDbm(dbm_hz) - 30.0) / 10.0))


def lin_to_db(x: float) -> Decibel:
    """10*log10(x). Raises DomainError for non-positive x."""
    return Decibel(10.0 * math.log10(LinearRatio(x)))


def db_to_lin(x: float) -> LinearRatio:
    """10^(x/10), the inverse of lin_to_db."""
    return LinearRatio(10.0 ** (Decibel(x) / 10.0))


def dbm_to_watts(x: float) -> PowerWatts:
    """Convert dBm to watts: 10^((x-30)/10)."""
    return PowerWatts(10.0 ** ((PowerDbm(x) - 30.0) / 10.0))


def watts_to_dbm(w: float) -> PowerDbm:
    """Convert watts to dBm, the inverse of dbm_to_watts."""
    return PowerDbm(10.0 * math.log10(PowerWatts(w)) + 30.0)
