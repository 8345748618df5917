"""Run configuration: document schema, presets and validation.

A run is described by a single YAML/JSON document (YAML is a superset
of JSON, so either syntax loads). Keys carry explicit unit suffixes so
no unit is ever implied:

    preset: sub6              # optional named baseline, see PRESETS
    system:
      f_hz: 2.4e9             # carrier frequency
      b_hz: 1.0e8             # bandwidth
      p_dbm: 30.0             # transmit power (or p_watts)
      g_bs_lin: 16.0          # BS antenna gain (or g_bs_db)
      g_ue_lin: 4.0           # UE antenna gain (or g_ue_db)
      g_p_lin: 1024.0         # radar processing gain (or g_p_db)
      sigma_rcs_m2: 10.0      # radar cross section
      n_psd_dbm_hz: -174.0    # noise PSD, sets both ends; individual
                              # n_ue_psd_dbm_hz / n_bs_psd_dbm_hz override
    coupling:
      beta: 1.0               # beam coupling level in [0, 1]
      alpha: 0.5              # comm share of uncoupled power; required
                              # when beta < 1
    scenario:                 # either both distances or just the ratio
      d_c_m: 1000.0
      d_r_m: 500.0
      # delta: 2.0
    targets:
      spectral_eff: 2.0       # or comm_snr_db
      radar_snr_db: 10.8      # or detection: {p_d, p_fa, n_samples}
    sweep:
      parameter: spectral_eff # one of SWEEP_AXES
      start: 1.0
      stop: 14.0
      points: 131
      spacing: linear         # or log

Explicit sections override the preset baseline key by key; providing
one member of an either-or pair (say p_watts) replaces the preset's
other member (p_dbm). Unknown keys anywhere are rejected.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass
from typing import Any, Optional

import yaml

from .coupling import CouplingState
from .detection import DetectionSpec
from .linkbudget import SystemParams
from .units import Decibel, DomainError, dbm_to_watts


class ParseError(ValueError):
    """The config document itself could not be read."""


# Named baselines. config1..config4 form the SNR-analysis family
# (processing gain ignored); sub6/mmwave/subthz form the range-analysis
# family (1024-sample coherent integration). 30 dBm transmit power and
# a 4x user antenna gain are the common defaults.
PRESETS: dict[str, dict[str, Any]] = {
    "config1": {
        "system": {
            "f_hz": 1.0e9,
            "b_hz": 1.0e8,
            "p_dbm": 30.0,
            "g_bs_lin": 10.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1.0,
            "sigma_rcs_m2": 10.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "config2": {
        "system": {
            "f_hz": 10.0e9,
            "b_hz": 1.0e8,
            "p_dbm": 30.0,
            "g_bs_lin": 10.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1.0,
            "sigma_rcs_m2": 10.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "config3": {
        "system": {
            "f_hz": 10.0e9,
            "b_hz": 1.0e8,
            "p_dbm": 30.0,
            "g_bs_lin": 100.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1.0,
            "sigma_rcs_m2": 10.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "config4": {
        "system": {
            "f_hz": 100.0e9,
            "b_hz": 1.0e9,
            "p_dbm": 30.0,
            "g_bs_lin": 1000.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1.0,
            "sigma_rcs_m2": 1.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "sub6": {
        "system": {
            "f_hz": 2.4e9,
            "b_hz": 1.0e8,
            "p_dbm": 30.0,
            "g_bs_lin": 16.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1024.0,
            "sigma_rcs_m2": 10.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "mmwave": {
        "system": {
            "f_hz": 24.0e9,
            "b_hz": 1.0e9,
            "p_dbm": 30.0,
            "g_bs_lin": 64.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1024.0,
            "sigma_rcs_m2": 10.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
    "subthz": {
        "system": {
            "f_hz": 140.0e9,
            "b_hz": 4.0e9,
            "p_dbm": 30.0,
            "g_bs_lin": 128.0,
            "g_ue_lin": 4.0,
            "g_p_lin": 1024.0,
            "sigma_rcs_m2": 1.0,
            "n_psd_dbm_hz": -174.0,
        },
        "coupling": {"beta": 1.0},
    },
}

_TOP_KEYS = {"preset", "system", "coupling", "scenario", "targets", "sweep"}
_SYSTEM_KEYS = {
    "f_hz",
    "b_hz",
    "p_dbm",
    "p_watts",
    "g_bs_lin",
    "g_bs_db",
    "g_ue_lin",
    "g_ue_db",
    "g_p_lin",
    "g_p_db",
    "sigma_rcs_m2",
    "n_psd_dbm_hz",
    "n_ue_psd_dbm_hz",
    "n_bs_psd_dbm_hz",
}
_COUPLING_KEYS = {"beta", "alpha"}
_SCENARIO_KEYS = {"d_c_m", "d_r_m", "delta"}
_TARGETS_KEYS = {"spectral_eff", "comm_snr_db", "radar_snr_db", "detection"}
_DETECTION_KEYS = {"p_d", "p_fa", "n_samples"}
_SWEEP_KEYS = {"parameter", "start", "stop", "points", "spacing"}

# Either-or groups within the system section, used when layering a
# document over a preset and when a sweep replaces one of the members.
_SYSTEM_GROUPS = (
    {"p_dbm", "p_watts"},
    {"g_bs_lin", "g_bs_db"},
    {"g_ue_lin", "g_ue_db"},
    {"g_p_lin", "g_p_db"},
)

# Sweepable parameter -> config section. The value replaces that key in
# the section for every grid point.
SWEEP_AXES: dict[str, str] = {
    "f_hz": "system",
    "b_hz": "system",
    "p_dbm": "system",
    "p_watts": "system",
    "g_bs_lin": "system",
    "g_ue_lin": "system",
    "g_p_lin": "system",
    "sigma_rcs_m2": "system",
    "n_psd_dbm_hz": "system",
    "n_ue_psd_dbm_hz": "system",
    "n_bs_psd_dbm_hz": "system",
    "beta": "coupling",
    "alpha": "coupling",
    "d_c_m": "scenario",
    "d_r_m": "scenario",
    "spectral_eff": "targets",
    "comm_snr_db": "targets",
    "radar_snr_db": "targets",
}

# Keys removed from the section when the axis key is written in, so a
# swept value never conflicts with its either-or sibling.
AXIS_DROPS: dict[str, tuple[str, ...]] = {
    "p_dbm": ("p_watts",),
    "p_watts": ("p_dbm",),
    "g_bs_lin": ("g_bs_db",),
    "g_ue_lin": ("g_ue_db",),
    "g_p_lin": ("g_p_db",),
    "n_psd_dbm_hz": ("n_ue_psd_dbm_hz", "n_bs_psd_dbm_hz"),
    "spectral_eff": ("comm_snr_db",),
    "comm_snr_db": ("spectral_eff",),
    "radar_snr_db": ("detection",),
    "d_c_m": ("delta",),
    "d_r_m": ("delta",),
}


@dataclass(frozen=True)
class ScenarioConfig:
    """Either a full (d_c_m, d_r_m) pair or just the ratio delta."""

    d_c_m: Optional[float] = None
    d_r_m: Optional[float] = None
    delta: Optional[float] = None

    @property
    def has_distances(self) -> bool:
        return self.d_c_m is not None

    def ratio(self) -> float:
        return self.d_c_m / self.d_r_m if self.has_distances else self.delta


@dataclass(frozen=True)
class TargetsConfig:
    """Desired operating targets; one comm form and one radar form."""

    spectral_eff: Optional[float] = None
    comm_snr_db: Optional[float] = None
    radar_snr_db: Optional[float] = None
    detection: Optional[DetectionSpec] = None


@dataclass(frozen=True)
class SweepSpec:
    """One swept parameter on a linear or log grid."""

    parameter: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"

    def grid(self) -> list[float]:
        if self.points == 1:
            return [self.start]
        if self.spacing == "log":
            ratio = (self.stop / self.start) ** (1.0 / (self.points - 1))
            return [self.start * ratio**i for i in range(self.points)]
        step = (self.stop - self.start) / (self.points - 1)
        return [self.start + step * i for i in range(self.points)]


@dataclass(frozen=True)
class RunConfig:
    """A validated run description plus its normalized source document."""

    doc: dict[str, Any]
    system: SystemParams
    coupling: CouplingState
    scenario: Optional[ScenarioConfig]
    targets: Optional[TargetsConfig]
    sweep: Optional[SweepSpec]


def parse_config(source: str, preset: Optional[str] = None) -> RunConfig:
    """Parse and validate a config document (YAML or JSON text)."""
    try:
        doc = yaml.safe_load(source)
    except yaml.YAMLError as exc:
        raise ParseError(f"malformed config document: {exc}") from exc
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise ParseError(f"config document must be a mapping, got {type(doc).__name__}")
    return build_config(doc, preset=preset)


def build_config(doc: dict[str, Any], preset: Optional[str] = None) -> RunConfig:
    """Validate an already-loaded document, layering it over a preset."""
    merged = merge_with_preset(doc, preset)
    system = _build_system(merged.get("system"))
    coupling = _build_coupling(merged.get("coupling"))
    scenario = _build_scenario(merged.get("scenario"))
    targets = _build_targets(merged.get("targets"))
    sweep = _build_sweep(merged.get("sweep"))
    return RunConfig(
        doc=merged,
        system=system,
        coupling=coupling,
        scenario=scenario,
        targets=targets,
        sweep=sweep,
    )


def merge_with_preset(doc: dict[str, Any], preset: Optional[str] = None) -> dict[str, Any]:
    """Layer a document over its preset; returns the normalized document."""
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise DomainError(f"unknown top-level config keys: {sorted(unknown)}")
    doc_preset = doc.get("preset")
    if doc_preset is not None and preset is not None and doc_preset != preset:
        raise DomainError(
            f"preset named both in the document ({doc_preset!r}) and externally ({preset!r})"
        )
    name = preset if preset is not None else doc_preset
    base: dict[str, Any] = {}
    if name is not None:
        if name not in PRESETS:
            raise DomainError(
                f"unknown preset {name!r}; available: {sorted(PRESETS)}"
            )
        base = copy.deepcopy(PRESETS[name])
    merged: dict[str, Any] = {}
    for section in ("system", "coupling", "scenario", "targets", "sweep"):
        base_sec = dict(base.get(section) or {})
        doc_sec = doc.get(section)
        if doc_sec is None:
            doc_sec = {}
        if not isinstance(doc_sec, dict):
            raise DomainError(f"config section {section!r} must be a mapping")
        if section == "system":
            for group in _SYSTEM_GROUPS:
                if group & set(doc_sec):
                    for key in group:
                        base_sec.pop(key, None)
        base_sec.update(copy.deepcopy(doc_sec))
        if base_sec:
            merged[section] = base_sec
    return merged


def _number(section: str, key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{section}.{key} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise DomainError(f"{section}.{key} must be finite, got {value!r}")
    return v


def _reject_unknown(section: str, given: dict[str, Any], allowed: set[str]) -> None:
    unknown = set(given) - allowed
    if unknown:
        raise DomainError(f"unknown keys in {section!r} section: {sorted(unknown)}")


def _pick_one(section: str, sec: dict[str, Any], options: tuple[str, ...]) -> str:
    present = [k for k in options if k in sec]
    if len(present) != 1:
        raise DomainError(
            f"{section} section needs exactly one of {options}, got {present or 'none'}"
        )
    return present[0]


def _build_system(sec: Optional[dict[str, Any]]) -> SystemParams:
    if not sec:
        raise DomainError("config is missing the 'system' section (or a preset)")
    _reject_unknown("system", sec, _SYSTEM_KEYS)

    for key in ("f_hz", "b_hz", "sigma_rcs_m2"):
        if key not in sec:
            raise DomainError(f"system.{key} is required")

    power_key = _pick_one("system", sec, ("p_dbm", "p_watts"))
    if power_key == "p_dbm":
        p_watts = float(dbm_to_watts(_number("system", "p_dbm", sec["p_dbm"])))
    else:
        p_watts = _number("system", "p_watts", sec["p_watts"])

    gains = {}
    for gain in ("g_bs", "g_ue", "g_p"):
        key = _pick_one("system", sec, (f"{gain}_lin", f"{gain}_db"))
        value = _number("system", key, sec[key])
        gains[gain] = 10.0 ** (value / 10.0) if key.endswith("_db") else value

    n_ue = n_bs = None
    if "n_psd_dbm_hz" in sec:
        shared = _number("system", "n_psd_dbm_hz", sec["n_psd_dbm_hz"])
        n_ue = n_bs = float(dbm_to_watts(shared))
    if "n_ue_psd_dbm_hz" in sec:
        n_ue = float(dbm_to_watts(_number("system", "n_ue_psd_dbm_hz", sec["n_ue_psd_dbm_hz"])))
    if "n_bs_psd_dbm_hz" in sec:
        n_bs = float(dbm_to_watts(_number("system", "n_bs_psd_dbm_hz", sec["n_bs_psd_dbm_hz"])))
    if n_ue is None or n_bs is None:
        raise DomainError(
            "system noise is incomplete: give n_psd_dbm_hz or both "
            "n_ue_psd_dbm_hz and n_bs_psd_dbm_hz"
        )

    return SystemParams(
        f_hz=_number("system", "f_hz", sec["f_hz"]),
        b_hz=_number("system", "b_hz", sec["b_hz"]),
        p_watts=p_watts,
        g_bs=gains["g_bs"],
        g_ue=gains["g_ue"],
        g_p=gains["g_p"],
        sigma_rcs_m2=_number("system", "sigma_rcs_m2", sec["sigma_rcs_m2"]),
        n_ue_w_hz=n_ue,
        n_bs_w_hz=n_bs,
    )


def _build_coupling(sec: Optional[dict[str, Any]]) -> CouplingState:
    if not sec:
        return CouplingState(beta=1.0)
    _reject_unknown("coupling", sec, _COUPLING_KEYS)
    if "beta" not in sec:
        raise DomainError("coupling.beta is required when a coupling section is given")
    beta = _number("coupling", "beta", sec["beta"])
    alpha = _number("coupling", "alpha", sec["alpha"]) if "alpha" in sec else None
    return CouplingState(beta=beta, alpha=alpha)


def _build_scenario(sec: Optional[dict[str, Any]]) -> Optional[ScenarioConfig]:
    if not sec:
        return None
    _reject_unknown("scenario", sec, _SCENARIO_KEYS)
    has_distances = "d_c_m" in sec or "d_r_m" in sec
    if has_distances and "delta" in sec:
        raise DomainError("scenario takes either d_c_m/d_r_m or delta, not both")
    if has_distances:
        if "d_c_m" not in sec or "d_r_m" not in sec:
            raise DomainError("scenario needs both d_c_m and d_r_m")
        d_c = _number("scenario", "d_c_m", sec["d_c_m"])
        d_r = _number("scenario", "d_r_m", sec["d_r_m"])
        for key, v in (("d_c_m", d_c), ("d_r_m", d_r)):
            if v <= 0:
                raise DomainError(f"scenario.{key} must be > 0, got {v!r}")
        return ScenarioConfig(d_c_m=d_c, d_r_m=d_r)
    if "delta" not in sec:
        raise DomainError("scenario needs d_c_m/d_r_m or delta")
    delta = _number("scenario", "delta", sec["delta"])
    if delta <= 0:
        raise DomainError(f"scenario.delta must be > 0, got {delta!r}")
    return ScenarioConfig(delta=delta)


def _build_targets(sec: Optional[dict[str, Any]]) -> Optional[TargetsConfig]:
    if not sec:
        return None
    _reject_unknown("targets", sec, _TARGETS_KEYS)
    comm_key = _pick_one("targets", sec, ("spectral_eff", "comm_snr_db"))
    radar_key = _pick_one("targets", sec, ("radar_snr_db", "detection"))

    spectral_eff = comm_snr_db = radar_snr_db = None
    detection = None
    if comm_key == "spectral_eff":
        spectral_eff = _number("targets", "spectral_eff", sec["spectral_eff"])
        if spectral_eff <= 0:
            raise DomainError(f"targets.spectral_eff must be > 0, got {spectral_eff!r}")
    else:
        comm_snr_db = float(Decibel(_number("targets", "comm_snr_db", sec["comm_snr_db"])))
    if radar_key == "radar_snr_db":
        radar_snr_db = float(Decibel(_number("targets", "radar_snr_db", sec["radar_snr_db"])))
    else:
        det = sec["detection"]
        if not isinstance(det, dict):
            raise DomainError("targets.detection must be a mapping")
        _reject_unknown("targets.detection", det, _DETECTION_KEYS)
        for key in ("p_d", "p_fa"):
            if key not in det:
                raise DomainError(f"targets.detection.{key} is required")
        n = det.get("n_samples", 1)
        if isinstance(n, bool) or not isinstance(n, int):
            raise DomainError(f"targets.detection.n_samples must be an integer, got {n!r}")
        detection = DetectionSpec(
            p_d=_number("targets.detection", "p_d", det["p_d"]),
            p_fa=_number("targets.detection", "p_fa", det["p_fa"]),
            n_samples=n,
        )
    return TargetsConfig(
        spectral_eff=spectral_eff,
        comm_snr_db=comm_snr_db,
        radar_snr_db=radar_snr_db,
        detection=detection,
    )


def _build_sweep(sec: Optional[dict[str, Any]]) -> Optional[SweepSpec]:
    if not sec:
        return None
    _reject_unknown("sweep", sec, _SWEEP_KEYS)
    for key in ("parameter", "start", "stop", "points"):
        if key not in sec:
            raise DomainError(f"sweep.{key} is required")
    parameter = sec["parameter"]
    if parameter not in SWEEP_AXES:
        raise DomainError(
            f"sweep.parameter {parameter!r} is not sweepable; choose one of {sorted(SWEEP_AXES)}"
        )
    start = _number("sweep", "start", sec["start"])
    stop = _number("sweep", "stop", sec["stop"])
    points = sec["points"]
    if isinstance(points, bool) or not isinstance(points, int) or points < 1:
        raise DomainError(f"sweep.points must be an integer >= 1, got {points!r}")
    spacing = sec.get("spacing", "linear")
    if spacing not in ("linear", "log"):
        raise DomainError(f"sweep.spacing must be 'linear' or 'log', got {spacing!r}")
    if spacing == "log" and (start <= 0 or stop <= 0):
        raise DomainError("log spacing needs start > 0 and stop > 0")
    if points > 1 and start == stop:
        raise DomainError("sweep with points > 1 needs start != stop")
    return SweepSpec(parameter=parameter, start=start, stop=stop, points=points, spacing=spacing)
