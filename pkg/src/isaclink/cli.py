"""Command-line interface.

Subcommands:
    snr        communication and radar SNR for a distance pair
    sop        the slope-2 operating line (and point) for a ratio
    range      distance-ratio plan for target SNRs or rate
    detect     detection-requirement SNRs for (p_d, p_fa, n)
    sweep      grid run over one parameter, CSV/JSON rows
    reproduce  recompute a recorded reference dataset, pass/fail

Exit codes: 0 success, 1 validation or domain error, 2 I/O or parse
error, 3 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .config import ParseError, RunConfig, parse_config
from .detection import (
    DetectionSpec,
    processing_gain,
    required_snr_albersheim,
    required_snr_exact,
)
from .linkbudget import comm_snr, radar_snr, solve_radar_range
from .rangeplan import TargetSnrs, delta_db, spectral_efficiency_from_snr
from .report import (
    ARTIFACTS,
    REPRO_COLUMNS,
    evaluate_point,
    reproduce,
    require_family,
    require_system,
    resolve_targets,
    run_sweep,
    write_rows,
)
from .sop import nu_constant, sop_intercept
from .units import DomainError, db_to_lin, lin_to_db

SNR_COLUMNS = ("rho_c_db", "rho_r_db", "delta_lin", "d_c_m", "d_r_m", "spectral_eff")
SOP_COLUMNS = ("delta_lin", "slope", "intercept_db", "nu_db", "rho_c_db", "rho_r_db")
RANGE_COLUMNS = (
    "comm_snr_db",
    "radar_snr_db",
    "delta_lin",
    "delta_db",
    "d_c_m",
    "d_r_m",
    "spectral_eff",
)
DETECT_COLUMNS = (
    "p_d",
    "p_fa",
    "n_samples",
    "processing_gain_db",
    "required_snr_albersheim_n1_db",
    "required_snr_exact_n1_db",
    "required_snr_albersheim_n_db",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isaclink",
        description="Link-budget, operating-point and range analysis for a "
        "dual-function radar-communication base station.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, handler) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="path to a YAML/JSON config document, or - for stdin")
        p.add_argument("--preset", help="named parameter baseline (see README)")
        p.add_argument("--output", default="-", help="output path, - for stdout (default)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--quiet", action="store_true", help="suppress the stderr summary")
        p.set_defaults(handler=handler)
        return p

    add("snr", "SNRs at a (d_c_m, d_r_m) scenario", cmd_snr)
    add("sop", "operating line for a distance ratio", cmd_sop)
    add("range", "range plan for the configured targets", cmd_range)
    add("detect", "detection-requirement SNRs", cmd_detect)
    add("sweep", "evaluate the configured parameter sweep", cmd_sweep)
    repro = add("reproduce", "recompute a recorded reference dataset", cmd_reproduce)
    repro.add_argument("artifact", choices=ARTIFACTS)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _load_config(args: argparse.Namespace) -> RunConfig:
    text = ""
    if args.config == "-":
        text = sys.stdin.read()
    elif args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_config(text, preset=args.preset)


def _emit(args: argparse.Namespace, rows: list[dict], columns: tuple[str, ...]) -> None:
    if args.output == "-":
        write_rows(rows, columns, sys.stdout, args.format)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_rows(rows, columns, fh, args.format)


def _note(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def cmd_snr(args: argparse.Namespace) -> int:
    config = _load_config(args)
    require_family(config, "scenario")
    if not config.scenario.has_distances:
        raise DomainError("snr needs scenario.d_c_m and scenario.d_r_m")
    row = evaluate_point(config)
    _emit(args, [row], SNR_COLUMNS)
    _note(args, f"snr: rho_c={row['rho_c_db']:.3f} dB rho_r={row['rho_r_db']:.3f} dB")
    return 0


def cmd_sop(args: argparse.Namespace) -> int:
    config = _load_config(args)
    require_family(config, "scenario")
    system = require_system(config)
    delta = config.scenario.ratio()
    line = sop_intercept(system, config.coupling, delta)
    row = {
        "delta_lin": float(delta),
        "slope": line.slope,
        "intercept_db": float(line.intercept_db),
        "nu_db": float(nu_constant()),
        "rho_c_db": None,
        "rho_r_db": None,
    }
    if config.scenario.has_distances:
        row["rho_c_db"] = float(
            lin_to_db(comm_snr(system, config.coupling.loss_comm, config.scenario.d_c_m))
        )
        row["rho_r_db"] = float(
            lin_to_db(radar_snr(system, config.coupling.loss_radar, config.scenario.d_r_m))
        )
    _emit(args, [row], SOP_COLUMNS)
    _note(args, f"sop: radar_db = 2*comm_db + {row['intercept_db']:.3f}")
    return 0


def cmd_range(args: argparse.Namespace) -> int:
    config = _load_config(args)
    require_family(config, "targets")
    comm_db, radar_db, system = resolve_targets(config)
    coupling = config.coupling
    ratio_db = float(delta_db(system, coupling, TargetSnrs(comm_db, radar_db)))
    d_r = solve_radar_range(system, coupling.loss_radar, db_to_lin(radar_db))
    delta = float(db_to_lin(ratio_db))
    row = {
        "comm_snr_db": float(comm_db),
        "radar_snr_db": float(radar_db),
        "delta_lin": delta,
        "delta_db": ratio_db,
        "d_c_m": delta * d_r,
        "d_r_m": d_r,
        "spectral_eff": spectral_efficiency_from_snr(db_to_lin(comm_db)),
    }
    _emit(args, [row], RANGE_COLUMNS)
    _note(args, f"range: delta={delta:.4g} d_r={d_r:.4g} m d_c={delta * d_r:.4g} m")
    return 0


def cmd_detect(args: argparse.Namespace) -> int:
    config = _load_config(args)
    require_family(config, "targets")
    spec = config.targets.detection
    if spec is None:
        raise DomainError("detect needs targets.detection with p_d and p_fa")
    single = DetectionSpec(p_d=spec.p_d, p_fa=spec.p_fa, n_samples=1)
    row = {
        "p_d": spec.p_d,
        "p_fa": spec.p_fa,
        "n_samples": spec.n_samples,
        "processing_gain_db": float(processing_gain(spec.n_samples)),
        "required_snr_albersheim_n1_db": float(required_snr_albersheim(single)),
        "required_snr_exact_n1_db": float(required_snr_exact(spec.p_d, spec.p_fa)),
        "required_snr_albersheim_n_db": float(required_snr_albersheim(spec)),
    }
    _emit(args, [row], DETECT_COLUMNS)
    _note(
        args,
        "detect: albersheim(n=1)={:.3f} dB exact(n=1)={:.3f} dB".format(
            row["required_snr_albersheim_n1_db"], row["required_snr_exact_n1_db"]
        ),
    )
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    config = _load_config(args)
    if args.output == "-":
        count = run_sweep(config, sys.stdout, args.format)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            count = run_sweep(config, fh, args.format)
    _note(args, f"sweep: {count} rows")
    return 0


def cmd_reproduce(args: argparse.Namespace) -> int:
    report = reproduce(args.artifact)
    _emit(args, report.as_dicts(), REPRO_COLUMNS)
    counts = {status: 0 for status in ("PASS", "FAIL", "SKIP")}
    for row in report.rows:
        counts[row.status] += 1
    _note(
        args,
        f"{args.artifact}: {counts['PASS']} PASS, {counts['FAIL']} FAIL, "
        f"{counts['SKIP']} SKIP",
    )
    return 0 if report.passed else 3


if __name__ == "__main__":
    sys.exit(main())
