#!/usr/bin/env python3
"""Operating-point data for the four SNR-analysis presets.

For each preset, sweeps a shared distance (user and target co-located,
d_c = d_r = d) and records both SNRs, which traces the slope-2
operating line in the (comm, radar) dB plane. Also prints each line's
intercept at delta = 1 to stderr.

Usage: python scripts/sop_lines.py --output sop_lines.csv
"""

import argparse
import csv
import sys

from isaclink import CouplingState, comm_snr, lin_to_db, radar_snr, sop_intercept
from isaclink.report import preset_system

PRESETS = ("config1", "config2", "config3", "config4")
FULL = CouplingState(beta=1.0)


def log_grid(start: float, stop: float, points: int) -> list[float]:
    ratio = (stop / start) ** (1.0 / (points - 1))
    return [start * ratio**i for i in range(points)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output", default="-", help="CSV path, - for stdout")
    parser.add_argument("--d-min", type=float, default=10.0)
    parser.add_argument("--d-max", type=float, default=1e4)
    parser.add_argument("--points", type=int, default=121)
    args = parser.parse_args()

    sink = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["preset", "d_m", "rho_c_db", "rho_r_db"])
    for name in PRESETS:
        system = preset_system(name)
        line = sop_intercept(system, FULL, 1.0)
        print(f"{name}: radar_db = 2*comm_db + {line.intercept_db:.3f}", file=sys.stderr)
        for d in log_grid(args.d_min, args.d_max, args.points):
            writer.writerow(
                [
                    name,
                    repr(d),
                    repr(float(lin_to_db(comm_snr(system, 1.0, d)))),
                    repr(float(lin_to_db(radar_snr(system, 1.0, d)))),
                ]
            )
    if sink is not sys.stdout:
        sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
