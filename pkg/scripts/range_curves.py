#!/usr/bin/env python3
"""Distance-ratio curves over spectral efficiency for the band presets.

Traces delta = d_c / d_r against the rate target for each band at 30
and 20 dBm (10.8 dB radar requirement, 1024-sample integration), and
prints the rate at which each curve crosses delta = 1.

Usage: python scripts/range_curves.py --output range_curves.csv
"""

import argparse
import csv
import sys

from isaclink import CouplingState, db_to_lin, delta_db, snr_from_spectral_efficiency
from isaclink.rangeplan import TargetSnrs
from isaclink.report import crossing_spectral_efficiency, preset_system

BANDS = ("sub6", "mmwave", "subthz")
POWERS_DBM = (30.0, 20.0)
RADAR_TARGET_DB = 10.8
FULL = CouplingState(beta=1.0)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--output", default="-", help="CSV path, - for stdout")
    parser.add_argument("--r-min", type=float, default=1.0)
    parser.add_argument("--r-max", type=float, default=14.0)
    parser.add_argument("--points", type=int, default=131)
    args = parser.parse_args()

    sink = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["band", "p_dbm", "spectral_eff", "delta_lin"])
    step = (args.r_max - args.r_min) / (args.points - 1)
    for band in BANDS:
        for p_dbm in POWERS_DBM:
            system = preset_system(band, p_dbm=p_dbm)
            crossing = crossing_spectral_efficiency(system, FULL, RADAR_TARGET_DB)
            print(f"{band} @ {p_dbm:.0f} dBm: delta=1 at R = {crossing:.2f}", file=sys.stderr)
            for i in range(args.points):
                rate = args.r_min + step * i
                targets = TargetSnrs(float(snr_from_spectral_efficiency(rate)), RADAR_TARGET_DB)
                delta = float(db_to_lin(delta_db(system, FULL, targets)))
                writer.writerow([band, repr(p_dbm), repr(rate), repr(delta)])
    if sink is not sys.stdout:
        sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
