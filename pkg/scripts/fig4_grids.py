"""Write runtime/module/size grids and their contours over (L, p) as CSV.

    python scripts/fig4_grids.py --out out/ --workers 8
"""

import argparse
import csv
from pathlib import Path

from clusterfactor.hardware import SECONDS_PER_YEAR
from clusterfactor.pipeline import ResourceReport
from clusterfactor.sweep import DEFAULT_L_AXIS, DEFAULT_P_AXIS, contour, log_axis, sweep

CONTOURS = [("runtime", SECONDS_PER_YEAR), ("modules", 1e9), ("sx", 100.0), ("sy", 100.0)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="fig4_out")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--n", type=int, default=64, help="samples per axis")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    L_axis = log_axis(DEFAULT_L_AXIS[0], DEFAULT_L_AXIS[1], args.n, integer=True)
    p_axis = log_axis(DEFAULT_P_AXIS[0], DEFAULT_P_AXIS[1], args.n)
    grid = sweep(L_axis, p_axis, workers=args.workers)
    with open(out / "grid.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["L_bits", "p", "footprint_level", "d", "runtime_years", "modules_total", "S_x_m", "S_y_m"])
        for L, row in zip(grid.L_values, grid.cells):
            for p, c in zip(grid.p_values, row):
                if isinstance(c, ResourceReport):
                    w.writerow([L, p, c.plan.footprint_level, c.d.d, c.runtime.years,
                                c.modules.total, c.dimensions.S_x_m, c.dimensions.S_y_m])
                else:
                    w.writerow([L, p, "", "", "", "", "", ""])

    for metric, threshold in CONTOURS:
        line = contour(metric, threshold, p_axis)
        with open(out / f"contour_{metric}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["p", "L_boundary_bits"])
            for pt in line.points:
                w.writerow([pt.p, pt.L_boundary if pt.L_boundary is not None else ""])
        steps = sum(j.level_changed for j in line.discontinuities)
        print(f"{metric} <= {threshold:g} {line.unit}: {steps} level steps along the contour")
    print(f"wrote {out}/")


if __name__ == "__main__":
    main()
