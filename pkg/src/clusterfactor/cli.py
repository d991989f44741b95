"""Command-line front end.

    clusterfactor estimate --bits 1024 --perr 6.2e-4
    clusterfactor sweep --bits 4:8192:64 --perr 1e-5:6e-3:64 --format csv
    clusterfactor contour --metric runtime --threshold 31557600 --perr 1e-5:6e-3:32
    clusterfactor simulate --perr 1e-2 --trials 10000000 --seed 7

Ranges are ``lo:hi:n`` with n log-spaced samples. Usage errors exit 2, domain
errors (above threshold, insufficient distillation, unsatisfiable bound)
exit 1 with a JSON error object on stderr.

A hardware profile file holds ``key = value`` lines with keys p_th, C1, C2,
T_ns, M_mm, cf_m_per_s; it is read from ``--profile`` or from the path in
``$CLUSTERFACTOR_PROFILE``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict

from . import distillation
from .model import EstimationError, HardwareProfile, PhysicalConstants, ProblemInstance
from .montecarlo import SimConfig, simulate
from .pipeline import Metric, ResourceReport, estimate
from .sweep import DEFAULT_L_AXIS, DEFAULT_P_AXIS, CellError, contour, find_discontinuities, log_axis, sweep

PROFILE_ENV = "CLUSTERFACTOR_PROFILE"
PROFILE_KEYS = ("p_th", "C1", "C2", "T_ns", "M_mm", "cf_m_per_s")

SWEEP_COLUMNS = (
    "L_bits", "p", "status", "Lambda", "level_A", "level_Y", "footprint_level", "d", "p_f",
    "N1_unit_cells", "N2_unit_cells", "modules_total", "S_x_m", "S_y_m",
    "runtime_seconds", "runtime_years",
)


def read_profile(path: str) -> tuple[PhysicalConstants, HardwareProfile]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            key = key.strip()
            if not sep or key not in PROFILE_KEYS:
                raise ValueError(f"{path}:{lineno}: expected one of {', '.join(PROFILE_KEYS)} as 'key = value'")
            values[key] = float(val)
    k0, hw0 = PhysicalConstants(), HardwareProfile()
    k = PhysicalConstants(
        p_th=values.get("p_th", k0.p_th), C1=values.get("C1", k0.C1), C2=values.get("C2", k0.C2)
    )
    hw = HardwareProfile(
        T=values["T_ns"] * 1e-9 if "T_ns" in values else hw0.T,
        M=values["M_mm"] * 1e-3 if "M_mm" in values else hw0.M,
        c_f=values.get("cf_m_per_s", hw0.c_f),
    )
    return k, hw


def _bits(text: str) -> int:
    try:
        L = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bits must be an integer, got {text!r}") from None
    if L < 2:
        raise argparse.ArgumentTypeError(f"bits must be >= 2, got {L}")
    return L


def _perr(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"error rate must be a number, got {text!r}") from None
    if not 0 <= p < 1:
        raise argparse.ArgumentTypeError(f"error rate must satisfy 0 <= p < 1, got {p}")
    return p


def _range(conv, integer: bool):
    def parse(text: str) -> list:
        parts = text.split(":")
        if len(parts) == 1:
            return [conv(parts[0])]
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected lo:hi:n, got {text!r}")
        lo, hi = conv(parts[0]), conv(parts[1])
        try:
            n = int(parts[2])
        except ValueError:
            raise argparse.ArgumentTypeError(f"sample count must be an integer, got {parts[2]!r}") from None
        if n < 0 or hi < lo or (lo <= 0 and n > 1):
            raise argparse.ArgumentTypeError(f"invalid range {text!r}")
        return log_axis(lo, hi, n, integer=integer)
    return parse


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clusterfactor", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--profile", help=f"hardware profile file (default: ${PROFILE_ENV})")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", "-o", help="write to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("estimate", parents=[common], help="resources for one (L, p)")
    p.add_argument("--bits", type=_bits, required=True)
    p.add_argument("--perr", type=_perr, required=True)

    p = sub.add_parser("sweep", parents=[common], help="grid of estimates")
    p.add_argument("--bits", type=_range(_bits, True), default=log_axis(*DEFAULT_L_AXIS, integer=True))
    p.add_argument("--perr", type=_range(_perr, False), default=log_axis(*DEFAULT_P_AXIS))
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("contour", parents=[common], help="largest L within a bound, per p")
    p.add_argument("--metric", choices=[m.value for m in Metric], required=True)
    p.add_argument("--threshold", type=float, required=True,
                   help="seconds for runtime, module count for modules, meters for sx/sy")
    p.add_argument("--perr", type=_range(_perr, False), default=log_axis(*DEFAULT_P_AXIS))

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo spare-distillery shortages")
    p.add_argument("--perr", type=_perr, required=True)
    p.add_argument("--trials", type=_positive_int, required=True)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _finite(x: float):
    return x if math.isfinite(x) else None


def _sweep_row(L: int, p: float, cell) -> dict:
    row = dict.fromkeys(SWEEP_COLUMNS, "")
    row.update(L_bits=L, p=p)
    if isinstance(cell, CellError):
        row["status"] = cell.kind
        return row
    row.update(
        status="ok", Lambda=cell.Lambda, level_A=cell.plan.level_A, level_Y=cell.plan.level_Y,
        footprint_level=cell.plan.footprint_level, d=cell.d.d, p_f=cell.p_f,
        N1_unit_cells=cell.geometry.N1, N2_unit_cells=cell.geometry.N2,
        modules_total=cell.modules.total, S_x_m=cell.dimensions.S_x_m, S_y_m=cell.dimensions.S_y_m,
        runtime_seconds=cell.runtime.seconds, runtime_years=cell.runtime.years,
    )
    return row


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def run_estimate(args, k, hw) -> str:
    report = estimate(ProblemInstance(args.bits, args.perr), k, hw)
    if args.format == "csv":
        return _csv(SWEEP_COLUMNS, [_sweep_row(args.bits, args.perr, report)])
    return _json(report.to_dict())


def run_sweep(args, k, hw) -> str:
    grid = sweep(args.bits, args.perr, k, hw, workers=args.workers)
    if args.format == "csv":
        rows = [_sweep_row(L, p, cell) for L, row in zip(grid.L_values, grid.cells)
                for p, cell in zip(grid.p_values, row)]
        return _csv(SWEEP_COLUMNS, rows)
    cells = []
    for L, row in zip(grid.L_values, grid.cells):
        for p, cell in zip(grid.p_values, row):
            if isinstance(cell, ResourceReport):
                cells.append({"L_bits": L, "p": p, "report": cell.to_dict()})
            else:
                cells.append({"L_bits": L, "p": p, "error": asdict(cell)})
    jumps = {str(L): [asdict(j) for j in find_discontinuities(grid.p_values, row)]
             for L, row in zip(grid.L_values, grid.cells)}
    return _json({"L_values": list(grid.L_values), "p_values": list(grid.p_values),
                  "cells": cells, "discontinuities_along_p": jumps})


def run_contour(args, k, hw) -> str:
    line = contour(args.metric, args.threshold, args.perr, k, hw)
    if args.format == "csv":
        rows = [{"p": pt.p, "L_boundary_bits": "" if pt.L_boundary is None else pt.L_boundary,
                 "status": pt.error.kind if pt.error else "ok"} for pt in line.points]
        return _csv(("p", "L_boundary_bits", "status"), rows)
    return _json({
        "metric": line.metric.value,
        "threshold": _finite(line.threshold),
        "threshold_unit": line.unit,
        "points": [{"p": pt.p, "L_boundary_bits": pt.L_boundary,
                    "error": asdict(pt.error) if pt.error else None} for pt in line.points],
        "discontinuities": [asdict(j) for j in line.discontinuities],
    })


def run_simulate(args, k, hw) -> str:
    res = simulate(SimConfig(args.perr, args.trials, args.seed))
    exact = {
        "shortage_A": distillation.shortage_prob_A(args.perr),
        "shortage_Ycorr": distillation.shortage_prob_Ycorr_exact(args.perr),
        "top_Y_shortage": distillation.shortage_prob_topY(args.perr),
    }
    est = {"shortage_A": res.shortage_A, "shortage_Ycorr": res.shortage_Ycorr,
           "top_Y_shortage": res.top_Y_shortage}
    if args.format == "csv":
        rows = [{"event": name, "rate_per_step": e.rate, "stderr_per_step": e.stderr, "events": e.events,
                 "trials": e.trials, "exact_per_step": exact[name]} for name, e in est.items()]
        return _csv(("event", "rate_per_step", "stderr_per_step", "events", "trials", "exact_per_step"), rows)
    return _json({
        "p_circuit_fail": args.perr, "trials": args.trials, "seed": args.seed,
        "events": {name: {"rate_per_step": e.rate, "stderr_per_step": e.stderr, "events": e.events,
                          "exact_per_step": exact[name]} for name, e in est.items()},
    })


COMMANDS = {"estimate": run_estimate, "sweep": run_sweep, "contour": run_contour, "simulate": run_simulate}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    profile = args.profile or os.environ.get(PROFILE_ENV)
    try:
        k, hw = read_profile(profile) if profile else (PhysicalConstants(), HardwareProfile())
    except (OSError, ValueError) as exc:
        parser.error(f"bad profile: {exc}")
    try:
        text = COMMANDS[args.command](args, k, hw)
    except EstimationError as exc:
        sys.stderr.write(_json({"error": exc.kind, "message": str(exc)}))
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
