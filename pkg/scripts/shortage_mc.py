"""Compare simulated spare-distillery shortage rates with the exact sums."""

import argparse
import math

from clusterfactor.distillation import shortage_prob_A, shortage_prob_topY, shortage_prob_Ycorr, shortage_prob_Ycorr_exact
from clusterfactor.montecarlo import SimConfig, simulate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=10_000_000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    for p in (1e-2, 3e-3, 1e-3):
        res = simulate(SimConfig(p, args.trials, args.seed))
        rows = [
            ("A", res.shortage_A, shortage_prob_A(p), 680 * p**3),
            ("Ycorr", res.shortage_Ycorr, shortage_prob_Ycorr_exact(p), shortage_prob_Ycorr(p)),
            ("topY", res.top_Y_shortage, shortage_prob_topY(p), None),
        ]
        print(f"p = {p:g}")
        for name, est, exact, leading in rows:
            z = (est.rate - exact) / math.sqrt(exact * (1 - exact) / est.trials) if exact else 0.0
            lead = f"  leading {leading:.3e}" if leading is not None else ""
            print(f"  {name:6s} mc {est.rate:.3e} +- {est.stderr:.1e}  exact {exact:.3e}  z {z:+.2f}{lead}")


if __name__ == "__main__":
    main()
