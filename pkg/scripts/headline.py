"""Print the L=1024 estimates next to the figures quoted in the literature."""

from clusterfactor.hardware import SECONDS_PER_YEAR
from clusterfactor.model import ProblemInstance
from clusterfactor.pipeline import estimate, max_L_within

QUOTED = {6.2e-4: 2.15, 6.2e-5: 1.14}


def main():
    for p, years in QUOTED.items():
        r = estimate(ProblemInstance(1024, p))
        print(f"p = {p:.1e}")
        print(f"  Lambda = {r.Lambda}, level A/Y = {r.plan.level_A}/{r.plan.level_Y}, d = {r.d.d}")
        print(f"  N1 x N2 = {r.geometry.N1} x {r.geometry.N2} unit cells")
        print(f"  modules = {r.modules.total:.4e}")
        print(f"  S_x = {r.dimensions.S_x_m:.1f} m, S_y = {r.dimensions.S_y_m:.1f} m, "
              f"S_z <= {r.dimensions.S_z_max_m:.1f} m")
        print(f"  runtime = {r.runtime.seconds:.4e} s = {r.runtime.years:.3f} yr (quoted {years} yr)")
        print(f"  overhead: temporal {r.runtime.temporal_overhead:.3e}, qubit {r.runtime.qubit_overhead:.3e}")
    L = max_L_within(SECONDS_PER_YEAR, 6.2e-4, "runtime")
    print(f"largest L finishing within one year at p = 6.2e-4: {L} (quoted ~820)")


if __name__ == "__main__":
    main()
