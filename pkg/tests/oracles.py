"""Independent reference computations used to check the package.

Nothing here imports from clusterfactor. Distances are found by brute-force
scan in 60-digit arithmetic, binomial tails come from scipy, and the
pipeline oracle enumerates every (level, d) pair.
"""

import math

import mpmath as mp
from scipy import stats

P_TH, C1, C2 = 0.0062, 0.13, 0.61
FOOTPRINT_VD = {1: (210, 5), 2: (1386, 9), 3: (10000, 15)}


def brute_distance(L, Lam, V, p, d_max=400, p_th=P_TH, c1=C1, c2=C2):
    """Smallest d meeting 1-(1-p_f)^(Lam V) <= 1/(640 L^4), by scan."""
    with mp.workdps(60):
        target = 1 / (mp.mpf(640) * mp.mpf(L) ** 4)
        base = mp.mpf(c2) * mp.mpf(p) / mp.mpf(p_th)
        for d in range(1, d_max + 1):
            pf = mp.mpf(c1) * base ** ((d + 1) // 2)
            if 1 - (1 - pf) ** (Lam * V) <= target:
                return d
    return None


def sk_length(L):
    return max(1, math.ceil(19.6 * math.log10(640 * L**4) - 10.5))


def brute_plan(L, p, d_max=200):
    """Minimum-runtime feasible (level, d) over levels 1..3 and d in 1..d_max; None if nothing fits."""
    Lam = sk_length(L)
    target = 1 / (640 * L**4)
    best = None
    for level, (V, D) in FOOTPRINT_VD.items():
        ra = 35 ** ((3**level - 1) // 2) * p ** (3**level)
        ry = 7 ** ((3**level - 1) // 2) * p ** (3**level)
        for d in range(1, d_max + 1):
            pf = C1 * (C2 * p / P_TH) ** ((d + 1) // 2)
            fail = -math.expm1(Lam * V * math.log1p(-pf))
            if fail <= target and ra <= pf and ry <= pf:
                cost = D * d
                if best is None or cost < best[0]:
                    best = (cost, level, d)
                break  # larger d at this level only costs more
    return None if best is None else best[1:]


def binom_tail(n, q, k_min):
    return float(stats.binom.sf(k_min - 1, n, q))


def ycorr_double_sum(p, n=15, h=0.5):
    return float(sum(stats.binom.pmf(m, n, h) * stats.binom.sf(n - m, n, p) for m in range(n + 1)))


def top_y_exact(p):
    return 0.5 * float(stats.binom.sf(1, 8, p))
