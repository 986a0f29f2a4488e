"""
Growth rate of J_N(4_1)
=======================

2 pi log J_N / N for growing N, the max-term bounds that pin it down, and a
three-parameter fit for the limit.
"""

# %%
import math

from colored_jones.asymptotic import FIG8_VOLUME, ekholm_report, extrapolate_volume, volume_sequence

print(f"target 6 L(pi/3) = {FIG8_VOLUME:.12f}")

# %%
# Raw sequence
# ------------
# Computed from the single sum in log space, so N in the millions is cheap.
table = volume_sequence([10, 100, 250, 500, 1000, 2000, 10**4, 10**5, 10**6])
for r in table.rows:
    print(f"N={r.n:8d}  log J_N={r.log_jn:16.6f}  a_N={r.a_n:.9f}")

# %%
# Fit a_N = v + b log(N)/N + c/N
# ------------------------------
fit = volume_sequence([250, 500, 1000, 2000])
v = extrapolate_volume(fit)
print(f"v = {v:.9f}  (error {v - FIG8_VOLUME:+.2e}, rms residual {fit.fit_residual:.1e})")

# %%
# Max-term bounds
# ---------------
# J_N sits between its largest term g_k*^2 and N times it, so the log of
# either bound divided by N has the same limit.
for n in (6, 60, 600, 6000):
    r = ekholm_report(n)
    print(f"N={n:5d}  k*={r.k_star:5d}  5N/6={5 * n / 6:8.1f}  "
          f"{r.log_g2:.4f} <= {r.log_jn:.4f} <= {math.log(n) + r.log_g2:.4f}  riemann={r.riemann_sum:.6f}")
print(f"limit of the riemann sum: {FIG8_VOLUME / (2 * math.pi):.6f}")
