"""
Two more routes to the same number
==================================

The critical point of the dilogarithm potential, and the difference
equations satisfied by the double-sum summand.
"""

# %%
import cmath
import math

from colored_jones.asymptotic import (
    FIG8_VOLUME,
    qpoch_asymptotic_gap,
    saddle_solve,
    summand_ratio_analysis,
    zw2_residuals,
)
from colored_jones.special import V3

# %%
# Saddle point
# ------------
# The blow-up u = zw sends the non-trivial solution to z = 0, u^2 - u + 1 = 0.
s = saddle_solve()
for u in s.roots_u:
    print(f"u = {u:.12f}   arg/pi = {cmath.phase(u) / math.pi:+.6f}")
print(f"Im F0 = {s.im_f0:.12f}   6 L(pi/3) = {FIG8_VOLUME:.12f}")
print(f"Im F0 / v3 = {s.im_f0 / V3:.12f}")
print("trivial solution residuals at (1, 1):", zw2_residuals(1, 1))

# %%
# The q-Pochhammer symbol and its dilogarithm asymptote
# -----------------------------------------------------
for n in (100, 1000, 10000, 100000):
    print(f"N={n:6d}  gap(alpha=0.3) = {qpoch_asymptotic_gap(0.3, n):.3e}")

# %%
# Difference equations
# --------------------
# f(i,j)/f(i-1,j) = 1 is the first saddle equation at z = q^i, w = q^j.
# The designated value g_{5N/6}^2 grows at the right rate; the actual largest
# |f| sits elsewhere, because the phases cancel inside the sum.
for n in (60, 600, 1200, 3000):
    r = summand_ratio_analysis(n)
    print(f"N={n:5d}  v_n={r.v_n:.6f}  gap={r.v_n - FIG8_VOLUME:+.4f}  "
          f"ratio err={r.max_ratio_error:.1e}  argmax |f| at {r.argmax_ij}")
