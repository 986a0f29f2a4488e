"""
How much the double sum cancels
===============================

The double sum has terms far larger than its total.  Doubles are fine up to
N ~ 70; beyond that fig8_double_sum switches to extended precision.
"""

# %%
import math
import time

import numpy as np

from colored_jones.fig8 import fig8_double_sum, fig8_log_jn
from colored_jones.phase import RootContext

print(" N   digits lost   double err   auto err   auto time")
for n in (20, 50, 80, 120, 160, 200):
    ctx = RootContext(n)
    i, k = np.triu_indices(n)
    lg = ctx.symbols.log_g
    lost = (np.max(2 * lg[k] - lg[i] - lg[k - i]) - fig8_log_jn(n).log_value) / math.log(10)
    exact = fig8_log_jn(n).value
    e_double = abs(fig8_double_sum(ctx, "double") - exact) / exact
    t0 = time.perf_counter()
    e_auto = abs(fig8_double_sum(ctx) - exact) / exact
    print(f"{n:3d}   {lost:10.2f}   {e_double:10.1e}   {e_auto:8.1e}   {time.perf_counter() - t0:7.3f}s")
