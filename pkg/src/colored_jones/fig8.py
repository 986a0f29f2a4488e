"""Closed forms for the colored Jones function of the figure-eight knot."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath
import numpy as np
from scipy.special import logsumexp

from .phase import RootContext, log_two_sin_factors

__all__ = ["LogSum", "fig8_double_sum", "fig8_single_sum", "fig8_log_jn", "le_colored_jones"]

_BLOCK = 1 << 16


@dataclass(frozen=True)
class LogSum:
    log_value: float

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _pochhammer_phase(n: int, i):
    """Quarter-unit exponent a_i with (q)_i = q^(a_i/4) * g_i."""
    return 3 * n * i + i * (i + 1)


def fig8_double_sum(ctx: RootContext, precision: str = "auto") -> complex:
    """Sum of (q)_{i+j} (qbar)_{i+j} / ((q)_i (qbar)_j) over i, j >= 0, i+j <= N-1.

    Each term is an exact root of unity times g_{i+j}^2 / (g_i g_j), and the
    terms cancel heavily: at N = 200 the largest exceeds the total by ~e^19.
    ``precision="auto"`` estimates that loss from the log tables and switches
    to mpmath with enough digits when double precision cannot deliver ~1e-12.
    """
    n = ctx.n
    i, k = np.triu_indices(n)
    j = k - i
    log_g = ctx.symbols.log_g
    log_terms = 2.0 * log_g[k] - log_g[i] - log_g[j]
    loss_digits = max(0.0, (log_terms.max() - fig8_log_jn(n).log_value) / math.log(10))
    if precision == "auto":
        precision = "double" if loss_digits < 2 else "extended"
    if precision == "double":
        sym = ctx.symbols
        terms = sym.qpoch[k] * sym.qpoch_bar[k] / (sym.qpoch[i] * sym.qpoch_bar[j])
        return complex(math.fsum(terms.real), math.fsum(terms.imag))
    if precision != "extended":
        raise ValueError(f"precision must be 'auto', 'double' or 'extended', got {precision!r}")
    with mpmath.workdps(20 + int(math.ceil(loss_digits))):
        two_sin = [2 * mpmath.sinpi(mpmath.mpf(m) / n) for m in range(1, n)]
        g = [mpmath.mpf(1)]
        for f in two_sin:
            g.append(g[-1] * f)
        inv_g = [1 / x for x in g]
        cos = [mpmath.cospi(mpmath.mpf(a) / (2 * n)) for a in range(4 * n)]
        sin = [mpmath.sinpi(mpmath.mpf(a) / (2 * n)) for a in range(4 * n)]
        re = mpmath.mpf(0)
        im = mpmath.mpf(0)
        # sum_k g_k^2 * sum_i phase(a_{k-i} - a_i) / (g_i g_{k-i})
        for kk in range(n):
            ii = range(kk + 1)
            w = [inv_g[a] * inv_g[kk - a] for a in ii]
            ph = [(_pochhammer_phase(n, kk - a) - _pochhammer_phase(n, a)) % (4 * n) for a in ii]
            scale = g[kk] * g[kk]
            re += scale * mpmath.fdot(w, [cos[p] for p in ph])
            im += scale * mpmath.fdot(w, [sin[p] for p in ph])
        return complex(float(re), float(im))


def fig8_single_sum(ctx: RootContext) -> float:
    """Sum over k of g_k^2 with g_k = prod_{j<=k} 2 sin(j*pi/N); overflows past N ~ 2200."""
    g = ctx.symbols.g
    with np.errstate(over="ignore"):
        return math.fsum(g * g)


def fig8_log_jn(n: int) -> LogSum:
    """log J_N(4_1) from the single sum, streamed in blocks in log space.

    Memory stays bounded by the block size, so N in the millions is fine.
    """
    if n < 1:
        raise ValueError("N must be >= 1")
    running_log_g = 0.0
    acc = 0.0  # log of the partial sum; the k = 0 term is g_0^2 = 1
    logs = log_two_sin_factors(n)
    for start in range(0, n - 1, _BLOCK):
        block = logs[start:start + _BLOCK]
        log_g = running_log_g + np.cumsum(block)
        running_log_g = float(log_g[-1])
        acc = float(logsumexp(np.concatenate(([acc], 2.0 * log_g))))
    return LogSum(acc)


def le_colored_jones(n: int, t: complex) -> complex:
    """Generic-t colored Jones polynomial of 4_1.

    Sum over k < N of prod_{l=1..k} (t^{(N+l)/2} - t^{-(N+l)/2}) (t^{(N-l)/2} - t^{-(N-l)/2}),
    with half-integer powers taken from the principal square root of ``t``.
    """
    if n < 1:
        raise ValueError("N must be >= 1")
    t = complex(t)
    if t == 0:
        raise ValueError("t must be non-zero")
    s = cmath.sqrt(t)
    total = 1 + 0j
    prod = 1 + 0j
    for l in range(1, n):
        a = s ** (n + l)
        b = s ** (n - l)
        prod *= (a - 1 / a) * (b - 1 / b)
        total += prod
    return total
