"""Arithmetic at the root of unity q = exp(2*pi*i/N).

Every power of q that appears in the crossing weights is a multiple of 1/4,
so phases are carried as integer counts of pi/(2N) ("quarter units") and only
converted to a complex number at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

__all__ = [
    "RootContext",
    "QSymbolTable",
    "phase_value",
    "two_sin_factors",
    "log_two_sin_factors",
    "q_symbol_table",
    "quantum_integer",
    "quantum_factorial",
    "q_binomial",
]


@dataclass(frozen=True)
class RootContext:
    """The color ``n`` together with q = exp(2*pi*i/n) and gamma = pi/n."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise ValueError(f"N must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def gamma(self) -> float:
        return math.pi / self.n

    @property
    def period(self) -> int:
        """Number of quarter units in a full turn (4N)."""
        return 4 * self.n

    @property
    def quarter_unit(self) -> complex:
        return phase_value(self, 1)

    @property
    def q(self) -> complex:
        return phase_value(self, 4)

    @cached_property
    def phase_table(self) -> np.ndarray:
        """``phase_table[a] == exp(i*pi*a/(2N))`` for a in [0, 4N)."""
        return np.array([phase_value(self, a) for a in range(self.period)])

    @cached_property
    def symbols(self) -> "QSymbolTable":
        return q_symbol_table(self)


def phase_value(ctx: RootContext, a: int) -> complex:
    """Return q**(a/4) = exp(i*pi*a/(2N)), reducing ``a`` modulo 4N first."""
    period = 4 * ctx.n
    a = int(a) % period
    # exact quadrant values avoid the cos(pi/2) ~ 6e-17 residue
    if 4 * a % period == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[4 * a // period]
    angle = math.pi * a / (2 * ctx.n)
    return complex(math.cos(angle), math.sin(angle))


def two_sin_factors(n: int) -> np.ndarray:
    """Array ``[2 sin(j*pi/n) for j in 1..n-1]``.

    The values 1 (6j = n or 6j = 5n) and 2 (2j = n) are returned exactly so
    that products of these factors tie exactly where they should.
    """
    j = np.arange(1, n)
    out = 2.0 * np.sin(j * np.pi / n)
    out[(6 * j == n) | (6 * j == 5 * n)] = 1.0
    out[2 * j == n] = 2.0
    return out


def log_two_sin_factors(n: int) -> np.ndarray:
    """Array ``[log(2 sin(j*pi/n)) for j in 1..n-1]`` with exact zeros at 6j in {n, 5n}."""
    j = np.arange(1, n)
    out = np.log(2.0 * np.sin(j * np.pi / n))
    out[(6 * j == n) | (6 * j == 5 * n)] = 0.0
    out[2 * j == n] = math.log(2.0)
    return out


@dataclass(frozen=True)
class QSymbolTable:
    """The q-Pochhammer symbols and their moduli for k = 0..N-1.

    Attributes
    ----------
    qpoch : ndarray of complex
        ``(q)_k = prod_{j=1..k} (1 - q^j)``.
    qpoch_bar : ndarray of complex
        ``(qbar)_k = prod_{j=1..k} (1 - q^-j)``, the complex conjugate of ``qpoch``.
    g : ndarray of float
        ``g_k = prod_{j=1..k} 2 sin(j*pi/N) = |(q)_k|``.  Overflows to inf
        beyond N ~ 2200; use ``log_g`` there.
    log_g : ndarray of float
    """

    n: int
    qpoch: np.ndarray = field(repr=False)
    qpoch_bar: np.ndarray = field(repr=False)
    g: np.ndarray = field(repr=False)
    log_g: np.ndarray = field(repr=False)


def q_symbol_table(ctx: RootContext) -> QSymbolTable:
    n = ctx.n
    qpoch = np.empty(n, dtype=complex)
    qpoch[0] = 1.0
    # 1 - q^j from the exact phase, j*4 quarter units
    for j in range(1, n):
        qpoch[j] = qpoch[j - 1] * (1.0 - phase_value(ctx, 4 * j))
    log_factors = log_two_sin_factors(n)
    log_g = np.concatenate(([0.0], np.cumsum(log_factors)))
    with np.errstate(over="ignore"):
        g = np.concatenate(([1.0], np.cumprod(two_sin_factors(n))))
    arrays = (qpoch, np.conj(qpoch), g, log_g)
    for arr in arrays:
        arr.setflags(write=False)
    return QSymbolTable(n, *arrays)


def quantum_integer(ctx: RootContext, k: int) -> complex:
    """Balanced quantum integer [k] = (q^{k/2} - q^{-k/2}) / (q^{1/2} - q^{-1/2})."""
    num = phase_value(ctx, 2 * k) - phase_value(ctx, -2 * k)
    den = phase_value(ctx, 2) - phase_value(ctx, -2)
    return num / den


def quantum_factorial(ctx: RootContext, k: int) -> complex:
    out = 1 + 0j
    for j in range(1, k + 1):
        out *= quantum_integer(ctx, j)
    return out


def q_binomial(ctx: RootContext, k: int, i: int) -> complex:
    """Gauss binomial [k]! / ([i]! [k-i]!) for 0 <= i <= k <= N-1."""
    if not 0 <= i <= k <= ctx.n - 1:
        raise ValueError(f"q_binomial needs 0 <= i <= k <= N-1, got k={k}, i={i}, N={ctx.n}")
    return quantum_factorial(ctx, k) / (quantum_factorial(ctx, i) * quantum_factorial(ctx, k - i))
