"""Lobachevsky function, Clausen function and the dilogarithm.

All three are built from the same Bernoulli-number expansions:

* ``Cl2(t) = t - t log|t| + sum_k |B_2k| t^(2k+1) / (2k (2k+1) (2k)!)`` for
  ``|t| <= pi`` after reduction modulo 2*pi;
* ``Li2(z) = sum_n B_n w^(n+1) / (n+1)!`` with ``w = -log(1-z)``, used on the
  part of the closed unit disk away from 0 and 1.
"""

from __future__ import annotations

import cmath
import math

import mpmath

__all__ = [
    "CATALAN",
    "clausen2",
    "im_li2_unit",
    "lobachevsky",
    "li2",
    "ideal_tet_volume",
    "V3",
]

CATALAN = 0.915965594177219015054603514932

# series coefficients from exact Bernoulli numbers (scipy's lose ~1e-12 at high order)
with mpmath.workdps(40):
    _CL2_COEF = tuple(
        float(abs(mpmath.bernoulli(2 * k)) / (2 * k * (2 * k + 1) * mpmath.factorial(2 * k))) for k in range(1, 31)
    )
    _LI2_COEF = tuple(float(mpmath.bernoulli(n) / mpmath.factorial(n + 1)) for n in range(41))


def _finite(theta):
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta}")
    return theta


def clausen2(theta: float) -> float:
    """Clausen function Cl2(theta) = sum_{n>=1} sin(n theta) / n^2."""
    t = math.remainder(_finite(theta), 2 * math.pi)
    if t == 0.0:
        return 0.0
    a = abs(t)
    # Horner in a^2 over the Bernoulli tail
    a2 = a * a
    tail = 0.0
    for c in _CL2_COEF[::-1]:
        tail = tail * a2 + c
    val = a - a * math.log(a) + a * a2 * tail
    return math.copysign(val, t)


def im_li2_unit(theta: float) -> float:
    """Im Li2(exp(i theta)), i.e. the Clausen function Cl2(theta)."""
    return clausen2(theta)


def lobachevsky(theta: float) -> float:
    """Lobachevsky function -int_0^theta log|2 sin x| dx = Cl2(2 theta) / 2."""
    theta = _finite(theta)
    return 0.5 * clausen2(2.0 * math.remainder(theta, math.pi))


V3 = 3.0 * lobachevsky(math.pi / 3)
"""Volume of the regular ideal hyperbolic tetrahedron."""


def _li2_series(z: complex) -> complex:
    total = 0j
    term = z
    n = 1
    while True:
        add = term / (n * n)
        total += add
        if abs(add) < 1e-17 * max(abs(total), 1e-300):
            return total
        n += 1
        term *= z


def li2(z: complex) -> complex:
    """Principal-branch dilogarithm on the closed unit disk |z| <= 1."""
    z = complex(z)
    r = abs(z)
    if r > 1.0 + 1e-14:
        raise ValueError(f"li2 is implemented for |z| <= 1 only, got |z| = {r}")
    if z == 1:
        return complex(math.pi ** 2 / 6)
    if r <= 0.5:
        return _li2_series(z)
    if abs(1 - z) <= 0.5:
        # reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
        return math.pi ** 2 / 6 - cmath.log(z) * cmath.log(1 - z) - _li2_series(1 - z)
    w = -cmath.log(1 - z)
    total = 0j
    power = w
    for c in _LI2_COEF:
        total += c * power
        power *= w
    return total


def ideal_tet_volume(alpha: float, beta: float, gamma: float) -> float:
    """Volume of an ideal tetrahedron from dihedral angles summing to pi."""
    if abs(alpha + beta + gamma - math.pi) > 1e-9:
        raise ValueError(f"dihedral angles must sum to pi, got {alpha + beta + gamma}")
    return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma)
