"""Three routes to the growth rate of J_N(4_1), and the volume sequence.

* max-term bounds on the single sum (:func:`ekholm_report`),
* the saddle point of the dilogarithm potential (:func:`saddle_solve`),
* the partial difference equations of the double-sum summand
  (:func:`summand_ratio_analysis`),

plus :func:`volume_sequence` / :func:`extrapolate_volume` for the finite-N data.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .fig8 import fig8_log_jn
from .phase import RootContext, log_two_sin_factors, phase_value
from .special import im_li2_unit, li2, lobachevsky

__all__ = [
    "FIG8_VOLUME",
    "VolumeRow",
    "VolumeTable",
    "volume_sequence",
    "extrapolate_volume",
    "EkholmReport",
    "ekholm_report",
    "g_is_unimodal",
    "SaddleReport",
    "saddle_potential",
    "saddle_gradient",
    "zw1_residuals",
    "zw2_residuals",
    "blowup_residuals",
    "saddle_solve",
    "RatioReport",
    "summand_ratio_analysis",
    "qpoch_asymptotic_gap",
]

FIG8_VOLUME = 6.0 * lobachevsky(math.pi / 3)
_EXP_LIMIT = 709.0


def _exp_or_inf(x: float) -> float:
    return math.exp(x) if x < _EXP_LIMIT else math.inf


def _log_g(n: int) -> np.ndarray:
    return np.concatenate(([0.0], np.cumsum(log_two_sin_factors(n))))


# -- volume sequence -----------------------------------------------------------


@dataclass(frozen=True)
class VolumeRow:
    n: int
    log_jn: float
    a_n: float


@dataclass
class VolumeTable:
    rows: tuple[VolumeRow, ...]
    extrapolated: float | None = None
    fit_residual: float | None = None
    fit_coefficients: tuple[float, ...] | None = field(default=None, repr=False)


def volume_sequence(n_values) -> VolumeTable:
    """Rows (N, log J_N, 2*pi*log J_N / N), sorted by N with duplicates dropped."""
    ns = sorted({int(n) for n in n_values})
    if ns and ns[0] < 1:
        raise ValueError("all N must be >= 1")
    rows = []
    for n in ns:
        log_jn = fig8_log_jn(n).log_value
        rows.append(VolumeRow(n, log_jn, 2 * math.pi * log_jn / n))
    return VolumeTable(tuple(rows))


def extrapolate_volume(table: VolumeTable) -> float:
    """Least-squares fit a_N = v + b log(N)/N + c/N; returns v.

    Also stores ``v`` and the RMS residual of the fit on ``table``.
    """
    if len(table.rows) < 3:
        raise ValueError(f"need at least 3 rows to fit 3 parameters, got {len(table.rows)}")
    n = np.array([r.n for r in table.rows], dtype=float)
    a = np.array([r.a_n for r in table.rows])
    design = np.column_stack([np.ones_like(n), np.log(n) / n, 1.0 / n])
    coef, *_ = np.linalg.lstsq(design, a, rcond=None)
    resid = a - design @ coef
    table.extrapolated = float(coef[0])
    table.fit_residual = float(np.sqrt(np.mean(resid ** 2)))
    table.fit_coefficients = tuple(float(c) for c in coef)
    return table.extrapolated


# -- max-term bounds -------------------------------------------------------------


@dataclass(frozen=True)
class EkholmReport:
    n: int
    k_star: int
    g2: float
    jn: float
    lower_ok: bool
    upper_ok: bool
    riemann_sum: float
    log_g2: float
    log_jn: float


def _k_star(log_g: np.ndarray) -> int:
    # last index attaining the maximum (ties go to the larger k)
    return int(len(log_g) - 1 - np.argmax(log_g[::-1]))


def ekholm_report(n: int) -> EkholmReport:
    """Max-term bounds g_{k*}^2 <= J_N <= N g_{k*}^2, compared in log space."""
    if n < 1:
        raise ValueError("N must be >= 1")
    logs = log_two_sin_factors(n)
    log_g = np.concatenate(([0.0], np.cumsum(logs)))
    k = _k_star(log_g)
    log_g2 = 2.0 * math.fsum(logs[:k])
    log_jn = fig8_log_jn(n).log_value
    return EkholmReport(
        n=n,
        k_star=k,
        g2=_exp_or_inf(log_g2),
        jn=_exp_or_inf(log_jn),
        lower_ok=log_g2 <= log_jn,
        upper_ok=log_jn <= math.log(n) + log_g2,
        riemann_sum=log_g2 / n,
        log_g2=log_g2,
        log_jn=log_jn,
    )


def g_is_unimodal(n: int) -> bool:
    """g_k non-increasing for k <= floor(N/6), non-decreasing on [ceil(N/6), floor(5N/6)]."""
    logs = log_two_sin_factors(n)  # logs[k-1] = log(g_k / g_{k-1})
    k = np.arange(1, n)
    falling = logs[k <= n // 6]
    # step from g_k to g_{k+1} with ceil(N/6) <= k and k+1 <= floor(5N/6)
    rising = logs[(k - 1 >= -(-n // 6)) & (k <= 5 * n // 6)]
    return bool(np.all(falling <= 0.0) and np.all(rising >= 0.0))


# -- saddle point -----------------------------------------------------------------


def saddle_potential(z: complex, w: complex) -> complex:
    """F(z, w) = -Li2(zw) + Li2(1/(zw)) + Li2(z) - Li2(1/w)."""
    return -li2(z * w) + li2(1 / (z * w)) + li2(z) - li2(1 / w)


def saddle_gradient(z: complex, w: complex) -> tuple[complex, complex]:
    """(z dF/dz, w dF/dw), from d Li2(x)/dx = -log(1-x)/x."""
    common = cmath.log(1 - z * w) + cmath.log(1 - 1 / (z * w))
    return common - cmath.log(1 - z), common - cmath.log(1 - 1 / w)


def zw1_residuals(z: complex, w: complex) -> tuple[complex, complex]:
    """Residuals of (1-zw)(1-1/(zw)) = 1-z and (1-zw)(1-1/(zw)) = 1-1/w."""
    lhs = (1 - z * w) * (1 - 1 / (z * w))
    return lhs - (1 - z), lhs - (1 - 1 / w)


def zw2_residuals(z, w):
    """Polynomial form: z^2w^2 - zw - z^2w + 1 and z^2w^2 - zw - z + 1."""
    return z * z * w * w - z * w - z * z * w + 1, z * z * w * w - z * w - z + 1


def blowup_residuals(z, u):
    """The polynomial system after substituting u = zw."""
    return u * u - u - z * u + 1, u * u - u - z + 1


@dataclass(frozen=True)
class SaddleReport:
    roots_u: tuple[complex, complex]
    im_f0: float
    f0: complex
    trivial_residuals: tuple[complex, complex]


def saddle_solve() -> SaddleReport:
    """Non-trivial critical point of F via the blow-up u = zw, z -> 0, w -> infinity.

    The blown-up system leaves z = 0 and u^2 - u + 1 = 0.  At z = 0 the terms
    Li2(z) and Li2(1/w) are Li2(0) = 0, so F0 = -Li2(u) + Li2(1/u) at the root
    u = exp(5 pi i / 3).
    """
    disc = cmath.sqrt(1 - 4)
    roots = ((1 + disc) / 2, (1 - disc) / 2)
    u0 = roots[1]  # exp(5 pi i / 3): negative imaginary part
    f0 = -li2(u0) + li2(1 / u0) + li2(0) - li2(0)
    return SaddleReport(
        roots_u=roots,
        im_f0=2.0 * im_li2_unit(math.pi / 3),
        f0=f0,
        trivial_residuals=zw2_residuals(1, 1),
    )


# -- partial difference equations ---------------------------------------------------


@dataclass(frozen=True)
class RatioReport:
    n: int
    max_ratio_error: float
    max_zw1_mismatch: float
    samples: int
    k_designated: int
    log_f_max: float
    f_max: float
    v_n: float
    argmax_ij: tuple[int, int]
    argmax_log_abs_f: float


def _sample_pairs(n: int, count: int, rng: np.random.Generator):
    """Admissible (i, j) with i >= 1, j >= 1, i + j <= N - 1."""
    pairs = [(i, j) for i in range(1, n) for j in range(1, n - i)] if n <= 60 else None
    if pairs is not None:
        return pairs
    out = []
    while len(out) < count:
        i, j = (int(x) for x in rng.integers(1, n - 1, size=2))
        if i + j <= n - 1:
            out.append((i, j))
    return out


def summand_ratio_analysis(n: int, samples: int = 400, seed: int = 0) -> RatioReport:
    """Difference-equation route for f(i,j) = (q)_{i+j} (qbar)_{i+j} / ((q)_i (qbar)_j).

    Checks the two ratio formulas against f itself at sampled (i, j), checks
    that "ratio = 1" is the first saddle equation at z = q^i, w = q^j, and
    reports the designated value f_MAX = g_{floor(5N/6)}^2 with its growth
    rate, plus (diagnostic only) the actual maximiser of |f|.
    """
    if n < 2:
        raise ValueError("N must be >= 2")
    ctx = RootContext(n)
    log_g = _log_g(n)

    def log_f(i, j):
        # log modulus plus exact quarter-unit phase: (q)_i = q^{(3Ni+i(i+1))/4} g_i
        a = (3 * n * j + j * (j + 1)) - (3 * n * i + i * (i + 1))
        return 2 * log_g[i + j] - log_g[i] - log_g[j], a

    rng = np.random.default_rng(seed)
    ratio_err = 0.0
    zw1_err = 0.0
    pairs = _sample_pairs(n, samples, rng)
    for i, j in pairs:
        q_ij = phase_value(ctx, 4 * (i + j))
        z, w = phase_value(ctx, 4 * i), phase_value(ctx, 4 * j)
        common = (1 - q_ij) * (1 - 1 / q_ij)
        for (lf, a), (lf0, a0), closed, rhs in (
            (log_f(i, j), log_f(i - 1, j), common / (1 - z), 1 - z),
            (log_f(i, j), log_f(i, j - 1), common / (1 - 1 / w), 1 - 1 / w),
        ):
            direct = math.exp(lf - lf0) * phase_value(ctx, a - a0)
            ratio_err = max(ratio_err, abs(direct - closed) / abs(closed))
        r1, r2 = zw1_residuals(z, w)
        # (ratio - 1) * (1 - z) is exactly the zw1 residual
        zw1_err = max(zw1_err, abs((common / (1 - z) - 1) * (1 - z) - r1))
        zw1_err = max(zw1_err, abs((common / (1 - 1 / w) - 1) * (1 - 1 / w) - r2))

    k = 5 * n // 6
    log_f_max = 2.0 * float(log_g[k])
    i_idx, k_idx = np.triu_indices(n)
    j_idx = k_idx - i_idx
    vals = 2 * log_g[k_idx] - log_g[i_idx] - log_g[j_idx]
    best = int(np.argmax(vals))
    return RatioReport(
        n=n,
        max_ratio_error=ratio_err,
        max_zw1_mismatch=zw1_err,
        samples=len(pairs),
        k_designated=k,
        log_f_max=log_f_max,
        f_max=_exp_or_inf(log_f_max),
        v_n=2 * math.pi * log_f_max / n,
        argmax_ij=(int(i_idx[best]), int(j_idx[best])),
        argmax_log_abs_f=float(vals[best]),
    )


# -- quantum dilogarithm asymptotics ---------------------------------------------------


def qpoch_asymptotic_gap(alpha: float, n: int) -> float:
    """Per-N gap between log|(q)_k| and its dilogarithm asymptote, k = floor(alpha N).

    The asymptote -N Im Li2(exp(2 pi i k/N)) / (2 pi) is taken at the sampled
    point k/N, so k = 0 gives exactly zero.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    k = math.floor(alpha * n)
    if not 0 <= k <= n - 1:
        raise ValueError(f"floor(alpha*N) = {k} outside [0, N-1]")
    log_mod = math.fsum(log_two_sin_factors(n)[:k])
    return abs(log_mod + n * im_li2_unit(2 * math.pi * k / n) / (2 * math.pi)) / n
