"""R-matrix state sum for (1,1)-tangle diagrams.

The Kronecker deltas of the crossing weights are eliminated symbolically
(:func:`reduce_constraints`), leaving a box of free labels that
:func:`evaluate` enumerates chunk by chunk.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .phase import RootContext
from .tangle import CORNERS, CrossingKind, Extremum, TangleDiagram, validate

__all__ = [
    "AffineExpr",
    "LabelScheme",
    "StateSumResult",
    "InconsistentDiagramError",
    "InvalidDiagramError",
    "StateSumRangeError",
    "crossing_weight",
    "extremum_weight",
    "reduce_constraints",
    "evaluate",
    "label_values",
    "diagram_factors",
    "LOG_MAGNITUDE_LIMIT",
]

LOG_MAGNITUDE_LIMIT = 700.0


class InconsistentDiagramError(ValueError):
    """The delta constraints admit no labeling at all."""


class InvalidDiagramError(ValueError):
    pass


class StateSumRangeError(ArithmeticError):
    """A partial product would leave the double-precision range."""


# (family, numerator corners, denominator corners, sign pair, phase sign,
#  quadratic pair, linear pair).  The weight is
#   prod (sym)_num / prod (sym)_den * (-1)^(s1+s2+1)
#     * q^(phase_sign * (x*y + (u+v)/2 + (N^2+1)/4))
# X6 and X8 use the linear pair of their worked 4_1 expansion rather than the
# pair printed in their table row; see README "Crossing weights".
_WEIGHTS = {
    CrossingKind.X1: ("q", ("ne", "se"), ("nw", "m", "sw"), ("nw", "sw"), +1, ("nw", "sw"), ("nw", "sw")),
    CrossingKind.X2: ("q", ("nw", "sw"), ("ne", "m", "se"), ("ne", "se"), +1, ("ne", "se"), ("ne", "se")),
    CrossingKind.X3: ("qbar", ("nw", "sw"), ("ne", "m", "se"), ("ne", "se"), -1, ("ne", "se"), ("ne", "se")),
    CrossingKind.X4: ("qbar", ("ne", "se"), ("nw", "m", "sw"), ("nw", "sw"), -1, ("nw", "sw"), ("nw", "sw")),
    CrossingKind.X5: ("qbar", ("sw", "se"), ("nw", "ne", "m"), ("nw", "ne"), -1, ("nw", "ne"), ("sw", "se")),
    CrossingKind.X6: ("qbar", ("nw", "ne"), ("m", "sw", "se"), ("sw", "se"), -1, ("sw", "se"), ("sw", "se")),
    CrossingKind.X7: ("q", ("nw", "ne"), ("m", "sw", "se"), ("sw", "se"), +1, ("sw", "se"), ("nw", "ne")),
    CrossingKind.X8: ("q", ("sw", "se"), ("nw", "ne", "m"), ("nw", "ne"), +1, ("nw", "ne"), ("nw", "ne")),
}


def _weight_arrays(ctx: RootContext, kind: CrossingKind, lab: dict):
    """Vectorised weight and log-modulus; ``lab`` maps corner/'m' to int arrays.

    Labels must already satisfy the deltas and lie in [0, N-1].
    """
    family, num, den, signs, psign, quad, lin = _WEIGHTS[kind]
    sym = ctx.symbols
    table = sym.qpoch if family == "q" else sym.qpoch_bar
    n = ctx.n
    ratio = table[lab[num[0]]] * table[lab[num[1]]]
    ratio = ratio / (table[lab[den[0]]] * table[lab[den[1]]] * table[lab[den[2]]])
    log_mod = sum(sym.log_g[lab[c]] for c in num) - sum(sym.log_g[lab[c]] for c in den)
    quarter = psign * (4 * lab[quad[0]] * lab[quad[1]] + 2 * (lab[lin[0]] + lab[lin[1]]) + n * n + 1)
    quarter = quarter + 2 * n * (lab[signs[0]] + lab[signs[1]] + 1)
    return ratio * ctx.phase_table[np.mod(quarter, ctx.period)], log_mod


def _check_label(ctx, name, value):
    if not 0 <= value <= ctx.n - 1:
        raise ValueError(f"label {name}={value} outside [0, {ctx.n - 1}]")


def crossing_weight(ctx: RootContext, kind: CrossingKind, i: int, j: int, k: int, l: int, m: int) -> complex:
    """Weight of a crossing with corner labels i=NW, j=NE, k=SW, l=SE and crossing label m."""
    lab = {"nw": i, "ne": j, "sw": k, "se": l, "m": m}
    for name, value in lab.items():
        _check_label(ctx, name, value)
    for out, inp, sign in kind.constraints:
        if lab[out] != lab[inp] + sign * m:
            return 0j
    arr = {key: np.array([v]) for key, v in lab.items()}
    return complex(_weight_arrays(ctx, kind, arr)[0][0])


def _extremum_quarter(ctx, e: Extremum, label):
    if e.direction == "rtl":
        return 0 * label
    sign = 1 if e.which == "min" else -1
    return sign * (4 * label - 2 * (ctx.n - 1))


def extremum_weight(ctx: RootContext, kind: Extremum | tuple[str, str], i: int) -> complex:
    """``q^(i-(N-1)/2)`` for a left-to-right minimum, its inverse for a maximum, 1 if right-to-left."""
    if not isinstance(kind, Extremum):
        kind = Extremum(kind[0], kind[1], "_")
    _check_label(ctx, "i", i)
    return complex(ctx.phase_table[_extremum_quarter(ctx, kind, i) % ctx.period])


@dataclass(frozen=True)
class AffineExpr:
    """``const + sum(coeffs[v] * free[v])`` over the scheme's free labels."""

    const: int
    coeffs: tuple[int, ...]

    def __call__(self, free_values):
        out = self.const
        for c, v in zip(self.coeffs, free_values):
            if c:
                out = out + c * v
        return out

    @property
    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def format(self, names) -> str:
        parts = []
        for c, name in zip(self.coeffs, names):
            if c:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                parts.append(("-" if c < 0 else "+") + mag + name)
        if self.const or not parts:
            parts.append(f"{self.const:+d}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class LabelScheme:
    """Result of eliminating the delta constraints.

    ``bound`` maps every arc name and every crossing label ``m[c]`` (1-based
    crossing index ``c``) to an :class:`AffineExpr` in the ``free`` labels.
    """

    free: tuple[str, ...]
    bound: dict
    endpoint_label: int

    @property
    def admissibility(self) -> tuple[AffineExpr, ...]:
        """Distinct non-constant expressions that must lie in [0, N-1]."""
        seen = {}
        for expr in self.bound.values():
            if not expr.is_constant:
                seen.setdefault(expr, None)
        return tuple(seen)

    def describe(self) -> dict[str, str]:
        return {name: expr.format(self.free) for name, expr in self.bound.items()}


def crossing_label(index: int) -> str:
    return f"m[{index}]"


def reduce_constraints(d: TangleDiagram, endpoint_label: int = 0, out_label: int | None = None) -> LabelScheme:
    """Eliminate the delta constraints of ``d`` with both endpoints pinned.

    The output endpoint is pinned to ``out_label`` when given (default: the
    same ``endpoint_label``); with equal pins the all-equal labeling always
    exists, so inconsistency needs distinct pins.

    Gaussian elimination runs over the rationals with arc columns first, so arc
    labels are expressed through crossing labels wherever possible.  Afterwards
    a label whose expression is ``-(non-negative combination)`` is forced to
    zero by non-negativity, and the elimination is repeated with it pinned.
    """
    names = list(d.arcs) + [crossing_label(c) for c in range(1, len(d.crossings) + 1)]
    col = {name: idx for idx, name in enumerate(names)}
    rows = []

    def equation(coeffs: dict, rhs):
        row = [Fraction(0)] * (len(names) + 1)
        for name, c in coeffs.items():
            row[col[name]] += c
        row[-1] = Fraction(rhs)
        rows.append(row)

    for c_idx, c in enumerate(d.crossings, start=1):
        m = crossing_label(c_idx)
        for out, inp, sign in c.kind.constraints:
            # out - in - sign*m = 0 (a self-loop at one crossing collapses the arc terms)
            coeffs = {c.arc_at(out): 1}
            coeffs[c.arc_at(inp)] = coeffs.get(c.arc_at(inp), 0) - 1
            coeffs[m] = coeffs.get(m, 0) - sign
            equation(coeffs, 0)
    equation({d.endpoints[0]: 1}, endpoint_label)
    equation({d.endpoints[1]: 1}, endpoint_label if out_label is None else out_label)

    while True:
        free, bound = _solve(rows, names)
        forced = _forced_zero(free, bound)
        if not forced:
            break
        for name in forced:
            equation({name: 1}, 0)
    return LabelScheme(tuple(free), bound, endpoint_label)


def _solve(rows, names):
    rows = [list(r) for r in rows]
    ncols = len(names)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for row in rows[r:]:
        if row[-1] != 0:
            raise InconsistentDiagramError("the crossing constraints and endpoint labels contradict each other")
    free_cols = [c for c in range(ncols) if c not in pivots]
    free = [names[c] for c in free_cols]
    bound = {}
    for i, c in enumerate(pivots):
        coeffs = tuple(-rows[i][fc] for fc in free_cols)
        const = rows[i][-1]
        if const.denominator != 1 or any(x.denominator != 1 for x in coeffs):
            raise InconsistentDiagramError(f"label {names[c]} is not an integer combination of free labels")
        bound[names[c]] = AffineExpr(int(const), tuple(int(x) for x in coeffs))
    for k, c in enumerate(free_cols):
        bound[names[c]] = AffineExpr(0, tuple(int(k == kk) for kk in range(len(free_cols))))
    return free, {name: bound[name] for name in names}


def _forced_zero(free, bound):
    forced = []
    for expr in bound.values():
        if expr.const <= 0 and all(c <= 0 for c in expr.coeffs):
            if expr.const < 0:
                raise InconsistentDiagramError("a label is forced negative; no admissible labeling exists")
            forced.extend(free[k] for k, c in enumerate(expr.coeffs) if c < 0 and free[k] not in forced)
    return forced


@dataclass(frozen=True)
class StateSumResult:
    value: complex
    n: int
    admissible_terms: int
    log_magnitude: float
    # log of the largest |term|; well above log_magnitude means cancellation
    max_log_term: float = -math.inf


@lru_cache(maxsize=32)
def _context(n: int) -> RootContext:
    return RootContext(n)


def label_values(scheme: LabelScheme, free_values) -> dict:
    """Evaluate every bound expression at ``free_values`` (scalars or arrays)."""
    return {name: expr(free_values) for name, expr in scheme.bound.items()}


def _term_arrays(d: TangleDiagram, ctx: RootContext, labels: dict):
    """Per-factor weights for a batch of labelings, in diagram order."""
    factors = []
    log_mods = []
    for c_idx, c in enumerate(d.crossings, start=1):
        lab = {corner: labels[c.arc_at(corner)] for corner in CORNERS}
        lab["m"] = labels[crossing_label(c_idx)]
        w, lm = _weight_arrays(ctx, c.kind, lab)
        factors.append(w)
        log_mods.append(lm)
    for e in d.extrema:
        factors.append(ctx.phase_table[np.mod(_extremum_quarter(ctx, e, labels[e.arc]), ctx.period)])
    return factors, log_mods


def diagram_factors(d: TangleDiagram, ctx: RootContext, labels: dict) -> list[complex]:
    """Crossing weights then extremum weights for one labeling (scalar labels)."""
    arr = {k: np.atleast_1d(np.asarray(v, dtype=np.int64)) for k, v in labels.items()}
    for name, v in arr.items():
        _check_label(ctx, name, int(v[0]))
    factors, _ = _term_arrays(d, ctx, arr)
    return [complex(f[0]) for f in factors]


def _chunk(d: TangleDiagram, n: int, scheme: LabelScheme, outer: int | None):
    """Sum of all admissible terms whose outermost free label equals ``outer``."""
    ctx = _context(n)
    nfree = len(scheme.free)
    if nfree == 0:
        grid = []
    else:
        inner = np.indices((n,) * (nfree - 1)).reshape(nfree - 1, -1).astype(np.int64)
        grid = [np.full(inner.shape[1], outer, dtype=np.int64), *inner]
    size = len(grid[0]) if grid else 1
    labels = {}
    mask = np.ones(size, dtype=bool)
    for name, expr in scheme.bound.items():
        vals = np.broadcast_to(np.asarray(expr(grid), dtype=np.int64), (size,))
        labels[name] = vals
        mask &= (vals >= 0) & (vals <= n - 1)
    count = int(mask.sum())
    if count == 0:
        return 0.0, 0.0, 0, -math.inf
    labels = {name: vals[mask] for name, vals in labels.items()}
    factors, log_mods = _term_arrays(d, ctx, labels)
    running = np.zeros(count)
    for lm in log_mods:
        running = running + lm
        if running.max() > LOG_MAGNITUDE_LIMIT:
            raise StateSumRangeError(
                f"partial product magnitude exp({running.max():.1f}) exceeds the double range at N={n}; "
                "use the log-space closed form for large N"
            )
    term = np.ones(count, dtype=complex)
    for f in factors:
        term = term * f
    return math.fsum(term.real), math.fsum(term.imag), count, float(running.max())


def evaluate(d: TangleDiagram, ctx: RootContext, endpoint_label: int = 0, workers: int = 1) -> StateSumResult:
    """State sum of ``d`` at q = exp(2*pi*i/N) with both endpoints labelled ``endpoint_label``.

    The sum is split into one chunk per value of the outermost free label and
    the chunk totals are combined in chunk order, so the result does not
    depend on ``workers``.
    """
    problems = validate(d)
    if problems:
        raise InvalidDiagramError("; ".join(problems))
    _check_label(ctx, "endpoint", endpoint_label)
    scheme = reduce_constraints(d, endpoint_label)
    n = ctx.n
    outers = list(range(n)) if scheme.free else [None]
    if workers > 1 and len(outers) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk, [d] * len(outers), [n] * len(outers), [scheme] * len(outers), outers))
    else:
        parts = [_chunk(d, n, scheme, o) for o in outers]
    re = math.fsum(p[0] for p in parts)
    im = math.fsum(p[1] for p in parts)
    value = complex(re, im)
    count = sum(p[2] for p in parts)
    log_mag = math.log(abs(value)) if value != 0 else -math.inf
    return StateSumResult(value, n, count, log_mag, max(p[3] for p in parts))
