"""Command-line front end.

    colored-jones jones --builtin 4_1 --n 5
    colored-jones fig8 --n 4
    colored-jones volume --n-list 250,500,1000,2000 --extrapolate --out -
    colored-jones ekholm --n 6
    colored-jones saddle
    colored-jones ratios --n 600
    colored-jones lob --theta 1.0471975511965976

Exit codes: 0 success, 1 computation error (one line on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import cmath
import contextlib
import io
import math
import sys
from dataclasses import dataclass

from . import asymptotic, fig8
from .phase import RootContext
from .special import lobachevsky
from .statesum import evaluate
from .tangle import BUILTIN_NAMES, builtin_diagram, load_tangle

__all__ = ["CsvTable", "write_csv", "format_number", "format_complex", "run", "main"]

_DIGITS = 12


def format_number(x: float) -> str:
    """Fixed 12 decimals with trailing zeros dropped: 27.0 -> '27'."""
    if not math.isfinite(x):
        return repr(float(x))
    s = f"{x:.{_DIGITS}f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def format_log_value(log_x: float) -> str:
    """exp(log_x), in scientific form once it leaves the double range."""
    if log_x < 700:
        return format_number(math.exp(log_x))
    e = math.floor(log_x / math.log(10))
    m = 10 ** (log_x / math.log(10) - e)
    return f"{m:.{_DIGITS}f}e+{e}"


def format_complex(z: complex) -> str:
    re, im = format_number(z.real), format_number(z.imag)
    if im == "0":
        return re
    sign = "-" if im.startswith("-") else "+"
    return f"{re}{sign}{im.lstrip('-')}i"


@dataclass(frozen=True)
class CsvTable:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]


def _csv_cell(x) -> str:
    if isinstance(x, int):
        return str(x)
    return f"{x:.{_DIGITS}f}"


def write_csv(t: CsvTable, sink) -> None:
    """Header then rows, comma separated, '\\n' line endings, UTF-8 bytes."""
    width = len(t.header)
    for i, row in enumerate(t.rows, start=1):
        if len(row) != width:
            raise ValueError(f"row {i} has {len(row)} cells, header has {width}")
    lines = [",".join(t.header)] + [",".join(r) for r in t.rows]
    sink.write(("\n".join(lines) + "\n").encode("utf-8"))


def volume_csv(table: asymptotic.VolumeTable) -> CsvTable:
    rows = tuple((_csv_cell(r.n), _csv_cell(r.log_jn), _csv_cell(r.a_n)) for r in table.rows)
    return CsvTable(("n", "log_jn", "a_n"), rows)


# -- argument types ----------------------------------------------------------------


def _int_at_least(lo):
    def parse(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}") from None
        if v < lo:
            raise argparse.ArgumentTypeError(f"N must be >= {lo}, got {v}")
        return v
    return parse


def _n_list(s):
    parse = _int_at_least(1)
    items = [p for p in s.split(",") if p.strip()]
    if not items:
        raise argparse.ArgumentTypeError("empty N list")
    return [parse(p.strip()) for p in items]


def _complex_pair(s):
    try:
        re, im = (float(p) for p in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {s!r}") from None
    return complex(re, im)


def _real(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {s!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError("theta must be finite")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="colored-jones", description="Colored Jones function and volume-limit tools.")
    sub = p.add_subparsers(dest="command", required=True)

    j = sub.add_parser("jones", help="state sum of a (1,1)-tangle diagram")
    src = j.add_mutually_exclusive_group(required=True)
    src.add_argument("--tangle", metavar="FILE")
    src.add_argument("--builtin", choices=BUILTIN_NAMES)
    j.add_argument("--n", type=_int_at_least(1), required=True)
    j.add_argument("--endpoint", type=int, default=0, help="label of the open endpoints (default 0)")
    j.add_argument("--workers", type=_int_at_least(1), default=1)

    f = sub.add_parser("fig8", help="closed forms for the figure-eight knot")
    f.add_argument("--n", type=_int_at_least(1), required=True)
    f.add_argument("--form", choices=("double", "single", "le"), default="single")
    f.add_argument("--t", type=_complex_pair, metavar="RE,IM", help="variable for --form le (default exp(2 pi i/N))")

    v = sub.add_parser("volume", help="CSV of (N, log J_N, 2 pi log J_N / N)")
    v.add_argument("--n-list", type=_n_list, required=True, metavar="N1,N2,...")
    v.add_argument("--extrapolate", action="store_true")
    v.add_argument("--out", required=True, metavar="FILE|-")

    e = sub.add_parser("ekholm", help="max-term bounds on J_N")
    e.add_argument("--n", type=_int_at_least(1), required=True)

    sub.add_parser("saddle", help="critical point of the dilogarithm potential")

    r = sub.add_parser("ratios", help="difference-equation route")
    r.add_argument("--n", type=_int_at_least(2), required=True)

    lo = sub.add_parser("lob", help="Lobachevsky function")
    lo.add_argument("--theta", type=_real, required=True)
    return p


# -- commands ------------------------------------------------------------------------


def _cmd_jones(a, out, err):
    d = load_tangle(a.tangle) if a.tangle else builtin_diagram(a.builtin)
    res = evaluate(d, RootContext(a.n), endpoint_label=a.endpoint, workers=a.workers)
    print(format_complex(res.value), file=out)


def _cmd_fig8(a, out, err):
    if a.form == "single":
        print(format_log_value(fig8.fig8_log_jn(a.n).log_value), file=out)
    elif a.form == "double":
        print(format_complex(fig8.fig8_double_sum(RootContext(a.n))), file=out)
    else:
        t = a.t if a.t is not None else cmath.exp(2j * math.pi / a.n)
        print(format_complex(fig8.le_colored_jones(a.n, t)), file=out)


def _cmd_volume(a, out, err):
    table = asymptotic.volume_sequence(a.n_list)
    summary = None
    if a.extrapolate:
        v = asymptotic.extrapolate_volume(table)
        summary = f"extrapolated = {format_number(v)}\nfit_residual = {table.fit_residual:.3e}"
    if a.out == "-":
        buf = io.BytesIO()
        write_csv(volume_csv(table), buf)
        out.write(buf.getvalue().decode("utf-8"))
        if summary:
            print(summary, file=err)
    else:
        with open(a.out, "wb") as fh:
            write_csv(volume_csv(table), fh)
        if summary:
            print(summary, file=out)


def _cmd_ekholm(a, out, err):
    r = asymptotic.ekholm_report(a.n)
    print(f"k_star = {r.k_star}", file=out)
    print(f"log_g2 = {format_number(r.log_g2)}", file=out)
    print(f"log_jn = {format_number(r.log_jn)}", file=out)
    print(f"log_n_g2 = {format_number(math.log(a.n) + r.log_g2)}", file=out)
    print(f"bounds = {'ok' if r.lower_ok and r.upper_ok else 'VIOLATED'}", file=out)
    print(f"riemann_sum = {format_number(r.riemann_sum)}", file=out)


def _cmd_saddle(a, out, err):
    r = asymptotic.saddle_solve()
    for i, u in enumerate(r.roots_u, start=1):
        print(f"u{i} = {format_complex(u)}", file=out)
    print(f"im_F0 = {format_number(r.im_f0)}", file=out)
    print(f"trivial_residuals = {r.trivial_residuals[0]},{r.trivial_residuals[1]}", file=out)


def _cmd_ratios(a, out, err):
    r = asymptotic.summand_ratio_analysis(a.n)
    print(f"max_ratio_error = {r.max_ratio_error:.3e}", file=out)
    print(f"max_zw1_mismatch = {r.max_zw1_mismatch:.3e}", file=out)
    print(f"k = {r.k_designated}", file=out)
    print(f"log_f_max = {format_number(r.log_f_max)}", file=out)
    print(f"v_n = {format_number(r.v_n)}", file=out)
    print(f"argmax_ij = {r.argmax_ij[0]},{r.argmax_ij[1]}", file=out)
    print(f"argmax_log_abs_f = {format_number(r.argmax_log_abs_f)}", file=out)


def _cmd_lob(a, out, err):
    print(format_number(lobachevsky(a.theta)), file=out)


_COMMANDS = {
    "jones": _cmd_jones,
    "fig8": _cmd_fig8,
    "volume": _cmd_volume,
    "ekholm": _cmd_ekholm,
    "saddle": _cmd_saddle,
    "ratios": _cmd_ratios,
    "lob": _cmd_lob,
}


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "fig8" and args.t is not None and args.form != "le":
        print("colored-jones fig8: error: --t only applies to --form le", file=err)
        return 2
    try:
        _COMMANDS[args.command](args, out, err)
    except (ValueError, ArithmeticError, KeyError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=err)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
