"""(1,1)-tangle diagrams: data model, text format and validation.

A diagram is a single oriented strand running from an input endpoint to an
output endpoint, cut into arcs at every crossing.  Each crossing is one of the
eight oriented forms ``X1`` .. ``X8`` and names the arcs at its NW, NE, SW and
SE corners.  Local extrema are recorded on the arc that passes through them.

Text format (UTF-8, one statement per line, ``#`` starts a comment)::

    open in=<arc> out=<arc>
    cross <X1..X8> nw=<arc> ne=<arc> sw=<arc> se=<arc>
    min <arc> dir=<ltr|rtl>
    max <arc> dir=<ltr|rtl>

Crossing kinds, by the direction of the over and under strands:

====  ===========  ============
kind  over strand  under strand
====  ===========  ============
X1    NE -> SW     NW -> SE
X2    SW -> NE     SE -> NW
X3    NW -> SE     NE -> SW
X4    SE -> NW     SW -> NE
X5    SW -> NE     NW -> SE
X6    NE -> SW     SE -> NW
X7    NW -> SE     SW -> NE
X8    SE -> NW     NE -> SW
====  ===========  ============

Planarity is not checked; validation is combinatorial only.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from importlib import resources

__all__ = [
    "CORNERS",
    "CrossingKind",
    "Crossing",
    "Extremum",
    "TangleDiagram",
    "TangleSyntaxError",
    "parse_tangle",
    "format_tangle",
    "load_tangle",
    "validate",
    "builtin_diagram",
    "BUILTIN_NAMES",
]

CORNERS = ("nw", "ne", "sw", "se")


class CrossingKind(enum.Enum):
    # value: (over strand (from, to), under strand (from, to))
    X1 = (("ne", "sw"), ("nw", "se"))
    X2 = (("sw", "ne"), ("se", "nw"))
    X3 = (("nw", "se"), ("ne", "sw"))
    X4 = (("se", "nw"), ("sw", "ne"))
    X5 = (("sw", "ne"), ("nw", "se"))
    X6 = (("ne", "sw"), ("se", "nw"))
    X7 = (("nw", "se"), ("sw", "ne"))
    X8 = (("se", "nw"), ("ne", "sw"))

    @property
    def over(self) -> tuple[str, str]:
        return self.value[0]

    @property
    def under(self) -> tuple[str, str]:
        return self.value[1]

    @property
    def inputs(self) -> tuple[str, str]:
        return self.over[0], self.under[0]

    @property
    def outputs(self) -> tuple[str, str]:
        return self.over[1], self.under[1]

    @property
    def constraints(self) -> tuple[tuple[str, str, int], ...]:
        """The two delta constraints as ``(out_corner, in_corner, sign)``.

        Each reads ``label[out] = label[in] + sign * m``: a label grows by the
        crossing label through an under-crossing and shrinks through an
        over-crossing.
        """
        (oi, oo), (ui, uo) = self.over, self.under
        return ((oo, oi, -1), (uo, ui, +1))


@dataclass(frozen=True)
class Crossing:
    kind: CrossingKind
    nw: str
    ne: str
    sw: str
    se: str

    def arc_at(self, corner: str) -> str:
        return getattr(self, corner)


@dataclass(frozen=True)
class Extremum:
    which: str  # "min" | "max"
    direction: str  # "ltr" | "rtl"
    arc: str

    def __post_init__(self):
        if self.which not in ("min", "max"):
            raise ValueError(f"extremum must be 'min' or 'max', got {self.which!r}")
        if self.direction not in ("ltr", "rtl"):
            raise ValueError(f"direction must be 'ltr' or 'rtl', got {self.direction!r}")


@dataclass(frozen=True)
class TangleDiagram:
    arcs: tuple[str, ...]
    crossings: tuple[Crossing, ...]
    extrema: tuple[Extremum, ...]
    endpoints: tuple[str, str]

    @classmethod
    def build(cls, crossings=(), extrema=(), endpoints=("a", "a")) -> "TangleDiagram":
        """Assemble a diagram, declaring arcs in order of first use."""
        arcs: dict[str, None] = {}
        arcs.setdefault(endpoints[0])
        arcs.setdefault(endpoints[1])
        for c in crossings:
            for corner in CORNERS:
                arcs.setdefault(c.arc_at(corner))
        for e in extrema:
            arcs.setdefault(e.arc)
        return cls(tuple(arcs), tuple(crossings), tuple(extrema), tuple(endpoints))

    @property
    def is_trivial(self) -> bool:
        return not self.crossings


class TangleSyntaxError(ValueError):
    """Malformed tangle text; carries the 1-based ``line`` and ``column``."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_ARC = re.compile(r"[A-Za-z0-9_]+\Z")
_TOKEN = re.compile(r"\S+")


def _fields(tokens, expected, lineno):
    """Turn ``key=value`` tokens into a dict holding exactly ``expected`` keys."""
    out = {}
    for col, tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in expected:
            raise TangleSyntaxError(f"unexpected field {tok!r}", lineno, col)
        if key in out:
            raise TangleSyntaxError(f"field {key!r} given twice", lineno, col)
        out[key] = (col + len(key) + 1, value)
    missing = [k for k in expected if k not in out]
    if missing:
        col = tokens[-1][0] if tokens else 1
        raise TangleSyntaxError(f"missing field(s): {', '.join(missing)}", lineno, col)
    return out


def _arc_name(value, lineno, col):
    if not _ARC.match(value):
        raise TangleSyntaxError(f"invalid arc name {value!r}", lineno, col)
    return value


def parse_tangle(text: str) -> TangleDiagram:
    """Parse the line-oriented tangle format into a :class:`TangleDiagram`."""
    endpoints = None
    crossings = []
    extrema = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        (col, head), rest = tokens[0], tokens[1:]
        if head == "open":
            if endpoints is not None:
                raise TangleSyntaxError("duplicate 'open' declaration", lineno, col)
            f = _fields(rest, ("in", "out"), lineno)
            endpoints = tuple(_arc_name(f[k][1], lineno, f[k][0]) for k in ("in", "out"))
        elif head == "cross":
            if not rest:
                raise TangleSyntaxError("missing crossing kind", lineno, col + len(head))
            kcol, kname = rest[0]
            try:
                kind = CrossingKind[kname]
            except KeyError:
                raise TangleSyntaxError(f"unknown crossing kind {kname!r}", lineno, kcol) from None
            f = _fields(rest[1:], CORNERS, lineno)
            arcs = {k: _arc_name(f[k][1], lineno, f[k][0]) for k in CORNERS}
            crossings.append(Crossing(kind, **arcs))
        elif head in ("min", "max"):
            if not rest:
                raise TangleSyntaxError(f"'{head}' needs an arc name", lineno, col + len(head))
            acol, arc = rest[0]
            f = _fields(rest[1:], ("dir",), lineno)
            dcol, direction = f["dir"]
            if direction not in ("ltr", "rtl"):
                raise TangleSyntaxError(f"direction must be ltr or rtl, got {direction!r}", lineno, dcol)
            extrema.append(Extremum(head, direction, _arc_name(arc, lineno, acol)))
        else:
            raise TangleSyntaxError(f"unknown statement {head!r}", lineno, col)
    if endpoints is None:
        raise TangleSyntaxError("missing 'open in=... out=...' declaration", max(1, len(text.splitlines())), 1)
    return TangleDiagram.build(crossings, extrema, endpoints)


def format_tangle(d: TangleDiagram) -> str:
    lines = [f"open in={d.endpoints[0]} out={d.endpoints[1]}"]
    for c in d.crossings:
        lines.append(f"cross {c.kind.name} nw={c.nw} ne={c.ne} sw={c.sw} se={c.se}")
    for e in d.extrema:
        lines.append(f"{e.which} {e.arc} dir={e.direction}")
    return "\n".join(lines) + "\n"


def load_tangle(path) -> TangleDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_tangle(fh.read())


def validate(d: TangleDiagram) -> list[str]:
    """Return the list of structural problems; empty means the diagram is usable.

    Every arc must start exactly once (at a crossing output or the input
    endpoint) and end exactly once (at a crossing input or the output
    endpoint), and the strand must run from ``in`` to ``out`` through every arc.
    """
    problems = []
    known = set(d.arcs)
    starts: dict[str, list[str]] = {a: [] for a in d.arcs}
    ends: dict[str, list[str]] = {a: [] for a in d.arcs}
    src, dst = d.endpoints
    if src == dst and not d.is_trivial:
        problems.append(f"endpoints share arc {src!r} in a diagram with crossings")
    starts.setdefault(src, []).append("in")
    ends.setdefault(dst, []).append("out")
    for n, c in enumerate(d.crossings, start=1):
        for corner in c.kind.outputs:
            starts.setdefault(c.arc_at(corner), []).append(f"crossing {n} {corner}")
        for corner in c.kind.inputs:
            ends.setdefault(c.arc_at(corner), []).append(f"crossing {n} {corner}")
    for e in d.extrema:
        if e.arc not in known:
            problems.append(f"extremum on undeclared arc {e.arc!r}")
    for arc in d.arcs:
        for label, uses in (("start", starts[arc]), ("end", ends[arc])):
            if len(uses) != 1:
                where = ", ".join(uses) if uses else "nowhere"
                problems.append(f"arc {arc!r} must have one {label}, found {len(uses)} ({where})")
    if problems:
        return problems

    # walk the strand; with one start and one end per arc this visits each arc once
    nxt = {}
    for c in d.crossings:
        for frm, to in (c.kind.over, c.kind.under):
            nxt[c.arc_at(frm)] = c.arc_at(to)
    seen = [src]
    arc = src
    while arc != dst and arc in nxt and len(seen) <= len(d.arcs):
        arc = nxt[arc]
        seen.append(arc)
    missing = [a for a in d.arcs if a not in seen]
    if missing:
        problems.append(f"arcs not on the strand from {src!r} to {dst!r}: {', '.join(missing)}")
    return problems


BUILTIN_NAMES = ("trivial", "4_1", "4_1_rotated", "unknot_finger")


def builtin_diagram(name: str) -> TangleDiagram:
    """Load one of the shipped fixtures listed in :data:`BUILTIN_NAMES`."""
    if name not in BUILTIN_NAMES:
        raise KeyError(f"unknown diagram {name!r}; available: {', '.join(BUILTIN_NAMES)}")
    text = resources.files("colored_jones").joinpath("data", f"{name}.tangle").read_text("utf-8")
    return parse_tangle(text)
