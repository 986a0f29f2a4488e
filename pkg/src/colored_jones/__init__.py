"""Colored Jones function J_N of knots from (1,1)-tangle state sums, and the
figure-eight knot's volume limit by several independent routes."""

from .phase import RootContext, q_symbol_table
from .tangle import builtin_diagram, parse_tangle, validate
from .statesum import evaluate, reduce_constraints

__version__ = "0.1.0"
