"""Exact rewriting and verification for the queer Lie superalgebra q_n and U_v(q_n).

The quantum engine works over Z[v, v^-1] (inside Q(v)), the classical one over Q.
"""
__version__ = "0.1.0"

from .parser import ParseError, parse_expression
from .report import Report
from .superalg import Element, to_latex, to_text

__all__ = ["Element", "ParseError", "Report", "parse_expression", "to_latex", "to_text",
           "__version__"]
