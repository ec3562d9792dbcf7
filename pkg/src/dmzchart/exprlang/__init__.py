"""Scalar expression language over chart coordinates with jet evaluation.

The grammar (EBNF, also in the README)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := unary ('^' factor)?
    unary  := '-'? atom
    atom   := number | 'i' | ident | ident '(' expr ')' | '(' expr ')'

Identifiers are the coordinates ``u0, u1, ...``, the imaginary unit ``i``
and the functions ``sin cos sinh cosh exp log sqrt``.  Expressions and jets
are immutable after construction and safe for concurrent reads.
"""

from .nodes import (
    Add, Call, Coord, Div, Expr, FUNCTIONS, Imag, Mul, Neg, Num, Pow, Sub,
    max_coord_index, pretty_print,
)
from .parser import parse
from .jets import Jet, JetSpace, jet_space
from .evaluate import eval_jet, eval_value

__all__ = [
    "Add", "Call", "Coord", "Div", "Expr", "FUNCTIONS", "Imag", "Mul", "Neg",
    "Num", "Pow", "Sub", "max_coord_index", "pretty_print", "parse",
    "Jet", "JetSpace", "jet_space", "eval_jet", "eval_value",
]
