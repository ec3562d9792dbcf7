"""AST node types and the pretty printer.

Nodes are frozen dataclasses, so structural equality is ``==``.  The printer
emits the minimal parenthesization that reparses to a structurally identical
tree under the documented grammar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

FUNCTIONS = ("sin", "cos", "sinh", "cosh", "exp", "log", "sqrt")


class Expr:
    """Base class for expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Num(Expr):
    """A nonnegative real literal (sign is carried by `Neg`)."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not math.isfinite(v) or v < 0:
            raise ValueError(f"Num literal must be finite and >= 0, got {v!r}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class Imag(Expr):
    """The imaginary unit ``i``."""


@dataclass(frozen=True)
class Coord(Expr):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("coordinate index must be >= 0")


@dataclass(frozen=True)
class Neg(Expr):
    a: Expr


@dataclass(frozen=True)
class Add(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Sub(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Mul(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Div(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Pow(Expr):
    a: Expr
    b: Expr


@dataclass(frozen=True)
class Call(Expr):
    fn: str
    arg: Expr

    def __post_init__(self):
        if self.fn not in FUNCTIONS:
            raise ValueError(f"unknown function {self.fn!r}")


# Syntactic categories, ranked loosest to tightest.  A node printed into a
# slot expecting a tighter category must be parenthesized.
_EXPR, _TERM, _FACTOR, _UNARY, _ATOM = range(5)

_CATEGORY = {
    Add: _EXPR, Sub: _EXPR,
    Mul: _TERM, Div: _TERM,
    Pow: _FACTOR,
    Neg: _UNARY,
    Num: _ATOM, Imag: _ATOM, Coord: _ATOM, Call: _ATOM,
}


def _fmt_number(v: float) -> str:
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def _print(e: Expr, slot: int) -> str:
    cat = _CATEGORY[type(e)]
    if isinstance(e, Num):
        s = _fmt_number(e.value)
    elif isinstance(e, Imag):
        s = "i"
    elif isinstance(e, Coord):
        s = f"u{e.index}"
    elif isinstance(e, Call):
        s = f"{e.fn}({_print(e.arg, _EXPR)})"
    elif isinstance(e, Neg):
        s = "-" + _print(e.a, _ATOM)
    elif isinstance(e, Add):
        s = _print(e.a, _EXPR) + "+" + _print(e.b, _TERM)
    elif isinstance(e, Sub):
        s = _print(e.a, _EXPR) + "-" + _print(e.b, _TERM)
    elif isinstance(e, Mul):
        s = _print(e.a, _TERM) + "*" + _print(e.b, _FACTOR)
    elif isinstance(e, Div):
        s = _print(e.a, _TERM) + "/" + _print(e.b, _FACTOR)
    elif isinstance(e, Pow):
        # '^' is right-associative and binds below unary minus in the base.
        s = _print(e.a, _UNARY) + "^" + _print(e.b, _FACTOR)
    else:  # pragma: no cover
        raise TypeError(f"not an Expr node: {e!r}")
    if cat < slot:
        return "(" + s + ")"
    return s


def pretty_print(e: Expr) -> str:
    """Render ``e`` so that ``parse(pretty_print(e))`` equals ``e``."""
    return _print(e, _EXPR)


def max_coord_index(e: Expr) -> int:
    """Largest coordinate index appearing in ``e`` (-1 if none)."""
    if isinstance(e, Coord):
        return e.index
    if isinstance(e, (Num, Imag)):
        return -1
    if isinstance(e, Neg):
        return max_coord_index(e.a)
    if isinstance(e, Call):
        return max_coord_index(e.arg)
    return max(max_coord_index(e.a), max_coord_index(e.b))
