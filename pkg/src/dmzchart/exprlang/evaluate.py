"""Jet-mode evaluation of expression trees."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import EvaluationError
from .jets import Jet, jet_space
from .nodes import Add, Call, Coord, Div, Expr, Imag, Mul, Neg, Num, Pow, Sub


def eval_jet(expr: Expr, point: Sequence[complex], order: int) -> Jet:
    """Evaluate ``expr`` and its mixed partials of total order <= ``order``.

    ``point`` fixes the number of coordinates; every coordinate symbol in the
    expression must have index < len(point).
    """
    space = jet_space(len(point), order)
    seeds = [space.coordinate(v, complex(point[v])) for v in range(len(point))]

    def walk(e: Expr) -> Jet:
        if isinstance(e, Num):
            return space.constant(e.value)
        if isinstance(e, Imag):
            return space.constant(1j)
        if isinstance(e, Coord):
            if e.index >= len(point):
                raise EvaluationError(
                    f"expression uses u{e.index} but the point has "
                    f"{len(point)} coordinates")
            return seeds[e.index]
        if isinstance(e, Neg):
            return -walk(e.a)
        if isinstance(e, Add):
            return walk(e.a) + walk(e.b)
        if isinstance(e, Sub):
            return walk(e.a) - walk(e.b)
        if isinstance(e, Mul):
            return walk(e.a) * walk(e.b)
        if isinstance(e, Div):
            return walk(e.a) / walk(e.b)
        if isinstance(e, Pow):
            return walk(e.a).pow(walk(e.b))
        if isinstance(e, Call):
            return getattr(walk(e.arg), e.fn)()
        raise TypeError(f"not an Expr node: {e!r}")

    return walk(expr)


def eval_value(expr: Expr, point: Sequence[complex]) -> complex:
    """Plain evaluation (order-0 jet)."""
    return eval_jet(expr, point, 0).value
