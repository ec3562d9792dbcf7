"""Exception hierarchy shared by all dmzchart modules."""

from __future__ import annotations


class DmzChartError(Exception):
    """Base class for every error raised by this package."""


# --- expression language ---------------------------------------------------

class ExprError(DmzChartError):
    pass


class ParseError(ExprError):
    """Malformed expression text.

    Carries the 0-based character ``position`` of the failure and the
    ``expected`` set of token descriptions that would have been legal there.
    """

    def __init__(self, message: str, position: int, expected: set[str] | None = None):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = frozenset(expected or ())


class UnknownSymbol(ExprError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown symbol '{name}' (at position {position})")
        self.name = name
        self.position = position


class EvaluationError(ExprError):
    pass


class DomainError(EvaluationError):
    """log/sqrt evaluated on the branch cut (negative real axis)."""


class DivisionByZero(EvaluationError):
    """Denominator jet has (numerically) zero constant term."""


# --- chart -----------------------------------------------------------------

class ChartError(DmzChartError):
    pass


class WrongDimension(ChartError):
    pass


class ChartFormatError(ChartError):
    """Malformed chart/curve file."""


# --- sbrana bundle ---------------------------------------------------------

class JetOrderTooLow(DmzChartError):
    pass


class DegenerateStack(DmzChartError):
    pass


class StepFailure(DmzChartError):
    """ODE step-halving disagreement exceeded tolerance."""


# --- moduli ----------------------------------------------------------------

class NotAdmissible(DmzChartError):
    pass


class ZeroEntry(DmzChartError):
    pass


class SingularMatrix(DmzChartError):
    pass


# --- gauss -----------------------------------------------------------------

class SingularMetric(DmzChartError):
    pass


class SingularP(DmzChartError):
    pass


# --- deform ----------------------------------------------------------------

class ZeroPhi(DmzChartError):
    pass


class ZeroShapeValue(DmzChartError):
    pass


class IntegrabilityTooPoor(DmzChartError):
    pass


class UnsupportedChart(DmzChartError):
    """Configuration outside the numeric pipeline's supported envelope."""


# --- curves ----------------------------------------------------------------

class DegenerateSpan(DmzChartError):
    pass


class NotPolarNormalized(DmzChartError):
    pass


class SharedDimensionNotTwo(DmzChartError):
    pass


class IntervalGuardError(DmzChartError):
    """Projected-derivative norms violate the interval nonemptiness guard."""
