"""Truncated multivariate Taylor (jet) arithmetic.

A :class:`Jet` stores the Taylor *coefficients* ``c_alpha = d^alpha f / alpha!``
of an analytic function at a base point, for every multi-index ``alpha`` of
total order up to the jet order.  Only canonical exponent tuples are stored,
so the mixed-partial table is symmetric by construction.  All scalars are
``complex128``.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from ..errors import DivisionByZero, DomainError


def _monomials(nvars: int, order: int) -> list[tuple[int, ...]]:
    out = []
    for total in range(order + 1):
        for bars in combinations_with_replacement(range(nvars), total):
            alpha = [0] * nvars
            for v in bars:
                alpha[v] += 1
            out.append(tuple(alpha))
    return out


class JetSpace:
    """Shared tables for jets with a fixed variable count and order."""

    def __init__(self, nvars: int, order: int):
        if nvars < 1 or order < 0:
            raise ValueError("need nvars >= 1 and order >= 0")
        self.nvars = nvars
        self.order = order
        self.monomials = _monomials(nvars, order)
        self.size = len(self.monomials)
        self.index = {alpha: k for k, alpha in enumerate(self.monomials)}
        self.totals = np.array([sum(a) for a in self.monomials])
        self._build_mult_table()
        self._build_partial_tables()
        self._factorials = np.array(
            [math.prod(math.factorial(x) for x in alpha) for alpha in self.monomials],
            dtype=float,
        )

    def _build_mult_table(self):
        lhs, rhs, out = [], [], []
        for ia, alpha in enumerate(self.monomials):
            ta = sum(alpha)
            for ib, beta in enumerate(self.monomials):
                if ta + sum(beta) > self.order:
                    continue
                gamma = tuple(a + b for a, b in zip(alpha, beta))
                lhs.append(ia)
                rhs.append(ib)
                out.append(self.index[gamma])
        self._mul_l = np.array(lhs)
        self._mul_r = np.array(rhs)
        self._mul_o = np.array(out)

    def _build_partial_tables(self):
        # partial wrt v maps coefficient at alpha+e_v to (alpha_v + 1) * coeff at alpha
        self._partial = []
        for v in range(self.nvars):
            src, dst, fac = [], [], []
            for k, alpha in enumerate(self.monomials):
                if alpha[v] == 0:
                    continue
                shifted = list(alpha)
                shifted[v] -= 1
                src.append(k)
                dst.append(self.index[tuple(shifted)])
                fac.append(alpha[v])
            self._partial.append((np.array(src), np.array(dst), np.array(fac, dtype=float)))

    # -- constructors --------------------------------------------------------

    def constant(self, value: complex) -> "Jet":
        c = np.zeros(self.size, dtype=complex)
        c[0] = value
        return Jet(self, c)

    def coordinate(self, v: int, value: complex) -> "Jet":
        if not 0 <= v < self.nvars:
            raise ValueError(f"coordinate index {v} out of range")
        c = np.zeros(self.size, dtype=complex)
        c[0] = value
        if self.order >= 1:
            e_v = tuple(1 if k == v else 0 for k in range(self.nvars))
            c[self.index[e_v]] = 1.0
        return Jet(self, c)

    def multiply(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        prod = a[self._mul_l] * b[self._mul_r]
        out = np.bincount(self._mul_o, weights=prod.real, minlength=self.size).astype(complex)
        out += 1j * np.bincount(self._mul_o, weights=prod.imag, minlength=self.size)
        return out


@lru_cache(maxsize=64)
def jet_space(nvars: int, order: int) -> JetSpace:
    return JetSpace(nvars, order)


def _align(a: "Jet", b: "Jet") -> tuple["Jet", "Jet", JetSpace]:
    if a.space is b.space:
        return a, b, a.space
    if a.space.nvars != b.space.nvars:
        raise ValueError("jets live over different coordinate counts")
    order = min(a.space.order, b.space.order)
    return a.to_order(order), b.to_order(order), jet_space(a.space.nvars, order)


class Jet:
    """A truncated Taylor expansion at a point."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: JetSpace, coeffs: np.ndarray):
        self.space = space
        self.coeffs = coeffs

    # -- inspection ------------------------------------------------------

    @property
    def value(self) -> complex:
        return complex(self.coeffs[0])

    @property
    def order(self) -> int:
        return self.space.order

    def coefficient(self, alpha: tuple[int, ...]) -> complex:
        return complex(self.coeffs[self.space.index[tuple(alpha)]])

    def derivative(self, alpha: tuple[int, ...]) -> complex:
        """Mixed partial d^alpha f at the base point."""
        k = self.space.index[tuple(alpha)]
        return complex(self.coeffs[k] * self.space._factorials[k])

    def table(self) -> dict[tuple[int, ...], complex]:
        """Full mixed-partial table keyed by canonical multi-index."""
        return {alpha: self.derivative(alpha) for alpha in self.space.monomials}

    def to_order(self, order: int) -> "Jet":
        if order == self.space.order:
            return self
        if order > self.space.order:
            raise ValueError("cannot extend a jet to higher order")
        target = jet_space(self.space.nvars, order)
        c = np.zeros(target.size, dtype=complex)
        for k, alpha in enumerate(target.monomials):
            c[k] = self.coeffs[self.space.index[alpha]]
        return Jet(target, c)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "Jet | None":
        if isinstance(other, Jet):
            return other
        if isinstance(other, (int, float, complex)):
            return self.space.constant(complex(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, _ = _align(self, o)
        return Jet(a.space, a.coeffs + b.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return Jet(self.space, -self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, _ = _align(self, o)
        return Jet(a.space, a.coeffs - b.coeffs)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Jet(self.space, self.coeffs * other)
        if not isinstance(other, Jet):
            return NotImplemented
        a, b, space = _align(self, other)
        return Jet(space, space.multiply(a.coeffs, b.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return Jet(self.space, self.coeffs * other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            if other == 0:
                raise DivisionByZero("division by the zero constant")
            return Jet(self.space, self.coeffs / other)
        if not isinstance(other, Jet):
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def reciprocal(self) -> "Jet":
        c0 = self.value
        if c0 == 0:
            raise DivisionByZero("denominator jet has zero constant term")
        series = [(-1.0) ** k / c0 ** (k + 1) for k in range(self.order + 1)]
        return self._compose(series)

    def partial(self, v: int) -> "Jet":
        """Jet of the partial derivative along coordinate ``v`` (order drops by 1)."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 jet")
        src, dst, fac = self.space._partial[v]
        c = np.zeros(self.space.size, dtype=complex)
        c[dst] = self.coeffs[src] * fac
        return Jet(self.space, c).to_order(self.order - 1)

    # -- analytic functions -------------------------------------------------

    def _compose(self, series: list[complex]) -> "Jet":
        """Evaluate sum_k series[k] * (self - self.value)^k by Horner."""
        space = self.space
        tilde = self.coeffs.copy()
        tilde[0] = 0.0
        acc = np.zeros(space.size, dtype=complex)
        acc[0] = series[-1]
        for k in range(len(series) - 2, -1, -1):
            acc = space.multiply(acc, tilde)
            acc[0] += series[k]
        return Jet(space, acc)

    def _branch_cut_check(self, what: str):
        c0 = self.value
        if c0 == 0 or (c0.real < 0 and c0.imag == 0):
            raise DomainError(f"{what} evaluated at {c0} (branch cut / singular point)")

    def exp(self) -> "Jet":
        e0 = cmath.exp(self.value)
        series = [e0 / math.factorial(k) for k in range(self.order + 1)]
        return self._compose(series)

    def log(self) -> "Jet":
        self._branch_cut_check("log")
        c0 = self.value
        series = [cmath.log(c0)]
        for k in range(1, self.order + 1):
            series.append((-1.0) ** (k + 1) / (k * c0 ** k))
        return self._compose(series)

    def sqrt(self) -> "Jet":
        if self.value == 0 and not np.any(self.coeffs):
            return self.space.constant(0.0)
        self._branch_cut_check("sqrt")
        c0 = self.value
        r0 = cmath.sqrt(c0)
        series = [r0]
        coef = 0.5
        for k in range(1, self.order + 1):
            series.append(r0 * coef / c0 ** k)
            coef *= (0.5 - k) / (k + 1)
        return self._compose(series)

    def _cycle(self, f0: complex, f1: complex, sign: float) -> "Jet":
        # derivatives cycle with period 4: f, f', sign*f, sign*f'
        series = []
        cycle = (f0, f1, sign * f0, sign * f1)
        for k in range(self.order + 1):
            series.append(cycle[k % 4] / math.factorial(k))
        return self._compose(series)

    def sin(self) -> "Jet":
        return self._cycle(cmath.sin(self.value), cmath.cos(self.value), -1.0)

    def cos(self) -> "Jet":
        return self._cycle(cmath.cos(self.value), -cmath.sin(self.value), -1.0)

    def sinh(self) -> "Jet":
        return self._cycle(cmath.sinh(self.value), cmath.cosh(self.value), 1.0)

    def cosh(self) -> "Jet":
        return self._cycle(cmath.cosh(self.value), cmath.sinh(self.value), 1.0)

    def pow(self, exponent) -> "Jet":
        """Power with jet or scalar exponent; principal branch when non-integer."""
        if isinstance(exponent, Jet):
            exp_val = exponent.value
            if np.any(exponent.coeffs[1:]):
                return (exponent * self.log()).exp()
            exponent = exp_val
        q = complex(exponent)
        if q.imag == 0 and q.real == int(q.real) and abs(q.real) <= 512:
            return self._int_pow(int(q.real))
        return (self.log() * q).exp()

    def _int_pow(self, n: int) -> "Jet":
        if n < 0:
            return self.reciprocal()._int_pow(-n)
        result = self.space.constant(1.0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __pow__(self, other):
        return self.pow(other)

    def __repr__(self):  # pragma: no cover
        return f"Jet(order={self.order}, value={self.value})"
