"""Pointwise predicates of a conjugate chart / DMZ system.

All residual operators evaluate coefficient expressions through jets, so the
second derivatives entering the displays are exact up to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from ..errors import ChartError, WrongDimension
from ..exprlang import Expr, eval_jet, eval_value
from .core import ConjugateChart, Point, ambient_gram


def _unit(i: int, n: int) -> tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in range(n))


def _pair_index(i: int, j: int, n: int) -> tuple[int, ...]:
    alpha = [0] * n
    alpha[i] += 1
    alpha[j] += 1
    return tuple(alpha)


@dataclass(frozen=True)
class DmzResidualReport:
    """Q_ij values of a field over a set of evaluation points."""

    values: dict[tuple[int, int], list[np.ndarray]]
    points: list[Point]

    @property
    def pair_max(self) -> dict[tuple[int, int], float]:
        return {pair: max((float(np.max(np.abs(v))) for v in vals), default=0.0)
                for pair, vals in self.values.items()}

    @property
    def max_norm(self) -> float:
        return max(self.pair_max.values(), default=0.0)


def dmz_apply(chart: ConjugateChart, field, points=None) -> DmzResidualReport:
    """Apply every pair operator Q_ij to ``field`` on the points.

    ``field`` is a single expression or a sequence of expressions (evaluated
    componentwise).  Q_ij(f) = d2_ij f - G_j_i d_i f - G_i_j d_j f
    + eps * g_ij * f.
    """
    if isinstance(field, Expr):
        field = (field,)
    field = tuple(field)
    if points is None:
        points = chart.sample_points()
    n = chart.nvars
    eps = chart.ambient_sign
    values: dict[tuple[int, int], list[np.ndarray]] = {
        (i, j): [] for i in range(n) for j in range(i + 1, n)}
    for u in points:
        jets = [eval_jet(comp, u, 2) for comp in field]
        vals = np.array([j.value for j in jets])
        d1 = np.array([[j.derivative(_unit(i, n)) for j in jets] for i in range(n)])
        for i in range(n):
            for j in range(i + 1, n):
                d2 = np.array([jt.derivative(_pair_index(i, j, n)) for jt in jets])
                gji = chart.christoffel_value(j, i, u)
                gij = chart.christoffel_value(i, j, u)
                gmet = chart.metric_value(i, j, u)
                q = d2 - gji * d1[i] - gij * d1[j] + eps * gmet * vals
                values[(i, j)].append(q)
    return DmzResidualReport(values=values, points=list(points))


@dataclass(frozen=True)
class IntegrabilityResult:
    vacuous: bool
    residual: float
    worst: tuple | None = None

    def ok(self, tol: float) -> bool:
        return self.vacuous or self.residual <= tol


def integrability_residual(chart: ConjugateChart, points=None) -> IntegrabilityResult:
    """Max defect of the three-index compatibility identity.

    For distinct (i, j, k):
    d_i G_k_j + G_k_j G_i_j - G_k_j G_i_k - G_i_j G_k_i + eps * g_ik = 0.
    Charts with p < 2 have no index triple; the result is flagged vacuous.
    """
    n = chart.nvars
    if n < 3:
        return IntegrabilityResult(vacuous=True, residual=0.0)
    if points is None:
        points = chart.sample_points()
    worst = 0.0
    worst_at = None
    for u in points:
        for (i, j, k) in permutations(range(n), 3):
            e = chart.christoffel(k, j)
            d_ikj = 0j if e is None else eval_jet(e, u, 1).derivative(_unit(i, n))
            g_kj = chart.christoffel_value(k, j, u)
            g_ij = chart.christoffel_value(i, j, u)
            g_ik = chart.christoffel_value(i, k, u)
            g_ki = chart.christoffel_value(k, i, u)
            met = chart.metric_value(i, k, u)
            val = d_ikj + g_kj * g_ij - g_kj * g_ik - g_ij * g_ki + chart.ambient_sign * met
            if abs(val) > worst:
                worst = abs(val)
                worst_at = (i, j, k, u)
    return IntegrabilityResult(vacuous=False, residual=worst, worst=worst_at)


@dataclass(frozen=True)
class LaplaceInvariants:
    """Tables m_ij (ordered pairs) and m_ijk (distinct triples) at one point."""

    point: Point
    m_pair: dict[tuple[int, int], complex]
    m_triple: dict[tuple[int, int, int], complex]


def laplace_invariants(chart: ConjugateChart, point: Point) -> LaplaceInvariants:
    """Laplace invariants of the chart's DMZ system at ``point``.

    With the geometric identification a_uv = -G_u_v (coefficient of d_v in
    the {u, v} equation) and b_ij = eps * g_ij:

        m_ij  = d_i a_ji + a_ji * a_ij - b_ij
        m_ijk = a_jk - a_ji   (coefficient comparison across the j-family)
    """
    n = chart.nvars
    u = point

    def a_val(x: int, y: int) -> complex:
        return -chart.christoffel_value(x, y, u)

    def a_partial(v: int, x: int, y: int) -> complex:
        e = chart.christoffel(x, y)
        return 0j if e is None else -eval_jet(e, u, 1).derivative(_unit(v, n))

    m_pair = {}
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            b = chart.ambient_sign * chart.metric_value(i, j, u)
            m_pair[(i, j)] = a_partial(i, j, i) + a_val(j, i) * a_val(i, j) - b
    m_triple = {}
    for (i, j, k) in permutations(range(n), 3):
        m_triple[(i, j, k)] = a_val(j, k) - a_val(j, i)
    return LaplaceInvariants(point=u, m_pair=m_pair, m_triple=m_triple)


def intersection_type_residual(chart: ConjugateChart, points=None) -> float:
    """Max |d_1 G_0_1 - G_1_0 * G_0_1 + eps * g_01| over the points (p = 1 only).

    Vanishing of this quantity is the vanishing of the Laplace invariant
    m_10, the intersection-type criterion.  Both coordinates must be real.
    """
    if chart.p != 1:
        raise WrongDimension(f"intersection-type test needs p = 1, chart has p = {chart.p}")
    if chart.s != 0:
        raise WrongDimension("intersection-type test needs two real coordinates")
    if points is None:
        points = chart.sample_points()
    worst = 0.0
    for u in points:
        e = chart.christoffel(0, 1)
        d1 = 0j if e is None else eval_jet(e, u, 1).derivative((0, 1))
        val = d1 - chart.christoffel_value(1, 0, u) * chart.christoffel_value(0, 1, u) \
            + chart.ambient_sign * chart.metric_value(0, 1, u)
        worst = max(worst, abs(val))
    return worst


@dataclass(frozen=True)
class GeometricReport:
    metric_residual: float
    unit_residual: float
    dmz_residual: float
    conjugation_residual: float

    def max_residual(self) -> float:
        return max(self.metric_residual, self.unit_residual, self.dmz_residual,
                   self.conjugation_residual)


def geometric_consistency(chart: ConjugateChart, points=None) -> GeometricReport:
    """Cross-check an explicit immersion against the chart coefficients.

    Verifies on the points that g_ij = <d_i h, d_j h> in the ambient product,
    that <h, h> equals the ambient sign, and that h solves the chart's DMZ
    system; also reports the data's conjugation-symmetry defect.
    """
    if chart.h_components is None:
        raise ChartError("geometric_consistency needs [immersion] data")
    if points is None:
        points = chart.sample_points()
    n = chart.nvars
    amb = ambient_gram(len(chart.h_components), chart.ambient_sign)
    metric_res = 0.0
    unit_res = 0.0
    for u in points:
        jets = [eval_jet(comp, u, 1) for comp in chart.h_components]
        h = np.array([j.value for j in jets])
        dh = np.array([[j.derivative(_unit(i, n)) for j in jets] for i in range(n)])
        unit_res = max(unit_res, abs(h @ amb @ h - chart.ambient_sign))
        for i in range(n):
            for j in range(i, n):
                got = dh[i] @ amb @ dh[j]
                metric_res = max(metric_res, abs(got - chart.metric_value(i, j, u)))
    dmz = dmz_apply(chart, chart.h_components, points)
    return GeometricReport(
        metric_residual=metric_res,
        unit_residual=unit_res,
        dmz_residual=dmz.max_norm,
        conjugation_residual=chart.conjugation_symmetry_residual(points),
    )
