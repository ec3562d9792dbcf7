"""Chart data model: coordinates, conjugation pattern, coefficient tables, grids."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..errors import ChartError
from ..exprlang import Expr, eval_value, max_coord_index

Point = tuple[complex, ...]


def ambient_gram(dim: int, ambient_sign: int) -> np.ndarray:
    """Diagonal Gram matrix of the ambient inner product.

    Sphere charts (+1) sit in Euclidean space; hyperbolic charts (-1) sit in
    Lorentz space with the *first* coordinate timelike.
    """
    g = np.ones(dim)
    if ambient_sign < 0:
        g[0] = -1.0
    return np.diag(g)


@dataclass(frozen=True)
class Grid:
    """Tensor-product lattice over the chart's real parameters.

    Real coordinates contribute one axis each; a conjugate pair (a, b) with
    a < b contributes two axes (x, y) and is sampled as u_a = x + iy,
    u_b = x - iy, which keeps every grid point conjugation-symmetric.
    """

    blocks: tuple[tuple, ...]  # ("real", i, lo, hi, n) | ("pair", a, b, xlo, xhi, nx, ylo, yhi, ny)
    basepoint_params: tuple[float, ...] | None = None

    def axes(self) -> list[np.ndarray]:
        out = []
        for blk in self.blocks:
            if blk[0] == "real":
                _, _, lo, hi, n = blk
                out.append(np.linspace(lo, hi, n))
            else:
                _, _, _, xlo, xhi, nx, ylo, yhi, ny = blk
                out.append(np.linspace(xlo, xhi, nx))
                out.append(np.linspace(ylo, yhi, ny))
        return out

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.axes())

    def nvars(self) -> int:
        n = 0
        for blk in self.blocks:
            n += 1 if blk[0] == "real" else 2
        return n

    def point_from_params(self, params) -> Point:
        """Map real parameters (one per axis) to complex chart coordinates."""
        coords: dict[int, complex] = {}
        k = 0
        for blk in self.blocks:
            if blk[0] == "real":
                coords[blk[1]] = complex(params[k])
                k += 1
            else:
                _, a, b = blk[:3]
                x, y = params[k], params[k + 1]
                coords[a] = complex(x, y)
                coords[b] = complex(x, -y)
                k += 2
        return tuple(coords[i] for i in range(len(coords)))

    def points(self) -> list[Point]:
        axes = self.axes()
        return [self.point_from_params(vals) for vals in product(*axes)]

    def basepoint(self) -> Point:
        if self.basepoint_params is not None:
            return self.point_from_params(self.basepoint_params)
        params = [ax[len(ax) // 2] for ax in self.axes()]
        return self.point_from_params(params)

    def node_params(self, index: tuple[int, ...]):
        axes = self.axes()
        return [ax[i] for ax, i in zip(axes, index)]


def default_conj(p: int, s: int) -> tuple[int, ...]:
    """Canonical involution: pairs (2j, 2j+1) for j < s, identity elsewhere."""
    conj = list(range(p + 1))
    for j in range(s):
        conj[2 * j], conj[2 * j + 1] = 2 * j + 1, 2 * j
    return tuple(conj)


def conj_point(chart: "ConjugateChart", u: Point) -> Point:
    """The conjugated evaluation point ū with ū_i = conj(u_{ī})."""
    return tuple(complex(u[chart.conj[i]]).conjugate() for i in range(len(u)))


@dataclass(frozen=True)
class ConjugateChart:
    """A conjugate chart / DMZ system given by its coefficient functions.

    ``gamma_table[(j, i)]`` holds the Christoffel symbol with derivative
    direction ``i`` attached to the pair equation, i.e. the coefficient
    ``G_j_i`` of the chart file; missing entries are zero.  ``metric_table``
    is keyed by ``(i, j)`` with ``i <= j``.
    """

    p: int
    s: int
    ambient_sign: int
    gamma_table: dict[tuple[int, int], Expr] = field(default_factory=dict)
    metric_table: dict[tuple[int, int], Expr] = field(default_factory=dict)
    h_components: tuple[Expr, ...] | None = None
    support: Expr | None = None
    grid: Grid | None = None
    conj: tuple[int, ...] | None = None
    name: str = ""

    def __post_init__(self):
        if self.p < 0:
            raise ChartError("chart needs p >= 0")
        if not 0 <= 2 * self.s <= self.p + 1:
            raise ChartError(f"invalid pair count s={self.s} for p={self.p}")
        if self.ambient_sign not in (1, -1):
            raise ChartError("ambient_sign must be +1 (sphere) or -1 (hyperbolic)")
        conj = self.conj if self.conj is not None else default_conj(self.p, self.s)
        object.__setattr__(self, "conj", tuple(conj))
        n = self.p + 1
        if len(self.conj) != n or sorted(self.conj) != list(range(n)):
            raise ChartError("conj must be a permutation of the coordinate indices")
        if any(self.conj[self.conj[i]] != i for i in range(n)):
            raise ChartError("conj must be an involution")
        if sum(1 for i in range(n) if self.conj[i] != i) != 2 * self.s:
            raise ChartError("conj moves a number of indices incompatible with s")
        for (j, i) in self.gamma_table:
            if j == i or not (0 <= i < n and 0 <= j < n):
                raise ChartError(f"bad christoffel key ({j},{i})")
        for (i, j) in self.metric_table:
            if not (0 <= i <= j < n):
                raise ChartError(f"metric keys must satisfy i <= j, got ({i},{j})")
        for table in (self.gamma_table, self.metric_table):
            for expr in table.values():
                if max_coord_index(expr) >= n:
                    raise ChartError("coefficient expression uses an out-of-range coordinate")
        if self.h_components is not None:
            for expr in self.h_components:
                if max_coord_index(expr) >= n:
                    raise ChartError("immersion component uses an out-of-range coordinate")
        if self.support is not None and max_coord_index(self.support) >= n:
            raise ChartError("support expression uses an out-of-range coordinate")

    # -- accessors ---------------------------------------------------------

    @property
    def nvars(self) -> int:
        return self.p + 1

    @property
    def ambient_dim(self) -> int | None:
        """Ambient R^{n+1} dimension when an immersion is present."""
        return None if self.h_components is None else len(self.h_components)

    def christoffel(self, j: int, i: int) -> Expr | None:
        return self.gamma_table.get((j, i))

    def metric(self, i: int, j: int) -> Expr | None:
        return self.metric_table.get((min(i, j), max(i, j)))

    def christoffel_value(self, j: int, i: int, u: Point) -> complex:
        e = self.christoffel(j, i)
        return 0j if e is None else eval_value(e, u)

    def metric_value(self, i: int, j: int, u: Point) -> complex:
        e = self.metric(i, j)
        return 0j if e is None else eval_value(e, u)

    def sample_points(self, max_points: int = 200) -> list[Point]:
        if self.grid is None:
            raise ChartError("chart has no grid")
        pts = self.grid.points()
        if len(pts) <= max_points:
            return pts
        stride = max(1, len(pts) // max_points)
        return pts[::stride]

    # -- validation ----------------------------------------------------------

    def conjugation_symmetry_residual(self, points=None) -> float:
        """Max defect of the data symmetry Γ_{ji}^i(ū) = conj(Γ_{j̄ī}^ī(u)),
        g_ij(ū) = conj(g_{īj̄}(u)) over the sample points."""
        if points is None:
            points = self.sample_points()
        worst = 0.0
        n = self.nvars
        for u in points:
            ub = conj_point(self, u)
            for j in range(n):
                for i in range(n):
                    if i == j:
                        continue
                    lhs = self.christoffel_value(j, i, ub)
                    rhs = self.christoffel_value(self.conj[j], self.conj[i], u).conjugate()
                    worst = max(worst, abs(lhs - rhs))
            for i in range(n):
                for j in range(i, n):
                    lhs = self.metric_value(i, j, ub)
                    rhs = self.metric_value(self.conj[i], self.conj[j], u).conjugate()
                    worst = max(worst, abs(lhs - rhs))
        return worst
