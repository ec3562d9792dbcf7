"""Built-in example charts and curve pairs.

Gallery entries are regular chart/curve files shipped with the package and
used by the CLI, the test suite, and the acceptance criteria.  The headline
numbers frozen for each entry live in the regression fixtures of the tests.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..chart.fileio import load_chart, load_curve_pair

_CHARTS = (
    "flat_torus_p1", "flat_torus_p2", "flat_torus_p3",
    "intersect_p1", "second_species_p1", "full_rank_p1",
    "complex_pair_p1", "cylinder",
)
_CURVES = (
    "curves_disjoint", "curves_cos", "curves_exp",
    "curves_polar", "curves_polar_guard",
)


def chart_names() -> tuple[str, ...]:
    return _CHARTS


def curve_names() -> tuple[str, ...]:
    return _CURVES


def path(name: str) -> Path:
    suffix = ".curves" if name in _CURVES else ".chart"
    res = resources.files(__package__) / f"{name}{suffix}"
    return Path(str(res))


def chart(name: str):
    if name not in _CHARTS:
        raise KeyError(f"unknown gallery chart {name!r}; have {_CHARTS}")
    return load_chart(path(name))


def curve_pair(name: str):
    if name not in _CURVES:
        raise KeyError(f"unknown gallery curve pair {name!r}; have {_CURVES}")
    return load_curve_pair(path(name))
