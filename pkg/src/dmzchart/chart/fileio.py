"""Plain-text chart and curve-pair files.

Chart files are INI-style with sections ``[meta]``, ``[christoffel]``,
``[metric]``, optional ``[immersion]``, ``[support]``, ``[grid]`` and
optional ``[curves]``.  Entry ``G_j_i`` is the Christoffel symbol with
derivative direction ``i`` entering the (j, i) pair equation, ``g_i_j`` a
metric coefficient.  Conjugate pairs are explicit: ``pairs = 0:1 2:3``.
See the README for a complete description.
"""

from __future__ import annotations

import configparser
import re
from pathlib import Path

from ..errors import ChartFormatError
from ..exprlang import parse
from .core import ConjugateChart, Grid, default_conj

_GKEY = re.compile(r"^G_(\d+)_(\d+)$")
_MKEY = re.compile(r"^g_(\d+)_(\d+)$")
_HKEY = re.compile(r"^h(\d+)$")


def _read_ini(text: str) -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ChartFormatError(f"malformed chart file: {exc}") from exc
    return cp


def _floats(value: str) -> list[float]:
    return [float(tok) for tok in value.replace(",", " ").split()]


def _parse_grid(section, nvars: int, conj: tuple[int, ...]) -> Grid:
    blocks = []
    covered: set[int] = set()
    basepoint = None
    for key, value in section.items():
        if key == "basepoint":
            basepoint = tuple(_floats(value))
            continue
        if key.startswith("z"):
            a = int(key[1:])
            b = conj[a]
            if b == a:
                raise ChartFormatError(f"grid key {key} names a non-pair coordinate")
            vals = _floats(value)
            if len(vals) != 6:
                raise ChartFormatError(f"pair axis {key} needs 'xlo xhi nx ylo yhi ny'")
            blocks.append(("pair", a, b, vals[0], vals[1], int(vals[2]),
                           vals[3], vals[4], int(vals[5])))
            covered |= {a, b}
        elif key.startswith("u"):
            i = int(key[1:])
            if conj[i] != i:
                raise ChartFormatError(f"grid key {key} names a pair coordinate; use z{min(i, conj[i])}")
            vals = _floats(value)
            if len(vals) != 3:
                raise ChartFormatError(f"real axis {key} needs 'lo hi n'")
            blocks.append(("real", i, vals[0], vals[1], int(vals[2])))
            covered.add(i)
        else:
            raise ChartFormatError(f"unknown grid key {key!r}")
    if covered != set(range(nvars)):
        missing = sorted(set(range(nvars)) - covered)
        raise ChartFormatError(f"grid does not cover coordinates {missing}")
    blocks.sort(key=lambda blk: blk[1])
    return Grid(tuple(blocks), basepoint)


def parse_chart_text(text: str, name: str = "") -> ConjugateChart:
    cp = _read_ini(text)
    if "meta" not in cp:
        raise ChartFormatError("chart file needs a [meta] section")
    meta = cp["meta"]
    try:
        p = int(meta["p"])
        s = int(meta.get("s", "0"))
    except (KeyError, ValueError) as exc:
        raise ChartFormatError(f"bad [meta] integers: {exc}") from exc
    ambient = meta.get("ambient", "sphere").strip().lower()
    if ambient in ("sphere", "+1", "1"):
        eps = 1
    elif ambient in ("hyperbolic", "-1"):
        eps = -1
    else:
        raise ChartFormatError(f"unknown ambient {ambient!r}")
    nvars = p + 1

    if "pairs" in meta:
        conj = list(range(nvars))
        spec = meta["pairs"].strip()
        pairs = [pr for pr in re.split(r"[,\s]+", spec) if pr]
        if len(pairs) != s:
            raise ChartFormatError(f"expected {s} pairs, got {len(pairs)}")
        for pr in pairs:
            try:
                a, b = (int(tok) for tok in pr.split(":"))
            except ValueError as exc:
                raise ChartFormatError(f"bad pair {pr!r}; use a:b") from exc
            conj[a], conj[b] = b, a
        conj = tuple(conj)
    else:
        conj = default_conj(p, s)

    def parse_expr(raw: str, where: str):
        try:
            return parse(raw, nvars=nvars)
        except Exception as exc:
            raise ChartFormatError(f"bad expression for {where}: {exc}") from exc

    gamma_table = {}
    if "christoffel" in cp:
        for key, value in cp["christoffel"].items():
            m = _GKEY.match(key)
            if m is None:
                raise ChartFormatError(f"bad christoffel key {key!r}; use G_j_i")
            j, i = int(m.group(1)), int(m.group(2))
            gamma_table[(j, i)] = parse_expr(value, key)

    metric_table = {}
    if "metric" in cp:
        for key, value in cp["metric"].items():
            m = _MKEY.match(key)
            if m is None:
                raise ChartFormatError(f"bad metric key {key!r}; use g_i_j")
            i, j = sorted((int(m.group(1)), int(m.group(2))))
            metric_table[(i, j)] = parse_expr(value, key)

    h_components = None
    if "immersion" in cp:
        comps = {}
        for key, value in cp["immersion"].items():
            m = _HKEY.match(key)
            if m is None:
                raise ChartFormatError(f"bad immersion key {key!r}; use h<k>")
            comps[int(m.group(1))] = parse_expr(value, key)
        if sorted(comps) != list(range(len(comps))):
            raise ChartFormatError("immersion components must be h0..h<N> without gaps")
        h_components = tuple(comps[k] for k in range(len(comps)))

    support = None
    if "support" in cp:
        if "gamma" not in cp["support"]:
            raise ChartFormatError("[support] needs a 'gamma' entry")
        support = parse_expr(cp["support"]["gamma"], "gamma")

    grid = None
    if "grid" in cp:
        grid = _parse_grid(cp["grid"], nvars, conj)

    return ConjugateChart(
        p=p, s=s, ambient_sign=eps, gamma_table=gamma_table,
        metric_table=metric_table, h_components=h_components,
        support=support, grid=grid, conj=conj, name=name or meta.get("name", ""),
    )


def load_chart(path: str | Path) -> ConjugateChart:
    path = Path(path)
    return parse_chart_text(path.read_text(encoding="utf-8"), name=path.stem)


def load_curve_pair(path: str | Path):
    """Load a [curves] section into a CurvePair (see dmzchart.curves)."""
    from ..curves import CurvePair

    path = Path(path)
    cp = _read_ini(path.read_text(encoding="utf-8"))
    if "curves" not in cp:
        raise ChartFormatError("file has no [curves] section")
    sec = cp["curves"]
    try:
        dim = int(sec["dim"])
        index = int(sec.get("signature", "0"))
        w1 = _floats(sec["window1"])
        w2 = _floats(sec["window2"])
    except (KeyError, ValueError) as exc:
        raise ChartFormatError(f"bad [curves] section: {exc}") from exc

    def components(prefix: str):
        comps = {}
        for key, value in sec.items():
            if key.startswith(prefix + "_"):
                comps[int(key[len(prefix) + 1:])] = parse(value, nvars=1)
        if sorted(comps) != list(range(dim)):
            raise ChartFormatError(f"{prefix} needs components {prefix}_0..{prefix}_{dim - 1}")
        return tuple(comps[k] for k in range(dim))

    return CurvePair(
        alpha1=components("alpha1"), alpha2=components("alpha2"),
        dim=dim, index=index,
        window1=(w1[0], w1[1]), window2=(w2[0], w2[1]),
        name=path.stem,
    )
