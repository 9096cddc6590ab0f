"""Floating-point point-cloud export for the classified surfaces.

This is the one deliberately non-exact corner of the package: real points
of the model surfaces are sampled over an angular grid, checked against
the exact quadrics of the surface to a tight residual, and written out as
CSV or PLY clouds after an optional linear projection to 3-space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .segre import mu_transform, toric_projection
from . import geometry

SURFACES = ("dp6", "ring", "spindle", "horn", "veronese")

_TAN_CUTOFF = 1e8


def _real_float_forms(span, mu_index, coords):
    """Real and imaginary parts of the transformed quadrics, as float rows."""
    out = []
    for q in span.basis:
        xq = mu_transform(mu_index, q, coords)
        re = [[float(a.re) for a in row] for row in xq.matrix.entries()]
        im = [[float(a.im) for a in row] for row in xq.matrix.entries()]
        for mat in (re, im):
            if any(any(row) for row in mat):
                out.append(mat)
    return out


def _float_forms(span):
    out = []
    for q in span.basis:
        if not q.is_real:
            raise ValueError("expected a real form span")
        out.append([[float(a.re) for a in row] for row in q.matrix.entries()])
    return out


def surface_quadrics(surface: str) -> list[list[list[float]]]:
    """The defining quadrics of a sample surface, as float matrices."""
    if surface == "dp6":
        _, span = toric_projection({5, 6})
        return _real_float_forms(span, 2, span.coords)
    if surface == "ring":
        _, span = toric_projection({1, 2, 5, 6})
        return _real_float_forms(span, 2, span.coords)
    if surface == "spindle":
        return _float_forms(geometry.cyclide_pipeline()[0])
    if surface == "horn":
        return _float_forms(geometry.cyclide_pipeline()[1])
    if surface == "veronese":
        return _float_forms(geometry.veronese_data()[1])
    raise ValueError(f"unknown surface {surface!r}")


def _dp6_point(a: float, b: float):
    return (
        2.0, math.cos(a), math.sin(a), math.cos(b), math.sin(b),
        math.cos(a - b), -math.sin(a - b),
    )


def _ring_point(a: float, b: float):
    return (2.0, math.cos(a), math.sin(a), math.cos(b), math.sin(b))


def _spindle_point(a: float, b: float):
    u = math.tan(b / 2.0)
    if u == 0.0 or not math.isfinite(u) or abs(u) > _TAN_CUTOFF:
        return None
    h = 1.0 / math.sqrt(2.0)
    return (
        h * (u + 1.0 / u), math.cos(a), math.sin(a), h * (1.0 / u - u), 1.0,
    )


def _horn_point(a: float, b: float):
    u = math.tan(b / 2.0)
    if u == 0.0 or not math.isfinite(u) or abs(u) > _TAN_CUTOFF:
        return None
    return (
        -u - 1.0 / u, u, math.sqrt(2.0), math.sin(a) / u, math.cos(a) / u,
    )


def _veronese_point(a: float, b: float):
    s = math.tan(a / 2.0)
    t = math.tan(b / 2.0)
    if abs(s) > _TAN_CUTOFF or abs(t) > _TAN_CUTOFF:
        return None
    return (1.0, s * t, s, t, s * s, t * t)


_PARAMS = {
    "dp6": _dp6_point,
    "ring": _ring_point,
    "spindle": _spindle_point,
    "horn": _horn_point,
    "veronese": _veronese_point,
}


def surface_points(surface: str, resolution: int):
    """Sample the real surface over a resolution^2 angular grid.

    Returns (points, skipped); grid nodes hitting a degenerate parameter
    (a pole of the angle-to-line substitution) are skipped and counted.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    param = _PARAMS[surface]
    pts = []
    skipped = 0
    for i in range(resolution):
        a = 2.0 * math.pi * i / resolution
        for j in range(resolution):
            b = 2.0 * math.pi * j / resolution
            p = param(a, b)
            if p is None:
                skipped += 1
            else:
                pts.append(p)
    return pts, skipped


def residual(forms, point) -> float:
    """Largest normalized quadric residual |p^T A p| / |p|^2 over the forms."""
    norm = sum(x * x for x in point)
    worst = 0.0
    for mat in forms:
        val = 0.0
        for i, row in enumerate(mat):
            for j, a in enumerate(row):
                if a:
                    val += a * point[i] * point[j]
        worst = max(worst, abs(val) / norm)
    return worst


@dataclass
class PointCloud:
    """Projected 3-space samples of one surface."""

    points: list[tuple[float, float, float]]
    surface: str
    projection: list[list[float]]
    skipped: int
    max_residual: float


def default_projection(ambient_dim: int) -> list[list[float]]:
    """Orthographic projection onto the first three affine coordinates."""
    return [[1.0 if j == k else 0.0 for j in range(ambient_dim - 1)] for k in range(3)]


def sample(surface: str, resolution: int, projection=None) -> PointCloud:
    """Sample, verify residuals, and project a surface to 3-space."""
    if surface not in SURFACES:
        raise ValueError(f"unknown surface {surface!r}")
    forms = surface_quadrics(surface)
    pts, skipped = surface_points(surface, resolution)
    dim = len(pts[0])
    proj = default_projection(dim) if projection is None else projection
    if len(proj) != 3 or any(len(row) != dim - 1 for row in proj):
        raise ValueError(f"projection must be 3 rows of {dim - 1} entries")
    worst = 0.0
    out = []
    for p in pts:
        worst = max(worst, residual(forms, p))
        affine = [x / p[0] for x in p[1:]]
        out.append(tuple(sum(r * x for r, x in zip(row, affine)) for row in proj))
    return PointCloud(out, surface, [list(r) for r in proj], skipped, worst)


def write_csv(cloud: PointCloud, path: str) -> None:
    with open(path, "w") as fh:
        fh.write("x,y,z\n")
        for x, y, z in cloud.points:
            fh.write(f"{x:.12g},{y:.12g},{z:.12g}\n")


def write_ply(cloud: PointCloud, path: str) -> None:
    with open(path, "w") as fh:
        fh.write("ply\nformat ascii 1.0\n")
        fh.write(f"element vertex {len(cloud.points)}\n")
        fh.write("property float x\nproperty float y\nproperty float z\n")
        fh.write("end_header\n")
        for x, y, z in cloud.points:
            fh.write(f"{x:.12g} {y:.12g} {z:.12g}\n")


def load_projection(path: str) -> list[list[float]]:
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                rows.append([float(tok) for tok in line.replace(",", " ").split()])
    if len(rows) != 3:
        raise ValueError("projection file must contain exactly 3 rows")
    return rows
