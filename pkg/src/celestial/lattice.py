"""Lattice polygons with unimodular involutions and their classification.

A toric surface with an antiholomorphic involution leaves behind a convex
lattice polygon together with a linear involution of Z^2 preserving it;
the directions of minimal lattice width that the involution fixes up to
sign record the toric families of circles on the surface.  This module
enumerates every such pair inside the centered 3x3 grid and reduces them,
up to unimodular equivalence compatible with the involutions, to the ten
raw classes that collapse onto eight named surface types.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

Point = tuple[int, int]
IntMatrix = tuple[tuple[int, int], tuple[int, int]]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class LatticePolygon:
    """Convex polygon with vertices in Z^2, counterclockwise, dimension 2."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        n = len(self.vertices)
        if n < 3:
            raise ValueError("polygon needs at least 3 vertices")
        for i in range(n):
            if _cross(self.vertices[i], self.vertices[(i + 1) % n], self.vertices[(i + 2) % n]) <= 0:
                raise ValueError("vertices must be strictly convex and counterclockwise")

    @property
    def edges(self) -> tuple[tuple[Point, Point], ...]:
        n = len(self.vertices)
        return tuple((self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n))

    def twice_area(self) -> int:
        s = 0
        for (x0, y0), (x1, y1) in self.edges:
            s += x0 * y1 - x1 * y0
        return s

    def contains(self, p: Point) -> bool:
        return all(_cross(a, b, p) >= 0 for a, b in self.edges)

    def lattice_points(self) -> tuple[Point, ...]:
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        pts = [
            (x, y)
            for x in range(min(xs), max(xs) + 1)
            for y in range(min(ys), max(ys) + 1)
            if self.contains((x, y))
        ]
        return tuple(sorted(pts))

    def boundary_points(self) -> tuple[Point, ...]:
        pts = {v for v in self.vertices}
        for (x0, y0), (x1, y1) in self.edges:
            g = gcd(abs(x1 - x0), abs(y1 - y0))
            for k in range(1, g):
                pts.add((x0 + k * (x1 - x0) // g, y0 + k * (y1 - y0) // g))
        return tuple(sorted(pts))

    def singular_vertex_count(self) -> int:
        """Vertices whose primitive edge directions do not span Z^2.

        Each such corner is an isolated singular point of the projective
        toric surface attached to the polygon.
        """
        n = len(self.vertices)
        count = 0
        for i in range(n):
            v = self.vertices[i]
            u1 = _primitive_between(v, self.vertices[(i - 1) % n])
            u2 = _primitive_between(v, self.vertices[(i + 1) % n])
            if abs(u1[0] * u2[1] - u1[1] * u2[0]) != 1:
                count += 1
        return count


def _primitive_between(a: Point, b: Point) -> Point:
    dx, dy = b[0] - a[0], b[1] - a[1]
    g = gcd(abs(dx), abs(dy))
    return (dx // g, dy // g)


def convex_hull(points) -> LatticePolygon:
    """Minimal convex polygon containing the points (monotone chain)."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) < 3:
        raise ValueError("need at least 3 distinct points")
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 3:
        raise ValueError("points are collinear")
    return LatticePolygon(tuple(verts))


def lattice_counts(p: LatticePolygon) -> tuple[int, int]:
    """(interior, boundary) lattice point counts."""
    boundary = len(p.boundary_points())
    return len(p.lattice_points()) - boundary, boundary


def degree(p: LatticePolygon) -> int:
    """Degree of the attached surface: 2*interior + boundary - 2 (= 2*area)."""
    i, b = lattice_counts(p)
    return 2 * i + b - 2


@dataclass(frozen=True)
class UnimodularInvolution:
    """An order-2 linear map of Z^2 with determinant +-1."""

    m: IntMatrix

    def __post_init__(self):
        (a, b), (c, d) = self.m
        if a * d - b * c not in (1, -1):
            raise ValueError("matrix is not unimodular")
        if self.compose(self).m != ((1, 0), (0, 1)):
            raise ValueError("matrix is not an involution")

    def apply(self, p: Point) -> Point:
        (a, b), (c, d) = self.m
        return (a * p[0] + b * p[1], c * p[0] + d * p[1])

    def compose(self, other: "UnimodularInvolution") -> "UnimodularInvolution":
        prod = _mat_mul(self.m, other.m)
        obj = object.__new__(UnimodularInvolution)
        object.__setattr__(obj, "m", prod)
        return obj

    def fixes_direction(self, d: Point) -> bool:
        img = self.apply(d)
        return img == d or img == (-d[0], -d[1])

    def preserves(self, p: LatticePolygon) -> bool:
        return set(map(self.apply, p.vertices)) == set(p.vertices)


def _mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


SIGMA_0 = UnimodularInvolution(((1, 0), (0, 1)))
SIGMA_1 = UnimodularInvolution(((-1, 0), (0, 1)))
SIGMA_2 = UnimodularInvolution(((-1, 0), (0, -1)))
SIGMA_3 = UnimodularInvolution(((0, 1), (1, 0)))
STANDARD_INVOLUTIONS = (SIGMA_0, SIGMA_1, SIGMA_2, SIGMA_3)

# presentation labels for the four direction classes that occur in the grid
ARROWS = {(1, 0): "right", (0, 1): "down", (1, 1): "down-left", (1, -1): "down-right"}


def _canonical_direction(d: Point) -> Point:
    if d[0] < 0 or (d[0] == 0 and d[1] < 0):
        return (-d[0], -d[1])
    return d


def width(p: LatticePolygon, direction: Point) -> int:
    """Lattice width along a primitive direction.

    The measuring functional is the primitive linear form whose kernel is
    spanned by the direction; width is its max minus min over the polygon.
    """
    a, b = direction
    if gcd(abs(a), abs(b)) != 1:
        raise ValueError("direction must be primitive")
    vals = [b * x - a * y for x, y in p.vertices]
    return max(vals) - min(vals)


def _candidate_directions(p: LatticePolygon, bound: int | None = None):
    if bound is None:
        xs = [v[0] for v in p.vertices]
        ys = [v[1] for v in p.vertices]
        bound = max(max(xs) - min(xs), max(ys) - min(ys))
    dirs = set()
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            if (a, b) != (0, 0) and gcd(a, abs(b)) == 1:
                dirs.add(_canonical_direction((a, b)))
    return sorted(dirs)


def minimal_width_directions(p: LatticePolygon, bound: int | None = None) -> frozenset[Point]:
    """All primitive directions (up to sign) of globally minimal width.

    Directions wider than the coordinate span in both axes are dominated, so
    the search is bounded by the span; the bound is covered by a test against
    an exhaustive search.
    """
    dirs = _candidate_directions(p, bound)
    widths = {d: width(p, d) for d in dirs}
    w = min(widths.values())
    return frozenset(d for d, val in widths.items() if val == w)


def stable_directions(p: LatticePolygon, inv: UnimodularInvolution) -> frozenset[Point]:
    """Involution-fixed directions of minimal width among the fixed ones.

    For every surface of degree > 2 this set equals the involution-fixed
    part of the global minimal-width directions.  Degree 2 is special: the
    quadric is covered by lines and the minimal-width criterion is vacuous,
    but the involution still singles out its fixed direction classes.
    """
    fixed = [d for d in _candidate_directions(p) if inv.fixes_direction(d)]
    if not fixed:
        return frozenset()
    widths = {d: width(p, d) for d in fixed}
    w = min(widths.values())
    return frozenset(d for d, val in widths.items() if val == w)


def forbidden_edge(p: LatticePolygon, inv: UnimodularInvolution) -> bool:
    """True iff some boundary edge with exactly two lattice points is fixed.

    Such an edge would put a real line on the surface, which the ambient
    sphere does not allow.
    """
    for a, b in p.edges:
        if gcd(abs(b[0] - a[0]), abs(b[1] - a[1])) == 1:
            if {inv.apply(a), inv.apply(b)} == {a, b}:
                return True
    return False


@dataclass(frozen=True)
class LatticeType:
    """A polygon, a compatible involution, and its circle directions."""

    polygon: LatticePolygon
    involution: UnimodularInvolution
    directions: frozenset[Point]

    @staticmethod
    def of(polygon: LatticePolygon, involution: UnimodularInvolution) -> "LatticeType":
        if not involution.preserves(polygon):
            raise ValueError("involution does not preserve the polygon")
        return LatticeType(polygon, involution, stable_directions(polygon, involution))


def _unimodular_search_matrices(bound: int = 3):
    rng = range(-bound, bound + 1)
    out = []
    for a, b, c, d in itertools.product(rng, rng, rng, rng):
        if a * d - b * c in (1, -1):
            out.append(((a, b), (c, d)))
    return out


_UNIMODULAR_CACHE: list[IntMatrix] | None = None


def _unimodular_matrices() -> list[IntMatrix]:
    global _UNIMODULAR_CACHE
    if _UNIMODULAR_CACHE is None:
        _UNIMODULAR_CACHE = _unimodular_search_matrices(3)
    return _UNIMODULAR_CACHE


def unimodular_equivalent(a: LatticeType, b: LatticeType) -> bool:
    """Equivalence by a linear unimodular map compatible with the involutions.

    The search ranges over integer matrices with entries bounded by 3, which
    is exhaustive for polygons inside the 3x3 grid (cross-checked by tests).
    """
    va, vb = set(a.polygon.vertices), set(b.polygon.vertices)
    if len(va) != len(vb):
        return False
    for m in _unimodular_matrices():
        if {(m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y) for x, y in va} == vb:
            if _mat_mul(m, a.involution.m) == _mat_mul(b.involution.m, m):
                return True
    return False


# expected surface rows keyed by (degree, interior, singular count); the
# ring/spindle pair shares a key and is split by the direction count
_ROW_NAMES = {
    (8, 1, 0): "dS",
    (6, 1, 0): "dP6",
    (6, 1, 1): "weak dP6",
    (4, 0, 0): "Veronese surface",
    (4, 1, 4): "ring-or-spindle",
    (4, 1, 3): "horn cyclide",
    (2, 0, 0): "2-sphere",
}

# circles through a general point, for each named type (None = infinitely many)
CIRCLE_COUNTS = {
    "dS": 2,
    "dP6": 3,
    "weak dP6": 2,
    "Veronese surface": None,
    "ring cyclide": 4,
    "spindle cyclide": 2,
    "horn cyclide": 2,
    "2-sphere": None,
}


@dataclass(frozen=True)
class LatticeClass:
    """One classified lattice type with its table data."""

    table_ref: str
    name: str
    lattice_type: LatticeType
    interior: int
    boundary: int
    degree: int
    merges_with: str | None = None

    @property
    def directions(self) -> frozenset[Point]:
        return self.lattice_type.directions


def _canonical_table() -> list[LatticeClass]:
    square = convex_hull([(-1, -1), (1, -1), (1, 1), (-1, 1)])
    hexagon = convex_hull([(-1, 1), (0, 1), (1, 0), (1, -1), (0, -1), (-1, 0)])
    pentagon = convex_hull([(-1, 0), (0, 1), (1, 0), (1, -1), (-1, -1)])
    triangle = convex_hull([(-1, 1), (1, -1), (-1, -1)])
    diamond = convex_hull([(-1, 0), (0, 1), (1, 0), (0, -1)])
    horn_triangle = convex_hull([(-1, -1), (0, 1), (1, -1)])
    unit_square = convex_hull([(-1, -1), (0, -1), (0, 0), (-1, 0)])

    rows = [
        ("a", "dS", square, SIGMA_0, None),
        ("b", "dP6", hexagon, SIGMA_2, None),
        ("c", "weak dP6", pentagon, SIGMA_1, None),
        ("d", "Veronese surface", triangle, SIGMA_0, None),
        ("e", "ring cyclide", diamond, SIGMA_2, None),
        ("f", "spindle cyclide", diamond, SIGMA_1, None),
        ("g", "horn cyclide", horn_triangle, SIGMA_1, None),
        ("h", "2-sphere", unit_square, SIGMA_3, None),
        ("a'", "dS", square, SIGMA_1, "a"),
        ("a''", "dS", square, SIGMA_2, "a"),
    ]
    out = []
    for ref, name, poly, inv, merges in rows:
        i, b = lattice_counts(poly)
        out.append(
            LatticeClass(ref, name, LatticeType.of(poly, inv), i, b, degree(poly), merges)
        )
    return out


CANONICAL_CLASSES: tuple[LatticeClass, ...] = tuple(_canonical_table())

_ALLOWED_COUNTS = {(0, 4), (0, 6), (1, 4), (1, 6), (1, 8)}

_GRID = [(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)]


def grid_polygons() -> list[LatticePolygon]:
    """All distinct convex lattice polygons inside the centered 3x3 grid."""
    seen = {}
    for r in range(3, 10):
        for pts in itertools.combinations(_GRID, r):
            try:
                hull = convex_hull(pts)
            except ValueError:
                continue
            seen.setdefault(hull.vertices, hull)
    return list(seen.values())


def _survives(poly: LatticePolygon, inv: UnimodularInvolution) -> str | None:
    """Name of the surface row a candidate pair belongs to, or None."""
    i, b = lattice_counts(poly)
    if (i, b) not in _ALLOWED_COUNTS:
        return None
    if not inv.preserves(poly):
        return None
    if forbidden_edge(poly, inv):
        return None
    d = 2 * i + b - 2
    global_min = minimal_width_directions(poly)
    stable_min = [v for v in global_min if inv.fixes_direction(v)]
    if d != 2 and len(stable_min) < 2:
        return None
    name = _ROW_NAMES.get((d, i, poly.singular_vertex_count()))
    if name == "ring-or-spindle":
        name = "ring cyclide" if len(stable_min) >= 4 else "spindle cyclide"
    return name


def classify_grid() -> list[LatticeClass]:
    """Classify all involution-polygon pairs in the centered 3x3 grid.

    Returns the ten raw classes; the two extra dS rows carry a
    ``merges_with`` marker because their involutions are conjugate to the
    trivial one through automorphisms of the surface itself, so they name
    the same surface.
    """
    survivors: list[LatticeType] = []
    for poly in grid_polygons():
        for inv in STANDARD_INVOLUTIONS:
            if _survives(poly, inv) is not None:
                survivors.append(LatticeType.of(poly, inv))

    classes: list[list[LatticeType]] = []
    for lt in survivors:
        for group in classes:
            if unimodular_equivalent(group[0], lt):
                group.append(lt)
                break
        else:
            classes.append([lt])

    out: list[LatticeClass] = []
    for group in classes:
        match = [c for c in CANONICAL_CLASSES if unimodular_equivalent(c.lattice_type, group[0])]
        if len(match) != 1:
            raise RuntimeError(
                f"grid class {group[0]} matches {len(match)} canonical classes"
            )
        out.append(match[0])
    if len(out) != len(CANONICAL_CLASSES):
        raise RuntimeError(f"expected {len(CANONICAL_CLASSES)} raw classes, found {len(out)}")
    order = {c.table_ref: k for k, c in enumerate(CANONICAL_CLASSES)}
    out.sort(key=lambda c: order[c.table_ref])
    return out


def merged_classes(raw: list[LatticeClass] | None = None) -> list[LatticeClass]:
    """The eight named classes after merging the extra dS involutions."""
    raw = classify_grid() if raw is None else raw
    return [c for c in raw if c.merges_with is None]
