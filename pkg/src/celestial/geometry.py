"""Blowup combinatorics, cyclide models, and the Veronese-surface track.

Three independent computations live here.  The divisor-class lattice of a
blown-up quadric surface turns each blowup configuration into a set of
(-2)-classes whose intersection graph spells out the singular locus as a
Dynkin string.  The spindle and horn cyclides are produced explicitly by
pulling toric models through printed coordinate changes (which involve
sqrt(2), handled in an exact quadratic extension) and verified against
their stereographic cone and cylinder images.  Finally the same invariant
form machinery runs for the Veronese surface in P^5 with its sl3 symmetry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    GaussianRational,
    Matrix,
    Signature,
    gauss,
    signature,
    ZERO,
    ONE,
)
from .segre import (
    FormSpan,
    MonomialParam,
    QuadraticForm,
    form_from_difference,
    monomial_rep_derivative,
    mu_matrix,
    toric_projection,
)
from .liealg import solve_invariant

# ---------------------------------------------------------------------------
# divisor classes on the blown-up surface


@dataclass(frozen=True)
class NSClass:
    """Integer vector over the basis (l0, l1, e1, e2, e3, e4)."""

    coeffs: tuple[int, int, int, int, int, int]

    def __add__(self, other: "NSClass") -> "NSClass":
        return NSClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "NSClass":
        return NSClass(tuple(-a for a in self.coeffs))

    def conjugate(self) -> "NSClass":
        """The real structure swaps e1 <-> e2 and e3 <-> e4."""
        l0, l1, e1, e2, e3, e4 = self.coeffs
        return NSClass((l0, l1, e2, e1, e4, e3))


L0 = NSClass((1, 0, 0, 0, 0, 0))
L1 = NSClass((0, 1, 0, 0, 0, 0))
EXCEPTIONAL = tuple(
    NSClass(tuple(1 if k == 2 + j else 0 for k in range(6))) for j in range(4)
)


def ns_product(a: NSClass, b: NSClass) -> int:
    """Intersection pairing: l0.l1 = 1, ei^2 = -1, everything else 0."""
    a0, a1, *ae = a.coeffs
    b0, b1, *be = b.coeffs
    return a0 * b1 + a1 * b0 - sum(x * y for x, y in zip(ae, be))


def fiber_class(axis: int, i: int, j: int) -> NSClass:
    base = L0 if axis == 1 else L1
    return NSClass(
        tuple(
            b - (1 if k == 1 + i or k == 1 + j else 0)
            for k, b in enumerate(base.coeffs)
        )
    )


def near_class(i: int, j: int) -> NSClass:
    """e_i - e_j for a point j infinitely near point i."""
    return NSClass(
        tuple(
            (1 if k == 1 + i else 0) - (1 if k == 1 + j else 0)
            for k in range(6)
        )
    )


@dataclass(frozen=True)
class BlowupConfig:
    """One configuration of blowup points on the doubled projective line.

    Points are numbered 1..4 (p, conj p, q, conj q).  ``pi1_fibers`` and
    ``pi2_fibers`` list the index pairs sharing a fiber of the first and
    second ruling; ``near`` lists (i, j) with j infinitely near i.
    """

    tag: str
    points: tuple[int, ...]
    pi1_fibers: tuple[tuple[int, int], ...] = ()
    pi2_fibers: tuple[tuple[int, int], ...] = ()
    near: tuple[tuple[int, int], ...] = ()


BLOWUP_CONFIGS: dict[str, BlowupConfig] = {
    "a": BlowupConfig("a", ()),
    "b": BlowupConfig("b", (1, 2)),
    "c": BlowupConfig("c", (1, 2), pi2_fibers=((1, 2),)),
    "d": BlowupConfig(
        "d", (1, 2, 3, 4), pi1_fibers=((1, 3), (2, 4)), pi2_fibers=((1, 4), (2, 3))
    ),
    "e": BlowupConfig(
        "e", (1, 2, 3, 4), pi1_fibers=((1, 3), (2, 4)), pi2_fibers=((1, 2), (3, 4))
    ),
    "f": BlowupConfig(
        "f",
        (1, 2, 3, 4),
        pi1_fibers=((1, 3), (2, 4)),
        pi2_fibers=((1, 2),),
        near=((1, 3), (2, 4)),
    ),
}


def b_classes(cfg: BlowupConfig) -> frozenset[NSClass]:
    """Effective indecomposable (-2)-classes of a blowup configuration.

    A fiber through two blowup points contributes its strict transform;
    an infinitely-near pair contributes the difference of its exceptional
    classes.
    """
    out = set()
    for i, j in cfg.pi1_fibers:
        out.add(fiber_class(1, i, j))
    for i, j in cfg.pi2_fibers:
        out.add(fiber_class(2, i, j))
    for i, j in cfg.near:
        out.add(near_class(i, j))
    anticanonical = NSClass(
        (2, 2, *(-1 if k in cfg.points else 0 for k in (1, 2, 3, 4)))
    )
    for c in out:
        if ns_product(c, c) != -2 or ns_product(anticanonical, c) != 0:
            raise RuntimeError(f"{c} is not an anticanonical-orthogonal (-2)-class")
    return frozenset(out)


@dataclass(frozen=True)
class DynkinString:
    """Multiset of chain components A_k, each marked real or complex."""

    components: tuple[tuple[int, bool], ...]  # (k, is_real), sorted

    @staticmethod
    def of(components) -> "DynkinString":
        ordered = tuple(sorted(components, key=lambda c: (-c[0], not c[1])))
        return DynkinString(ordered)

    def render(self) -> str:
        """Canonical string: real components prefixed 'r', largest first."""
        return "+".join(("r" if real else "") + f"A{k}" for k, real in self.components)


def dynkin(classes: frozenset[NSClass]) -> DynkinString:
    """Singularity content of a class set: components of the product graph.

    Vertices are the classes, edges join positive products; each connected
    component must be a chain and gives one A_k, marked real when the
    conjugation swap maps the component onto itself.
    """
    nodes = sorted(classes, key=lambda c: c.coeffs)
    n = len(nodes)
    adj = {
        a: [b for b in nodes if b != a and ns_product(a, b) > 0] for a in nodes
    }
    seen: set[NSClass] = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        stack, comp = [start], []
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            comp.append(v)
            stack.extend(adj[v])
        degrees = sorted(len([w for w in adj[v] if w in comp]) for v in comp)
        is_chain = (
            len(comp) == 1
            or degrees == [1, 1] + [2] * (len(comp) - 2)
        )
        if not is_chain:
            raise ValueError("component of the class graph is not a chain")
        is_real = {v.conjugate() for v in comp} == set(comp)
        comps.append((len(comp), is_real))
    return DynkinString.of(comps)


EXPECTED_SINGULAR_STRINGS = {
    "a": "",
    "b": "",
    "c": "rA1",
    "d": "A1+A1+A1+A1",
    "e": "rA1+rA1+A1+A1",
    "f": "rA3+A1+A1",
}


# ---------------------------------------------------------------------------
# exact arithmetic with sqrt(2)


@dataclass(frozen=True)
class QuadExt:
    """a + b*sqrt(2) with Gaussian-rational a and b."""

    a: GaussianRational = ZERO
    b: GaussianRational = ZERO

    @staticmethod
    def of(x) -> "QuadExt":
        return x if isinstance(x, QuadExt) else QuadExt(gauss(x))

    def __add__(self, other) -> "QuadExt":
        other = QuadExt.of(other)
        return QuadExt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadExt":
        other = QuadExt.of(other)
        return QuadExt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "QuadExt":
        return QuadExt.of(other) - self

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b)

    def __mul__(self, other) -> "QuadExt":
        other = QuadExt.of(other)
        return QuadExt(
            self.a * other.a + gauss(2) * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadExt":
        other = QuadExt.of(other)
        n = other.a * other.a - gauss(2) * other.b * other.b
        if not n:
            raise ZeroDivisionError("division by zero in Q(i, sqrt 2)")
        return self * QuadExt(other.a / n, -other.b / n)

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    @property
    def is_rational(self) -> bool:
        return not self.b

    def __str__(self) -> str:
        return f"({self.a})+({self.b})*sqrt2"


SQRT2 = QuadExt(ZERO, ONE)
HALF_SQRT2 = QuadExt(ZERO, gauss(Fraction(1, 2)))  # 1/sqrt(2)


def _ext_matmul(rows_a, rows_b):
    cols = list(zip(*rows_b))
    return [
        [sum((x * y for x, y in zip(row, col)), QuadExt()) for col in cols]
        for row in rows_a
    ]


def _ext_congruence(form: QuadraticForm, t_rows) -> QuadraticForm:
    """T^T A T over Q(i, sqrt 2); the result must land back in Q(i)."""
    a_rows = [[QuadExt.of(x) for x in row] for row in form.matrix.entries()]
    res = _ext_matmul(_ext_matmul([list(r) for r in zip(*t_rows)], a_rows), t_rows)
    out = []
    for row in res:
        out_row = []
        for x in row:
            if not x.is_rational:
                raise ValueError("congruence did not eliminate sqrt(2)")
            out_row.append(x.a)
        out.append(out_row)
    return QuadraticForm(Matrix(out), "x")


# spindle model: coordinates (x0, x1, x2, x3, x4)
def _spindle_transform():
    mu = [[QuadExt.of(x) for x in row] for row in mu_matrix(1, (0, 1, 2, 3, 4)).entries()]
    alpha = [
        [QuadExt(), QuadExt(), QuadExt(), QuadExt(), QuadExt.of(1)],
        [QuadExt(), QuadExt.of(1), QuadExt(), QuadExt(), QuadExt()],
        [QuadExt(), QuadExt(), QuadExt.of(1), QuadExt(), QuadExt()],
        [HALF_SQRT2, QuadExt(), QuadExt(), -HALF_SQRT2, QuadExt()],
        [HALF_SQRT2, QuadExt(), QuadExt(), HALF_SQRT2, QuadExt()],
    ]
    return _ext_matmul(alpha, mu)


# horn model: coordinates (x0, x3, x4, x6, x7), in that order
def _horn_transform():
    mu = [[QuadExt.of(x) for x in row] for row in mu_matrix(1, (0, 3, 4, 6, 7)).entries()]
    alpha = [
        [QuadExt(), QuadExt(), HALF_SQRT2, QuadExt(), QuadExt()],
        [QuadExt(), QuadExt.of(1), QuadExt(), QuadExt(), QuadExt()],
        [QuadExt.of(-1), QuadExt.of(-1), QuadExt(), QuadExt(), QuadExt()],
        [QuadExt(), QuadExt(), QuadExt(), QuadExt.of(1), QuadExt()],
        [QuadExt(), QuadExt(), QuadExt(), QuadExt(), QuadExt.of(1)],
    ]
    return _ext_matmul(alpha, mu)


def cyclide_pipeline() -> tuple[FormSpan, FormSpan]:
    """Quadric pencils of the standard spindle and horn cyclides in S^3.

    Both toric models are pulled through their printed coordinate changes;
    each resulting pencil must contain the 3-sphere form x0^2 - sum x_i^2.
    """
    spans = []
    for drop, transform in (
        ({5, 6, 7, 8}, _spindle_transform()),
        ({1, 2, 5, 8}, _horn_transform()),
    ):
        _, y_span = toric_projection(drop)
        forms = tuple(_ext_congruence(q, transform) for q in y_span.basis)
        span = FormSpan(forms, "x", y_span.coords)
        if sphere_member(span) is None:
            raise RuntimeError("cyclide pencil misses the 3-sphere form")
        spans.append(span)
    return spans[0], spans[1]


def sphere_member(span: FormSpan):
    """Coefficients putting x0^2 - x1^2 - ... - x_k^2 in the span, if any."""
    k = span.dim
    sphere = QuadraticForm(
        Matrix([[1 if (i, j) == (0, 0) else -1 if i == j else 0 for j in range(k)] for i in range(k)]),
        "x",
    )
    return span.coordinates_of(sphere)


def _unit_circle_point(t: Fraction) -> tuple[GaussianRational, GaussianRational]:
    """Rational point (re, im) on the unit circle from the slope parameter."""
    den = 1 + t * t
    return gauss(Fraction(1 - t * t, den)), gauss(Fraction(2 * t, den))


def spindle_point(t: Fraction, u: Fraction):
    """Exact point of the spindle model over Q(i, sqrt 2)."""
    re, im = _unit_circle_point(t)
    uu = gauss(u)
    return (
        HALF_SQRT2 * QuadExt.of(uu + 1 / uu),
        QuadExt.of(re),
        QuadExt.of(im),
        HALF_SQRT2 * QuadExt.of(1 / uu - uu),
        QuadExt.of(1),
    )


def horn_point(t: Fraction, u: Fraction):
    """Exact point of the horn model over Q(i, sqrt 2)."""
    re, im = _unit_circle_point(t)
    uu = gauss(u)
    return (
        QuadExt.of(-uu - 1 / uu),
        QuadExt.of(uu),
        SQRT2,
        QuadExt.of(im / uu),
        QuadExt.of(re / uu),
    )


def _ext_eval(form: QuadraticForm, point) -> QuadExt:
    total = QuadExt()
    for i, row in enumerate(form.matrix.entries()):
        for j, a in enumerate(row):
            if a:
                total = total + QuadExt.of(a) * point[i] * point[j]
    return total


@dataclass(frozen=True)
class StereographicReport:
    """Outcome of the cone/cylinder verification on a rational grid."""

    ok: bool
    cone_constant: Fraction | None
    cylinder_radius_sq: Fraction | None
    samples: int
    skipped: int

    def __bool__(self) -> bool:
        return self.ok


def stereographic_check(grid: int = 7) -> StereographicReport:
    """Project the cyclide models to 3-space and fit their circular shapes.

    The spindle image must satisfy X^2 + Y^2 = c Z^2 (a circular cone) and
    the horn image must satisfy Y^2 + Z^2 = r^2 independently of the axis
    coordinate (a circular cylinder), identically over a rational grid;
    grid points hitting the projection center are skipped and counted.
    """
    x_s, x_h = cyclide_pipeline()
    ts = [Fraction(k, grid) for k in range(1, grid + 1)]
    us = [Fraction(k, 3) for k in range(1, grid + 1)]
    skipped = 0
    samples = 0

    cone_c: QuadExt | None = None
    for t, u in itertools.product(ts, us):
        p = spindle_point(t, u)
        for q in x_s.basis:
            if _ext_eval(q, p):
                return StereographicReport(False, None, None, samples, skipped)
        chart = p[0] - p[3]
        if not chart:
            skipped += 1
            continue
        samples += 1
        x, y, z = p[1] / chart, p[2] / chart, p[4] / chart
        if not z:
            return StereographicReport(False, None, None, samples, skipped)
        c = (x * x + y * y) / (z * z)
        if cone_c is None:
            cone_c = c
        elif c != cone_c:
            return StereographicReport(False, None, None, samples, skipped)

    radius: QuadExt | None = None
    for t, u in itertools.product(ts, us):
        p = horn_point(t, u)
        for q in x_h.basis:
            if _ext_eval(q, p):
                return StereographicReport(False, None, None, samples, skipped)
        chart = p[0] + p[1]
        if not chart:
            skipped += 1
            continue
        samples += 1
        y, z = p[4] / chart, p[3] / chart
        r2 = y * y + z * z
        if radius is None:
            radius = r2
        elif r2 != radius:
            return StereographicReport(False, None, None, samples, skipped)

    def _positive_rational(v: QuadExt) -> Fraction | None:
        if not v.is_rational or not v.a.is_real or v.a.re <= 0:
            return None
        return v.a.re

    cone = _positive_rational(cone_c) if cone_c is not None else None
    r_sq = _positive_rational(radius) if radius is not None else None
    ok = cone is not None and r_sq is not None
    return StereographicReport(ok, cone, r_sq, samples, skipped)


# ---------------------------------------------------------------------------
# the Veronese surface in P^5

VERONESE_EXPONENTS: tuple[tuple[int, int], ...] = (
    (0, 0), (1, 1), (1, 0), (0, 1), (2, 0), (0, 2),
)

VERONESE_QUADRIC_PAIRS = (
    ((1, 1), (4, 5)),
    ((0, 1), (2, 3)),
    ((2, 2), (0, 4)),
    ((3, 3), (0, 5)),
    ((1, 2), (3, 4)),
    ((1, 3), (2, 5)),
)

# degree-2 monomials in (s, t, u) matching the coordinate order above
VERONESE_MONOMIALS = ((0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1), (2, 0, 0), (0, 2, 0))


def veronese_data() -> tuple[MonomialParam, FormSpan]:
    """The Veronese parametrization of P^5 and its 6 quadric generators."""
    param = MonomialParam(VERONESE_EXPONENTS)
    span = FormSpan(
        tuple(form_from_difference(p, 6) for p in VERONESE_QUADRIC_PAIRS), "y"
    )
    return param, span


def _sl3(entries) -> Matrix:
    return Matrix(entries)


SL3_BASIS = {
    "a1": _sl3([[0, 1, 0], [0, 0, 0], [0, 0, 0]]),
    "a2": _sl3([[0, 0, 1], [0, 0, 0], [0, 0, 0]]),
    "a3": _sl3([[0, 0, 0], [0, 0, 1], [0, 0, 0]]),
    "b1": _sl3([[0, 0, 0], [1, 0, 0], [0, 0, 0]]),
    "b2": _sl3([[0, 0, 0], [0, 0, 0], [1, 0, 0]]),
    "b3": _sl3([[0, 0, 0], [0, 0, 0], [0, 1, 0]]),
    "c1": _sl3([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    "c2": _sl3([[0, 0, 0], [0, 1, 0], [0, 0, -1]]),
}


def so3_basis() -> list[Matrix]:
    return [
        SL3_BASIS["b1"] - SL3_BASIS["a1"],
        SL3_BASIS["b2"] - SL3_BASIS["a2"],
        SL3_BASIS["b3"] - SL3_BASIS["a3"],
    ]


def veronese_invariant_forms(algebra) -> FormSpan:
    """Invariant quadrics in the Veronese ideal for a subalgebra of sl3."""
    _, span = veronese_data()
    tangents = [monomial_rep_derivative(g, VERONESE_MONOMIALS) for g in algebra]
    return solve_invariant(tangents, span)


def so3_invariant_form() -> QuadraticForm:
    """The unique rotation-invariant quadric through the Veronese surface.

    The full sl3 is checked to leave nothing invariant, and the rotation
    algebra exactly one form.
    """
    full = veronese_invariant_forms(SL3_BASIS.values())
    if len(full) != 0:
        raise RuntimeError("full sl3 should leave no invariant quadric")
    rot = veronese_invariant_forms(so3_basis())
    if len(rot) != 1:
        raise RuntimeError("rotation algebra should leave exactly one quadric")
    q = rot.basis[0]
    lead = q.matrix[1, 1]  # normalize the x1^2 coefficient to 1
    return q.scale(ONE / lead)


def veronese_signature_witnesses(height: int = 1) -> frozenset[Signature]:
    """Normalized signatures realized by small combinations of the generators."""
    _, span = veronese_data()
    found = set()
    coeff_range = range(-height, height + 1)
    for coeffs in itertools.product(coeff_range, repeat=len(span.basis)):
        if not any(coeffs):
            continue
        m = Matrix.zero(6, 6)
        for c, q in zip(coeffs, span.basis):
            if c:
                m = m + q.matrix.scale(c)
        found.add(signature(m))
    return frozenset(found)
