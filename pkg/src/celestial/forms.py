"""The rotational-symmetry family of hyperquadrics and its classification.

A surface in the Moebius quadric with a two-torus of Moebius automorphisms
is cut out, after moving to standard coordinates, by one member of the
four-parameter family

    Q_c = { c1 (y0^2 - y1 y2) + c3 (y0^2 - y3 y4)
          + c5 (y0^2 - y5 y6) + c7 (y0^2 - y7 y8) = 0 }

inside P^8.  The support pattern of c determines the celestial type, the
singular locus, the symmetry group and the moduli dimension; this module
computes those from scratch and packages the answers, together with the
four rigid surfaces outside the family, as classification records.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exact import Matrix, Signature, gauss, kernel, signature, ZERO
from .segre import (
    FormSpan,
    QuadraticForm,
    form_from_pairs,
    i2_segre,
    mu_transform,
    rep_S,
    toric_projection,
)
from . import liealg

INFINITY = float("inf")

FAMILY_INDICES = (1, 3, 5, 7)


@dataclass(frozen=True)
class FamilyCoeffs:
    """Coefficients (c1, c3, c5, c7) of a family member, not all zero."""

    c1: Fraction
    c3: Fraction
    c5: Fraction
    c7: Fraction

    def __post_init__(self):
        for name in ("c1", "c3", "c5", "c7"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not any(self.as_tuple()):
            raise ValueError("coefficients must not all vanish")

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c1, self.c3, self.c5, self.c7)

    def scale(self, f) -> "FamilyCoeffs":
        f = Fraction(f)
        return FamilyCoeffs(*(f * c for c in self.as_tuple()))


# the four generators y0^2 - y_i y_{i+1}, i = 1, 3, 5, 7, in that order
def family_basis() -> FormSpan:
    span = i2_segre()
    return FormSpan(span.basis[:4], "y")


def family_form(c: FamilyCoeffs, frame: str = "y") -> QuadraticForm:
    """The quadric of the family member, in the y frame or its real x frame."""
    terms = []
    for coeff, i in zip(c.as_tuple(), FAMILY_INDICES):
        if coeff:
            terms.append(((0, 0), coeff))
            terms.append(((i, i + 1), -coeff))
    q = form_from_pairs(terms, 9)
    if frame == "y":
        return q
    if frame == "x":
        return mu_transform(2, q)
    raise ValueError("frame must be 'y' or 'x'")


def singular_support(c: FamilyCoeffs) -> tuple[frozenset[int], int]:
    """Vanishing-coefficient support and projective dimension of the vertex.

    Returns (I, dim) where I = {i : c_i = 0} indexes the coordinate pairs
    the quadric does not see; its vertex is the projective span of those
    pairs, of dimension 2|I| - 1 (-1 meaning a smooth quadric).  Mixed-sign
    coefficients are rejected (the quadric would not bound a sphere), as is
    |I| > 2 (the leftover coordinates no longer carry a surface).
    """
    coeffs = c.as_tuple()
    signs = {x > 0 for x in coeffs if x}
    if len(signs) == 2:
        raise ValueError("coefficients must share one sign")
    vanishing = frozenset(i for x, i in zip(coeffs, FAMILY_INDICES) if not x)
    if len(vanishing) > 2:
        raise ValueError("at most two coefficients may vanish")
    ker = kernel(family_form(c, "x").matrix)
    dim = len(ker) - 1
    if dim != 2 * len(vanishing) - 1:
        raise RuntimeError("vertex dimension disagrees with the support pattern")
    return vanishing, dim


@dataclass(frozen=True)
class MoebiusPair:
    """A model surface with an invariant hyperquadric of sphere signature.

    The quadric must lie in the quadric ideal of the surface, and in a real
    coordinate frame its normalized signature must have exactly one
    positive square, so that its zero set carries a round sphere.
    """

    surface: str  # "segre" or "veronese"
    span: FormSpan
    quadric: QuadraticForm

    def __post_init__(self):
        if self.surface not in ("segre", "veronese"):
            raise ValueError("surface must be 'segre' or 'veronese'")
        if not self.span.contains(self.quadric):
            raise ValueError("quadric does not vanish on the surface")
        real = self.real_form()
        sig = signature(real.matrix)
        if sig.pos != 1:
            raise ValueError(f"quadric has signature {sig}, not a sphere form")

    def real_form(self) -> QuadraticForm:
        if self.surface == "segre":
            out = mu_transform(2, self.quadric)
        else:
            out = self.quadric
        if not out.is_real:
            raise ValueError("quadric is not defined over the reals of its frame")
        return out


def moebius_pair(c: FamilyCoeffs) -> MoebiusPair:
    """The Moebius pair of one family member over the double Segre surface."""
    signs = {x > 0 for x in c.as_tuple() if x}
    if len(signs) == 2:
        raise ValueError("coefficients must share one sign")
    coeffs = c if signs == {True} else c.scale(-1)
    return MoebiusPair("segre", i2_segre(), family_form(coeffs, "y"))


@dataclass(frozen=True)
class CelestialRecord:
    """Classification data of one surface: type, singularities, symmetry."""

    circles: float  # number of circles through a general point; inf allowed
    degree: int
    ambient: int
    singular_locus: str
    group_name: str
    moduli_dim: int
    moebius_equals_full_aut: bool
    name: str

    def __post_init__(self):
        if self.key() not in {r.key() for r in CLASSIFICATION_TABLE}:
            raise ValueError(f"record does not match any classification row: {self}")

    def key(self):
        return (
            self.circles,
            self.degree,
            self.ambient,
            self.singular_locus,
            self.group_name,
            self.moduli_dim,
            self.moebius_equals_full_aut,
            self.name,
        )

    def celestial_type(self) -> tuple[float, int, int]:
        return (self.circles, self.degree, self.ambient)

    def to_json(self) -> dict:
        lam = "inf" if self.circles == INFINITY else int(self.circles)
        return {
            "type": [lam, self.degree, self.ambient],
            "singular": self.singular_locus,
            "group": self.group_name,
            "moduli_dim": self.moduli_dim,
            "moebius_equals_aut": self.moebius_equals_full_aut,
            "name": self.name,
        }


def _row(circles, degree, ambient, singular, group, moduli, m_eq_aut, name):
    rec = object.__new__(CelestialRecord)
    for field, value in zip(
        ("circles", "degree", "ambient", "singular_locus", "group_name",
         "moduli_dim", "moebius_equals_full_aut", "name"),
        (circles, degree, ambient, singular, group, moduli, m_eq_aut, name),
    ):
        object.__setattr__(rec, field, value)
    return rec


# the eight classification rows; singular loci use the rendering of
# geometry.DynkinString ("rA1" = real node, "A3" = complex tacnode, ...)
CLASSIFICATION_TABLE: tuple[CelestialRecord, ...] = (
    _row(2, 8, 7, "", "PSO(2)xPSO(2)", 3, False, "double Segre surface"),
    _row(2, 8, 5, "", "PSO(2)xPSO(2)", 2, False, "projected dS"),
    _row(3, 6, 5, "", "PSO(2)xPSO(2)", 2, True, "dP6"),
    _row(INFINITY, 4, 4, "", "PSO(3)", 0, False, "Veronese surface"),
    _row(4, 4, 3, "A1+A1+A1+A1", "PSO(2)xPSO(2)", 1, True, "ring cyclide"),
    _row(2, 4, 3, "rA1+rA1+A1+A1", "PSO(2)xPSX(1)", 0, True, "spindle cyclide"),
    _row(2, 4, 3, "rA3+A1+A1", "PSO(2)xPSE(1)", 0, True, "horn cyclide"),
    _row(INFINITY, 2, 2, "", "PSO(3,1)", 0, True, "2-sphere"),
)


def classify_family(c: FamilyCoeffs) -> CelestialRecord:
    """Map a family member to its classification row.

    The ambient dimension is recomputed independently as rank(Q_c) - 2 and
    must agree with the row; the moduli dimension counts the projective
    freedom left in the family after fixing the support.
    """
    moebius_pair(c)  # the member must define a valid pair at all
    vanishing, _ = singular_support(c)
    x_form = family_form(c, "x")
    n = signature(x_form.matrix).rank - 2
    moduli = 3 - len(vanishing)
    if not vanishing:
        rec = _make_record(2, 8, 7, "", 3, False, "double Segre surface")
    elif vanishing in ({1}, {3}):
        rec = _make_record(2, 8, 5, "", 2, False, "projected dS")
    elif vanishing in ({5}, {7}):
        rec = _make_record(3, 6, 5, "", 2, True, "dP6")
    else:
        rec = _make_record(4, 4, 3, "A1+A1+A1+A1", 1, True, "ring cyclide")
    if rec.ambient != n:
        raise RuntimeError(f"recomputed ambient dimension {n} disagrees with {rec}")
    if rec.moduli_dim != moduli:
        raise RuntimeError("moduli dimension disagrees with the support pattern")
    return rec


def _make_record(circles, degree, ambient, singular, moduli, m_eq_aut, name):
    return CelestialRecord(
        circles, degree, ambient, singular, "PSO(2)xPSO(2)", moduli, m_eq_aut, name
    )


def fixed_records() -> list[CelestialRecord]:
    """The four classification rows that do not move in a family.

    The spindle and horn rows are cross-checked on the fly: the quadrics
    cutting their standard models must be invariant under the symmetry
    algebras that define the rows.
    """
    ambient = i2_segre()
    spindle_span = toric_projection({5, 6, 7, 8})[1]
    horn_span = toric_projection({1, 2, 5, 8})[1]
    spindle_sym = liealg.invariant_forms(liealg.NAMED_ALGEBRAS["so2xsx1"], ambient)
    horn_sym = liealg.invariant_forms(liealg.NAMED_ALGEBRAS["so2xse1"], ambient)
    for q in spindle_span.basis:
        if not spindle_sym.contains(_embed(q, spindle_span.coords)):
            raise RuntimeError("spindle quadrics are not symmetry-invariant")
    for q in horn_span.basis:
        if not horn_sym.contains(_embed(q, horn_span.coords)):
            raise RuntimeError("horn quadrics are not symmetry-invariant")
    return [
        CelestialRecord(INFINITY, 4, 4, "", "PSO(3)", 0, False, "Veronese surface"),
        CelestialRecord(2, 4, 3, "rA1+rA1+A1+A1", "PSO(2)xPSX(1)", 0, True, "spindle cyclide"),
        CelestialRecord(2, 4, 3, "rA3+A1+A1", "PSO(2)xPSE(1)", 0, True, "horn cyclide"),
        CelestialRecord(INFINITY, 2, 2, "", "PSO(3,1)", 0, True, "2-sphere"),
    ]


def _embed(q: QuadraticForm, coords) -> QuadraticForm:
    """Lift a form on a coordinate subset back to the full 9x9 frame."""
    m = [[ZERO] * 9 for _ in range(9)]
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            m[ca][cb] = q.matrix[a, b]
    return QuadraticForm(Matrix(m), q.frame)


def _random_sl2(rng: random.Random) -> Matrix:
    """A generic determinant-1 matrix from three random unipotent shears."""
    def frac():
        return Fraction(rng.randint(1, 5) * rng.choice((1, -1)), rng.randint(1, 3))

    a, b, c = frac(), frac(), frac()
    upper = Matrix([[1, a], [0, 1]])
    lower = Matrix([[1, 0], [b, 1]])
    upper2 = Matrix([[1, c], [0, 1]])
    return upper * lower * upper2


def _is_monomial(m: Matrix) -> bool:
    diagonal = not m[0, 1] and not m[1, 0]
    antidiagonal = not m[0, 0] and not m[1, 1]
    return diagonal or antidiagonal


def rigidity_sample_check(
    c: FamilyCoeffs, c_prime: FamilyCoeffs, trials: int = 100, seed: int = 0,
    workers: int = 1,
) -> bool:
    """Sampled necessary condition for rigidity of the family coordinates.

    For pseudorandom determinant-1 pairs outside the stabilizer of the
    diagonal torus, the transformed quadric must leave the family span;
    diagonal-torus pairs must fix every family member exactly.  Two members
    are then equivalent under these symmetries only when their coefficients
    agree up to scale.  This samples a necessary condition; it is not a
    proof.
    """
    span = family_basis()
    a_c = family_form(c, "y")
    a_cp = family_form(c_prime, "y")

    def one_trial(k: int) -> bool:
        trial_rng = random.Random(f"rigidity:{seed}:{k}")
        while True:
            phi1 = _random_sl2(trial_rng)
            phi2 = _random_sl2(trial_rng)
            if not (_is_monomial(phi1) and _is_monomial(phi2)):
                break
        s = rep_S(phi1, phi2)
        moved = QuadraticForm(s.transpose() * a_c.matrix * s, "y")
        return not span.contains(moved)

    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one_trial, range(trials)))
    else:
        results = [one_trial(k) for k in range(trials)]
    if not all(results):
        return False

    # diagonal torus elements must preserve each member with unchanged
    # coefficients up to scale
    for alpha, beta in ((Fraction(2), Fraction(1)), (Fraction(3, 2), Fraction(5))):
        phi1 = Matrix([[alpha, 0], [0, 1 / alpha]])
        phi2 = Matrix([[beta, 0], [0, 1 / beta]])
        s = rep_S(phi1, phi2)
        moved = QuadraticForm(s.transpose() * a_c.matrix * s, "y")
        coords = span.coordinates_of(moved)
        if coords is None or not _proportional(coords, [gauss(x) for x in c.as_tuple()]):
            return False

    same_member = _proportional(
        [gauss(x) for x in c.as_tuple()], [gauss(x) for x in c_prime.as_tuple()]
    )
    forms_match = span.coordinates_of(a_cp) is not None and _proportional(
        span.coordinates_of(a_c), span.coordinates_of(a_cp)
    )
    return forms_match == same_member


def _proportional(u, v) -> bool:
    pairs = list(zip(u, v))
    lead = next(((a, b) for a, b in pairs if a or b), None)
    if lead is None:
        return True
    a0, b0 = lead
    if not a0 or not b0:
        return False
    return all(a * b0 == b * a0 for a, b in pairs)


# the two rigid hyperquadric forms of non-Moebius signature, in their real
# frames (identity frame and the component-swapping frame respectively)
def corollary_forms() -> tuple[QuadraticForm, QuadraticForm]:
    full_invariant = liealg.invariant_forms(liealg.FULL_BASIS, i2_segre())
    if len(full_invariant) != 1:
        raise RuntimeError("full symmetry algebra should leave one quadric")
    q = full_invariant.basis[0]
    return mu_transform(0, q), mu_transform(3, q)


def corollary_iqf_check() -> tuple[Signature, Signature]:
    """Normalized signatures of the two rigid invariant hyperquadrics."""
    q0, q3 = corollary_forms()
    return signature(q0.matrix), signature(q3.matrix)
