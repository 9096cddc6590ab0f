"""The double Segre surface in P^8 and its quadratic-form calculus.

The surface is the closure of the monomial embedding of the torus

    (s, u)  ->  (1 : s : 1/s : u : 1/u : su : 1/(su) : s/u : u/s)

whose exponent vectors fill the 3x3 lattice square.  This module carries
the frozen coordinate order, the 20-dimensional space of quadrics through
the surface, the four standard antiholomorphic involutions sigma_i with
their companion coordinate changes mu_i into real frames, the symmetric
square representation of 2x2 matrix pairs on P^8, and toric projections
onto smaller coordinate subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import Matrix, GaussianRational, gauss, solve, ZERO, ONE, I

# torus exponents of y_0 .. y_8, in the frozen coordinate order
Y_EXPONENTS: tuple[tuple[int, int], ...] = (
    (0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1),
)

# the 20 differences y_a*y_b - y_c*y_d spanning the quadrics through the surface
SEGRE_QUADRIC_PAIRS: tuple[tuple[tuple[int, int], tuple[int, int]], ...] = (
    ((0, 0), (1, 2)), ((0, 0), (3, 4)), ((0, 0), (5, 6)), ((0, 0), (7, 8)),
    ((1, 1), (5, 7)), ((2, 2), (6, 8)), ((3, 3), (5, 8)), ((4, 4), (6, 7)),
    ((0, 1), (4, 5)), ((0, 2), (3, 6)), ((0, 3), (2, 5)), ((0, 4), (1, 6)),
    ((0, 1), (3, 7)), ((0, 2), (4, 8)), ((0, 3), (1, 8)), ((0, 4), (2, 7)),
    ((0, 5), (1, 3)), ((0, 6), (2, 4)), ((0, 7), (1, 4)), ((0, 8), (2, 3)),
)

# sigma_i sends y to the point whose k-th coordinate is conj(y[PERM[k]])
SIGMA_PERMS: tuple[tuple[int, ...], ...] = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8),
    (0, 2, 1, 3, 4, 8, 7, 6, 5),
    (0, 2, 1, 4, 3, 6, 5, 8, 7),
    (0, 3, 4, 1, 2, 5, 6, 8, 7),
)

# position of y_k in the tensor basis (s^2,st,t^2) x (u^2,uw,w^2)
TENSOR_POS: tuple[int, ...] = (4, 1, 7, 3, 5, 0, 8, 2, 6)

DEGREE2_MONOMIALS_2VARS: tuple[tuple[int, int], ...] = ((2, 0), (1, 1), (0, 2))


def torus_sigma(i: int, s: GaussianRational, u: GaussianRational):
    """The involution sigma_i on the torus: entrywise rules on (s, u)."""
    cs, cu = s.conjugate(), u.conjugate()
    if i == 0:
        return cs, cu
    if i == 1:
        return ONE / cs, cu
    if i == 2:
        return ONE / cs, ONE / cu
    if i == 3:
        return cu, cs
    raise ValueError("sigma index must be 0..3")


@dataclass(frozen=True)
class MonomialParam:
    """Monomial parametrization: one Laurent exponent pair per coordinate.

    ``coords`` keeps the labels of the ambient coordinates (indices into the
    full 9-coordinate frame) so that projections remember where they live.
    """

    exponents: tuple[tuple[int, int], ...]
    coords: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.coords is None:
            object.__setattr__(self, "coords", tuple(range(len(self.exponents))))

    def __len__(self) -> int:
        return len(self.exponents)

    def eval(self, s, u) -> tuple[GaussianRational, ...]:
        s, u = gauss(s), gauss(u)
        if not s or not u:
            raise ValueError("torus parameters must be nonzero")
        return tuple(s**a * u**b for a, b in self.exponents)

    def eval_lift(self, s, t, u, w) -> tuple[GaussianRational, ...]:
        """Evaluate the projective bidegree-(2,2) lift s^(1+a) t^(1-a) u^(1+b) w^(1-b)."""
        s, t, u, w = (gauss(x) for x in (s, t, u, w))
        return tuple(
            s ** (1 + a) * t ** (1 - a) * u ** (1 + b) * w ** (1 - b)
            for a, b in self.exponents
        )


SEGRE_PARAM = MonomialParam(Y_EXPONENTS)


@dataclass(frozen=True)
class QuadraticForm:
    """A symmetric matrix over Q(i) in a named coordinate frame."""

    matrix: Matrix
    frame: str = "y"

    def __post_init__(self):
        if not self.matrix.is_symmetric:
            raise ValueError("quadratic form matrix must be symmetric")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def is_real(self) -> bool:
        return self.matrix.is_real

    def evaluate(self, point) -> GaussianRational:
        v = [gauss(x) for x in point]
        total = ZERO
        for i, row in enumerate(self.matrix.entries()):
            for j, a in enumerate(row):
                if a:
                    total = total + a * v[i] * v[j]
        return total

    def scale(self, c) -> "QuadraticForm":
        return QuadraticForm(self.matrix.scale(c), self.frame)

    def vec(self) -> tuple[GaussianRational, ...]:
        """Upper-triangle coefficient vector (the span coordinates)."""
        n = self.dim
        return tuple(self.matrix[i, j] for i in range(n) for j in range(i, n))


def form_from_pairs(terms, dim: int, frame: str = "y") -> QuadraticForm:
    """Build sum of c * y_a y_b from ((a, b), c) items."""
    m = [[ZERO] * dim for _ in range(dim)]
    for (a, b), c in terms:
        c = gauss(c)
        if a == b:
            m[a][a] = m[a][a] + c
        else:
            half = c / gauss(2)
            m[a][b] = m[a][b] + half
            m[b][a] = m[b][a] + half
    return QuadraticForm(Matrix(m), frame)


def form_from_difference(pair, dim: int, frame: str = "y") -> QuadraticForm:
    (a, b), (c, d) = pair
    return form_from_pairs([((a, b), 1), ((c, d), -1)], dim, frame)


@dataclass(frozen=True)
class FormSpan:
    """A linearly independent list of quadratic forms in one frame."""

    basis: tuple[QuadraticForm, ...]
    frame: str = "y"
    coords: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.coords is None:
            dim = self.basis[0].dim if self.basis else 0
            object.__setattr__(self, "coords", tuple(range(dim)))
        if self.basis:
            rows = Matrix([q.vec() for q in self.basis])
            if rows.rank() != len(self.basis):
                raise ValueError("form span basis is linearly dependent")

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return self.basis[0].dim if self.basis else len(self.coords)

    def contains(self, q: QuadraticForm) -> bool:
        if not self.basis:
            return not any(q.vec())
        m = Matrix(list(zip(*[b.vec() for b in self.basis])))
        return solve(m, Matrix.column(q.vec())) is not None

    def coordinates_of(self, q: QuadraticForm):
        """Coefficients of q in this basis, or None if outside the span."""
        if not self.basis:
            return None
        m = Matrix(list(zip(*[b.vec() for b in self.basis])))
        sol = solve(m, Matrix.column(q.vec()))
        return None if sol is None else sol.column_vector()

    def reduced(self) -> "FormSpan":
        """Canonical basis (reduced row echelon on coefficient vectors)."""
        if not self.basis:
            return self
        red, pivots = Matrix([q.vec() for q in self.basis]).rref()
        n = self.dim
        idx = [(i, j) for i in range(n) for j in range(i, n)]
        forms = []
        for r in range(len(pivots)):
            m = [[ZERO] * n for _ in range(n)]
            for (i, j), a in zip(idx, red.entries()[r]):
                m[i][j] = a
                m[j][i] = a
            forms.append(QuadraticForm(Matrix(m), self.frame))
        return FormSpan(tuple(forms), self.frame, self.coords)

    def equals(self, other: "FormSpan") -> bool:
        if len(self.basis) != len(other.basis) or self.dim != other.dim:
            return False
        mine = Matrix([q.vec() for q in self.basis]).rref()[0]
        theirs = Matrix([q.vec() for q in other.basis]).rref()[0]
        return mine == theirs

    def validate_on(self, param: MonomialParam, samples=None) -> None:
        """Check every basis form vanishes on enough parametrized points."""
        if samples is None:
            samples = [
                (Fraction(a), Fraction(b))
                for a in range(2, 2 + max(2, len(self.basis) + 1))
                for b in (2, 3)
            ]
        for s, u in samples:
            pt = param.eval(s, u)
            for q in self.basis:
                if q.evaluate(pt):
                    raise ValueError("form span does not annihilate its parametrization")


@lru_cache(maxsize=1)
def i2_segre() -> FormSpan:
    """The 20-dimensional space of quadrics through the double Segre surface."""
    basis = tuple(form_from_difference(p, 9) for p in SEGRE_QUADRIC_PAIRS)
    return FormSpan(basis, "y")


def eval_param(p: MonomialParam, s, u) -> tuple[GaussianRational, ...]:
    return p.eval(s, u)


def normalize_point(point) -> tuple[GaussianRational, ...]:
    """Scale a projective point so its first nonzero coordinate is 1."""
    pt = [gauss(x) for x in point]
    lead = next((x for x in pt if x), None)
    if lead is None:
        raise ValueError("zero vector is not a projective point")
    return tuple(x / lead for x in pt)


def sigma_matrix(i: int) -> Matrix:
    perm = SIGMA_PERMS[i]
    return Matrix(
        [[1 if j == perm[k] else 0 for j in range(9)] for k in range(9)]
    )


def apply_sigma(i: int, obj):
    """Apply sigma_i to a point tuple or to a QuadraticForm.

    On points the coordinates are permuted and conjugated.  On forms this is
    the induced antilinear action A -> L^T conj(A) L, whose fixed vectors are
    the forms defined over the reals of the sigma_i frame.
    """
    perm = SIGMA_PERMS[i]
    if isinstance(obj, QuadraticForm):
        if obj.dim != 9:
            raise ValueError("sigma acts on 9x9 forms")
        l = sigma_matrix(i)
        return QuadraticForm(l.transpose() * obj.matrix.conjugate() * l, obj.frame)
    pt = [gauss(x) for x in obj]
    return tuple(pt[perm[k]].conjugate() for k in range(9))


def _mu_rows(i: int) -> dict[int, dict[int, GaussianRational]]:
    h = gauss(Fraction(1, 2))
    if i == 0:
        return {k: {k: ONE} for k in range(9)}
    if i == 1:
        return {
            0: {0: ONE},
            1: {1: ONE, 2: I}, 2: {1: ONE, 2: -I},
            3: {3: ONE}, 4: {4: ONE},
            5: {5: ONE, 8: I}, 6: {7: ONE, 6: -I},
            7: {7: ONE, 6: I}, 8: {5: ONE, 8: -I},
        }
    if i == 2:
        return {
            0: {0: h},
            1: {1: ONE, 2: I}, 2: {1: ONE, 2: -I},
            3: {3: ONE, 4: I}, 4: {3: ONE, 4: -I},
            5: {5: ONE, 6: I}, 6: {5: ONE, 6: -I},
            7: {7: ONE, 8: -I}, 8: {7: ONE, 8: I},
        }
    if i == 3:
        return {
            0: {0: ONE},
            1: {3: ONE, 1: -I}, 2: {2: ONE, 4: I},
            3: {3: ONE, 1: I}, 4: {2: ONE, 4: -I},
            5: {5: ONE}, 6: {6: ONE},
            7: {8: ONE, 7: -I}, 8: {8: ONE, 7: I},
        }
    raise ValueError("mu index must be 0..3")


def mu_matrix(i: int, coords=None) -> Matrix:
    """The coordinate change y = M x, optionally restricted to a subset.

    Restriction is only legal when the kept y-coordinates involve only kept
    x-coordinates; the standard toric projections all satisfy this.
    """
    rows = _mu_rows(i)
    if coords is None:
        coords = tuple(range(9))
    pos = {c: k for k, c in enumerate(coords)}
    out = [[ZERO] * len(coords) for _ in coords]
    for c in coords:
        for xc, val in rows[c].items():
            if xc not in pos:
                raise ValueError(f"mu_{i} does not restrict to coordinates {coords}")
            out[pos[c]][pos[xc]] = val
    return Matrix(out)


def mu_transform(i: int, q: QuadraticForm, coords=None) -> QuadraticForm:
    """Pull a y-frame form back to the x-frame: M^T A M.

    A complex residue in the output is legal and simply flags a form that is
    not defined over the reals of the sigma_i frame; callers inspect
    ``is_real`` when they care.
    """
    m = mu_matrix(i, coords)
    if m.rows != q.dim:
        raise ValueError("form dimension does not match the coordinate subset")
    return QuadraticForm(m.transpose() * q.matrix * m, "x")


def transform_span(span: FormSpan, m: Matrix, frame: str) -> FormSpan:
    basis = tuple(QuadraticForm(m.transpose() * q.matrix * m, frame) for q in span.basis)
    return FormSpan(basis, frame, span.coords)


def _poly_substitute(exps, g: Matrix) -> dict[tuple[int, ...], GaussianRational]:
    """Expand the monomial x^exps after the substitution x -> g*x."""
    nvars = g.rows
    acc: dict[tuple[int, ...], GaussianRational] = {tuple([0] * nvars): ONE}
    for k, e in enumerate(exps):
        for _ in range(e):
            nxt: dict[tuple[int, ...], GaussianRational] = {}
            for mono, c in acc.items():
                for l in range(nvars):
                    if g[k, l]:
                        m = list(mono)
                        m[l] += 1
                        key = tuple(m)
                        nxt[key] = nxt.get(key, ZERO) + c * g[k, l]
            acc = nxt
    return acc


def monomial_rep(g: Matrix, monomials) -> Matrix:
    """Matrix of the substitution action of g on a monomial basis."""
    index = {m: i for i, m in enumerate(monomials)}
    out = [[ZERO] * len(monomials) for _ in monomials]
    for r, exps in enumerate(monomials):
        for mono, c in _poly_substitute(exps, g).items():
            if c:
                if mono not in index:
                    raise ValueError("substitution leaves the monomial basis")
                out[r][index[mono]] = c
    return Matrix(out)


def monomial_rep_derivative(g: Matrix, monomials) -> Matrix:
    """Derivative at the identity of the monomial action of exp(t*g)."""
    index = {m: i for i, m in enumerate(monomials)}
    nvars = g.rows
    out = [[ZERO] * len(monomials) for _ in monomials]
    for r, exps in enumerate(monomials):
        for k in range(nvars):
            if not exps[k]:
                continue
            for l in range(nvars):
                if g[k, l]:
                    m = list(exps)
                    m[k] -= 1
                    m[l] += 1
                    key = tuple(m)
                    if key not in index:
                        raise ValueError("derivative leaves the monomial basis")
                    out[r][index[key]] = out[r][index[key]] + gauss(exps[k]) * g[k, l]
    return Matrix(out)


def _kron3(a: Matrix, b: Matrix) -> Matrix:
    out = [[ZERO] * 9 for _ in range(9)]
    for i in range(3):
        for j in range(3):
            for k in range(3):
                for l in range(3):
                    out[3 * i + j][3 * k + l] = a[i, k] * b[j, l]
    return Matrix(out)


def _tensor_to_y(m9: Matrix) -> Matrix:
    return Matrix(
        [[m9[TENSOR_POS[a], TENSOR_POS[b]] for b in range(9)] for a in range(9)]
    )


def rep_S(phi1: Matrix, phi2: Matrix) -> Matrix:
    """Symmetric-square representation of a 2x2 matrix pair on P^8.

    The returned 9x9 matrix M satisfies M * lift(p) = lift(phi(p)) for every
    point p of P^1 x P^1, in the frozen y coordinate order.
    """
    for phi in (phi1, phi2):
        if phi.rows != 2 or phi.cols != 2:
            raise ValueError("factors must be 2x2")
        if not phi.det():
            raise ValueError("singular factor")
    s1 = monomial_rep(phi1, DEGREE2_MONOMIALS_2VARS)
    s2 = monomial_rep(phi2, DEGREE2_MONOMIALS_2VARS)
    return _tensor_to_y(_kron3(s1, s2))


def toric_projection(drop) -> tuple[MonomialParam, FormSpan]:
    """Omit coordinates of the monomial parametrization and restrict the ideal.

    The restricted span keeps exactly the quadric generators that avoid every
    dropped variable, re-indexed to the surviving coordinates.
    """
    drop = frozenset(drop)
    keep = tuple(k for k in range(9) if k not in drop)
    exps = [Y_EXPONENTS[k] for k in keep]
    diffs = {(a - c, b - d) for (a, b) in exps for (c, d) in exps}
    if Matrix([list(v) for v in diffs]).rank() < 2:
        raise ValueError("projection leaves a degenerate (1-dimensional) parametrization")
    param = MonomialParam(tuple(exps), keep)
    pos = {c: k for k, c in enumerate(keep)}
    forms = []
    for (a, b), (c, d) in SEGRE_QUADRIC_PAIRS:
        if {a, b, c, d} <= set(keep):
            forms.append(
                form_from_difference(((pos[a], pos[b]), (pos[c], pos[d])), len(keep))
            )
    return param, FormSpan(tuple(forms), "y", keep)


def i2_dimension(param: MonomialParam, seed: int = 7, samples: int = 60) -> int:
    """Dimension of the degree-2 part of the ideal, from evaluation-matrix nullity.

    This recomputes the dimension from scratch: evaluate all quadratic
    monomials in the ambient coordinates at random rational torus points and
    take the null space dimension, without using any stored generator list.
    """
    import random

    n = len(param)
    monos = [(i, j) for i in range(n) for j in range(i, n)]
    rng = random.Random(f"i2-dim:{seed}:{param.coords}")
    rows = []
    for _ in range(max(samples, len(monos) + 5)):
        s = Fraction(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
        u = Fraction(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 9))
        pt = param.eval(s, u)
        rows.append([pt[i] * pt[j] for i, j in monos])
    m = Matrix(rows)
    return m.cols - m.rank()


def i2_dimension_check(tag: str, seed: int = 7) -> int:
    """Ideal dimension for a named lattice class, recomputed from scratch.

    The monomial parametrization is rebuilt from the lattice points of the
    classified polygon, so this is independent of any stored generator list.
    """
    from . import lattice

    cls = next((c for c in lattice.CANONICAL_CLASSES if c.table_ref == tag), None)
    if cls is None:
        raise ValueError(f"unknown lattice class {tag!r}")
    pts = cls.lattice_type.polygon.lattice_points()
    return i2_dimension(MonomialParam(tuple(pts)), seed=seed)
