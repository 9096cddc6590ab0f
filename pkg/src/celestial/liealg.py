"""sl2+sl2: brackets, real structures, and the invariant-form solver.

Elements are pairs of traceless 2x2 matrices over Q(i).  Differentiating
the symmetric-square action of 2x2 matrix pairs on P^8 turns each element
into a 9x9 matrix D; a quadratic form A in the ideal of the double Segre
surface is invariant under the corresponding 1-parameter subgroup exactly
when D^T A + A D = 0, so invariant forms of a subalgebra come out of one
exact kernel computation in the coefficient space of the ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import Matrix, GaussianRational, gauss, kernel, ZERO, I
from .segre import (
    DEGREE2_MONOMIALS_2VARS,
    FormSpan,
    QuadraticForm,
    TENSOR_POS,
    apply_sigma,
    monomial_rep_derivative,
)


def _m2(a, b, c, d) -> Matrix:
    return Matrix([[a, b], [c, d]])


_E2 = _m2(0, 0, 0, 0)
_T = _m2(0, 1, 0, 0)
_Q = _m2(0, 0, 1, 0)
_S = _m2(1, 0, 0, -1)
_R = _m2(0, -1, 1, 0)


@dataclass(frozen=True)
class LieElement:
    """A pair of traceless 2x2 matrices over Q(i)."""

    left: Matrix
    right: Matrix

    def __post_init__(self):
        for half in (self.left, self.right):
            if half.rows != 2 or half.cols != 2:
                raise ValueError("components must be 2x2")
            if half.trace():
                raise ValueError("components must be traceless")

    def __add__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.left + other.left, self.right + other.right)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return LieElement(self.left - other.left, self.right - other.right)

    def __neg__(self) -> "LieElement":
        return LieElement(-self.left, -self.right)

    def scale(self, c) -> "LieElement":
        return LieElement(self.left.scale(c), self.right.scale(c))

    def __rmul__(self, c) -> "LieElement":
        return self.scale(c)

    def vec(self) -> tuple[GaussianRational, ...]:
        return tuple(x for m in (self.left, self.right) for row in m.entries() for x in row)

    @property
    def is_zero(self) -> bool:
        return not any(self.vec())


T1 = LieElement(_T, _E2)
Q1 = LieElement(_Q, _E2)
S1 = LieElement(_S, _E2)
R1 = LieElement(_R, _E2)
T2 = LieElement(_E2, _T)
Q2 = LieElement(_E2, _Q)
S2 = LieElement(_E2, _S)
R2 = LieElement(_E2, _R)
E = LieElement(_E2, _E2)

FULL_BASIS = (T1, Q1, S1, T2, Q2, S2)

# the rotation generator of each factor depends on which real structure is
# in force: entrywise conjugation fixes r, the unit-circle structures fix i*s
ROTATION_GENERATORS = {
    0: (R1, R2),
    1: (I * S1, R2),
    2: (I * S1, I * S2),
}


def bracket(x: LieElement, y: LieElement) -> LieElement:
    """Componentwise matrix commutator."""
    return LieElement(
        x.left * y.left - y.left * x.left,
        x.right * y.right - y.right * x.right,
    )


def _swap_conj(m: Matrix) -> Matrix:
    a, b = m[0, 0], m[0, 1]
    c, d = m[1, 0], m[1, 1]
    return _m2(d.conjugate(), c.conjugate(), b.conjugate(), a.conjugate())


def lie_sigma(i: int, m: LieElement) -> LieElement:
    """The real structure sigma_i acting on sl2+sl2."""
    if i == 0:
        return LieElement(m.left.conjugate(), m.right.conjugate())
    if i == 1:
        return LieElement(_swap_conj(m.left), m.right.conjugate())
    if i == 2:
        return LieElement(_swap_conj(m.left), _swap_conj(m.right))
    if i == 3:
        return LieElement(m.right.conjugate(), m.left.conjugate())
    raise ValueError("sigma index must be 0..3")


def d_rep(m: LieElement) -> Matrix:
    """Derivative at the identity of the symmetric-square action on P^8.

    Computed once per factor on the degree-2 monomial basis and assembled as
    D_left x I + I x D_right, then permuted into the frozen y order.
    """
    dl = monomial_rep_derivative(m.left, DEGREE2_MONOMIALS_2VARS)
    dr = monomial_rep_derivative(m.right, DEGREE2_MONOMIALS_2VARS)
    out = [[ZERO] * 9 for _ in range(9)]
    for a in range(9):
        ia, ja = divmod(TENSOR_POS[a], 3)
        for b in range(9):
            ib, jb = divmod(TENSOR_POS[b], 3)
            val = ZERO
            if ja == jb:
                val = val + dl[ia, ib]
            if ia == ib:
                val = val + dr[ja, jb]
            out[a][b] = val
    return Matrix(out)


def span_contains(elements, x: LieElement) -> bool:
    if x.is_zero:
        return True
    rows = [e.vec() for e in elements]
    m = Matrix(rows)
    aug = Matrix(rows + [x.vec()])
    return m.rank() == aug.rank()


def is_subalgebra(basis) -> bool:
    """True iff all pairwise brackets lie in the span of the basis."""
    basis = list(basis)
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if not span_contains(basis, bracket(x, y)):
                return False
    return True


@dataclass(frozen=True)
class Subalgebra:
    """A bracket-closed span of independent elements."""

    basis: tuple[LieElement, ...]

    def __post_init__(self):
        rows = Matrix([e.vec() for e in self.basis])
        if rows.rank() != len(self.basis):
            raise ValueError("subalgebra basis is linearly dependent")
        if not is_subalgebra(self.basis):
            raise ValueError("span is not closed under the bracket")

    def __len__(self) -> int:
        return len(self.basis)


def solve_invariant(tangents, ambient: FormSpan) -> FormSpan:
    """Forms A in the ambient span with D^T A + A D = 0 for every tangent D.

    The kernel is computed inside the coefficient space of the ambient span,
    never in the full space of symmetric matrices.
    """
    if not ambient.basis:
        return ambient
    n = ambient.dim
    idx = [(i, j) for i in range(n) for j in range(i, n)]
    rows: list[list[GaussianRational]] = []
    for d in tangents:
        dt = d.transpose()
        cols = [dt * q.matrix + q.matrix * d for q in ambient.basis]
        for i, j in idx:
            row = [c[i, j] for c in cols]
            if any(row):
                rows.append(row)
    if not rows:
        return ambient.reduced()
    combos = kernel(Matrix(rows))
    forms = []
    for v in combos:
        coeffs = v.column_vector()
        m = Matrix.zero(n, n)
        for c, q in zip(coeffs, ambient.basis):
            if c:
                m = m + q.matrix.scale(c)
        forms.append(QuadraticForm(m, ambient.frame))
    return FormSpan(tuple(forms), ambient.frame, ambient.coords).reduced()


def invariant_forms(g, ambient: FormSpan) -> FormSpan:
    """Invariant quadratic forms of a subalgebra of sl2+sl2 inside a span."""
    basis = g.basis if isinstance(g, Subalgebra) else tuple(g)
    return _invariant_forms_cached(basis, ambient)


@lru_cache(maxsize=64)
def _invariant_forms_cached(basis, ambient: FormSpan) -> FormSpan:
    return solve_invariant([d_rep(x) for x in basis], ambient)


def real_basis(space: FormSpan, i: int) -> FormSpan:
    """Fixed forms of the antilinear involution induced by sigma_i.

    The span must be closed under the sigma_i action; the result is a basis
    of the fixed real form, whose real dimension equals the complex
    dimension of the input.
    """
    k = len(space.basis)
    if k == 0:
        return space
    images = []
    for q in space.basis:
        coeffs = space.coordinates_of(apply_sigma(i, q))
        if coeffs is None:
            raise ValueError("span is not closed under the sigma action")
        images.append(coeffs)
    # fixed vectors c = M conj(c); split into real and imaginary parts
    mr = [[images[j][r].re for j in range(k)] for r in range(k)]
    mi = [[images[j][r].im for j in range(k)] for r in range(k)]
    big = [
        [mr[r][j] - (1 if r == j else 0) for j in range(k)] + [mi[r][j] for j in range(k)]
        for r in range(k)
    ] + [
        [mi[r][j] for j in range(k)] + [-mr[r][j] - (1 if r == j else 0) for j in range(k)]
        for r in range(k)
    ]
    fixed = kernel(Matrix(big))
    forms = []
    for v in fixed:
        vec = v.column_vector()
        m = Matrix.zero(space.dim, space.dim)
        for j, q in enumerate(space.basis):
            c = GaussianRational(vec[j].re, vec[k + j].re)
            if c:
                m = m + q.matrix.scale(c)
        forms.append(QuadraticForm(m, space.frame))
    # no echelon normalization here: rescaling by complex units would break
    # the fixedness under the antilinear action that this basis certifies
    out = FormSpan(tuple(forms), space.frame, space.coords)
    if len(out.basis) != k:
        raise ValueError("fixed locus has unexpected dimension")
    return out


def _alpha_instances(alphas):
    return [gauss(a) for a in alphas]


def subalgebra_catalog(alphas=(1, 2, I)) -> list[tuple[str, Subalgebra]]:
    """The classified subalgebras of sl2+sl2, up to complex conjugation.

    One-parameter families are instantiated at the given alpha values; the
    continuum is not enumerated.  Every entry is verified to be closed under
    the bracket on construction.
    """
    out: list[tuple[str, Subalgebra]] = []

    def add(name, *elements):
        out.append((name, Subalgebra(tuple(elements))))

    add("t1", T1)
    add("s1", S1)
    add("t1+t2", T1 + T2)
    add("t1+s2", T1 + S2)
    for a in _alpha_instances(alphas):
        add(f"s1+{a}s2", S1 + a * S2)
    add("t1,s1", T1, S1)
    add("t1,t2", T1, T2)
    add("t1,s2", T1, S2)
    add("s1,s2", S1, S2)
    add("s1+t2,t1", S1 + T2, T1)
    add("t1+t2,s1+s2", T1 + T2, S1 + S2)
    for a in _alpha_instances(alphas):
        add(f"s1+{a}s2,t1", S1 + a * S2, T1)
    add("t1,q1,s1", T1, Q1, S1)
    add("t1,s1,t2", T1, S1, T2)
    add("t1,s1,s2", T1, S1, S2)
    for a in _alpha_instances(alphas):
        add(f"s1+{a}s2,t1,t2", S1 + a * S2, T1, T2)
    add("t1+t2,q1+q2,s1+s2", T1 + T2, Q1 + Q2, S1 + S2)
    add("t1,s1,t2,s2", T1, S1, T2, S2)
    add("t1,q1,s1,t2", T1, Q1, S1, T2)
    add("t1,q1,s1,s2", T1, Q1, S1, S2)
    add("t1,q1,s1,t2,s2", T1, Q1, S1, T2, S2)
    add("t1,q1,s1,t2,q2,s2", T1, Q1, S1, T2, Q2, S2)
    return out


NAMED_ALGEBRAS = {
    "so2xso2": (I * S1, I * S2),
    "so2xsx1": (I * S1, S2),
    "so2xse1": (I * S1, T2),
    "sl2xsl2": FULL_BASIS,
}
