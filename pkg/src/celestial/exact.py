"""Exact arithmetic over Q(i) and the dense linear algebra used everywhere else.

Rationals are ``fractions.Fraction`` (always reduced, positive denominator).
On top of that sit Gaussian rationals, dense matrices, exact null spaces,
symmetric congruence diagonalization and signatures of real symmetric
matrices.  No floating point enters this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

_GAUSS_RE = re.compile(
    r"""^\s*(?P<sign>[+-]?)\s*
        (?:(?P<num>\d+(?:/\d+)?)?\s*(?P<i>i)?)
        \s*$""",
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """An element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self.im and not other.im:
            return GaussianRational(self.re * other.re)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        if not self.re:
            return im
        return f"{self.re}{'+' if self.im > 0 else ''}{im}"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Parse strings like '3', '-1/2', 'i', '2i', '1/2-3/4i'."""
        s = text.strip().replace(" ", "")
        if not s:
            raise ValueError("empty Gaussian rational")
        # split into signed terms
        terms = re.findall(r"[+-]?[^+-]+", s)
        re_part = Fraction(0)
        im_part = Fraction(0)
        for term in terms:
            m = _GAUSS_RE.match(term)
            if not m or (m.group("num") is None and m.group("i") is None):
                raise ValueError(f"cannot parse {text!r} as a Gaussian rational")
            mag = Fraction(m.group("num")) if m.group("num") else Fraction(1)
            if m.group("sign") == "-":
                mag = -mag
            if m.group("i"):
                im_part += mag
            else:
                re_part += mag
        return GaussianRational(re_part, im_part)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(Fraction(x))
    return None


def gauss(x) -> GaussianRational:
    """Coerce an int, Fraction, string or GaussianRational into Q(i)."""
    z = _coerce(x)
    if z is not None:
        return z
    if isinstance(x, str):
        return GaussianRational.parse(x)
    raise TypeError(f"cannot coerce {x!r} into Q(i)")


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


class Matrix:
    """Dense immutable matrix over Q(i), row major."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries):
        self._e = tuple(tuple(gauss(x) for x in row) for row in entries)
        self.rows = len(self._e)
        self.cols = len(self._e[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self._e):
            raise ValueError("ragged rows")

    @classmethod
    def _raw(cls, rows):
        # internal fast path: rows must already hold GaussianRational entries
        obj = object.__new__(cls)
        obj._e = tuple(tuple(row) for row in rows)
        obj.rows = len(obj._e)
        obj.cols = len(obj._e[0]) if obj._e else 0
        return obj

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([[0] * cols for _ in range(rows)])

    @staticmethod
    def column(entries) -> "Matrix":
        return Matrix([[x] for x in entries])

    def entries(self):
        return self._e

    def column_vector(self) -> tuple:
        if self.cols != 1:
            raise ValueError("not a column vector")
        return tuple(row[0] for row in self._e)

    def __getitem__(self, key) -> GaussianRational:
        i, j = key
        return self._e[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._e, other._e)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self._e])

    def _check_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("incompatible shapes for product")
            out = [[ZERO] * other.cols for _ in range(self.rows)]
            for i, row in enumerate(self._e):
                acc = out[i]
                for k, a in enumerate(row):
                    if a:
                        for j, b in enumerate(other._e[k]):
                            if b:
                                acc[j] = acc[j] + a * b
            return Matrix._raw(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Matrix":
        c = gauss(c)
        return Matrix([[c * a for a in row] for row in self._e])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self._e)))

    def conjugate(self) -> "Matrix":
        return Matrix([[a.conjugate() for a in row] for row in self._e])

    def trace(self) -> GaussianRational:
        return sum((self._e[i][i] for i in range(min(self.rows, self.cols))), ZERO)

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self._e[i][j] == self._e[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    @property
    def is_real(self) -> bool:
        return all(a.is_real for row in self._e for a in row)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix([[self._e[i][j] for j in col_idx] for i in row_idx])

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns."""
        m = [list(row) for row in self._e]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = ONE / m[r][c]
            m[r] = [inv * a if a else a for a in m[r]]
            lead = m[r]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b if b else a for a, b in zip(m[i], lead)]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix._raw(m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(row) for row in self._e]
        n = self.rows
        det = ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c]), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c]
            inv = ONE / m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(a) for a in row) for row in self._e)
        return f"Matrix[{body}]"


def kernel(m: Matrix) -> list[Matrix]:
    """Exact basis of the right null space {v : m*v = 0}, as column vectors."""
    red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(Matrix.column(v))
    return basis


def solve(m: Matrix, rhs: Matrix):
    """One exact solution of m*x = rhs (column), or None if inconsistent."""
    aug = Matrix([list(row) + [rhs[i, 0]] for i, row in enumerate(m.entries())])
    red, pivots = aug.rref()
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, p in enumerate(pivots):
        x[p] = red[r, m.cols]
    return Matrix.column(x)


@dataclass(frozen=True, slots=True)
class Signature:
    """Inertia of a real symmetric matrix, normalized so pos <= neg.

    A quadric V(q) equals V(-q), so (pos, neg) and (neg, pos) describe the
    same hypersurface; the normalized representative keeps comparisons
    well-defined.
    """

    pos: int
    neg: int
    zero: int = 0

    def normalized(self) -> "Signature":
        if self.pos > self.neg:
            return Signature(self.neg, self.pos, self.zero)
        return self

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    def __str__(self) -> str:
        return f"({self.pos},{self.neg})" + (f"+0^{self.zero}" if self.zero else "")


def _require_real_symmetric(a: Matrix) -> None:
    if a.rows != a.cols:
        raise ValueError("matrix is not square")
    if not a.is_real:
        raise ValueError("matrix has imaginary entries; move the form to a real frame first")
    if not a.is_symmetric:
        raise ValueError("matrix is not symmetric")


def congruence_diagonalize(a: Matrix) -> tuple[Matrix, Matrix]:
    """Exact congruence P^T * a * P = D with D diagonal and P invertible.

    Symmetric Gaussian elimination; a zero diagonal pivot with a nonzero
    off-diagonal partner is repaired by the classical e_k -> e_k + e_j
    substitution, which stays exact over the rationals.
    """
    _require_real_symmetric(a)
    n = a.rows
    m = [[x.re for x in row] for row in a.entries()]
    p = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def add_col(dst, src, f):
        # column op  col_dst += f*col_src  paired with the matching row op
        for i in range(n):
            m[i][dst] += f * m[i][src]
        for i in range(n):
            m[dst][i] += f * m[src][i]
        for i in range(n):
            p[i][dst] += f * p[i][src]

    def swap_cols(i, j):
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for k in range(n):
        if not m[k][k]:
            j = next((j for j in range(k + 1, n) if m[j][j]), None)
            if j is not None:
                swap_cols(k, j)
            else:
                j = next((j for j in range(k + 1, n) if m[k][j]), None)
                if j is None:
                    continue  # row/column already clear
                add_col(k, j, Fraction(1))
        piv = m[k][k]
        for j in range(k + 1, n):
            if m[k][j]:
                add_col(j, k, -m[k][j] / piv)

    d = Matrix([[m[i][j] if i == j else 0 for j in range(n)] for i in range(n)])
    return d, Matrix(p)


def signature(a: Matrix) -> Signature:
    """Normalized inertia of a real symmetric matrix, via exact congruence."""
    d, _ = congruence_diagonalize(a)
    pos = sum(1 for i in range(a.rows) if d[i, i].re > 0)
    neg = sum(1 for i in range(a.rows) if d[i, i].re < 0)
    return Signature(pos, neg, a.rows - pos - neg).normalized()
