"""Field laws and exact linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from celestial.exact import (
    GaussianRational,
    I,
    Matrix,
    ONE,
    Signature,
    congruence_diagonalize,
    gauss,
    kernel,
    signature,
    solve,
)

small_fractions = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
gaussians = st.builds(GaussianRational, small_fractions, small_fractions)


@given(gaussians, gaussians, gaussians)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(gaussians)
def test_inverses_and_conjugation(a):
    assert a.conjugate().conjugate() == a
    assert a.norm() >= 0
    assert (a.norm() == 0) == (not a)
    if a:
        assert a * (ONE / a) == ONE


@given(gaussians)
def test_norm_is_conjugate_product(a):
    assert a * a.conjugate() == GaussianRational(a.norm())


def test_parse_round_trips():
    for text in ("0", "-3", "1/2", "i", "-i", "2i", "1+2i", "1/2-3/4i"):
        z = GaussianRational.parse(text)
        assert GaussianRational.parse(str(z)) == z
    with pytest.raises(ValueError):
        GaussianRational.parse("elephant")


def test_kernel_identity_is_trivial():
    assert kernel(Matrix.identity(3)) == []


def test_kernel_of_zero_matrix():
    basis = kernel(Matrix.zero(2, 2))
    assert len(basis) == 2


def test_kernel_hermitian_rank_one():
    m = Matrix([[1, "i"], ["-i", 1]])
    basis = kernel(m)
    assert len(basis) == 1
    v = basis[0]
    assert m * v == Matrix.zero(2, 1)


def test_solve_membership():
    m = Matrix([[1, 0], [0, 0]])
    assert solve(m, Matrix.column([3, 0])) is not None
    assert solve(m, Matrix.column([0, 1])) is None


def test_congruence_diagonal_input():
    a = Matrix([[1, 0], [0, -1]])
    d, p = congruence_diagonalize(a)
    assert d == a
    assert p == Matrix.identity(2)


def test_congruence_hyperbolic_plane():
    a = Matrix([[0, 1], [1, 0]])
    d, p = congruence_diagonalize(a)
    assert p.transpose() * a * p == d
    assert p.det()
    entries = [d[i, i].re for i in range(2)]
    assert sum(1 for x in entries if x > 0) == 1
    assert sum(1 for x in entries if x < 0) == 1


def _veronese_invariant_matrix():
    # x1^2 + x2^2 + x3^2 - x0 x4 - x0 x5 - x4 x5 on six coordinates
    h = Fraction(-1, 2)
    m = [[Fraction(0)] * 6 for _ in range(6)]
    for k in (1, 2, 3):
        m[k][k] = Fraction(1)
    for i, j in ((0, 4), (0, 5), (4, 5)):
        m[i][j] = m[j][i] = h
    return Matrix(m)


def test_congruence_six_dimensional_example():
    a = _veronese_invariant_matrix()
    d, p = congruence_diagonalize(a)
    assert p.transpose() * a * p == d
    assert p.det()
    entries = [d[i, i].re for i in range(6)]
    counts = (
        sum(1 for x in entries if x > 0),
        sum(1 for x in entries if x < 0),
    )
    assert counts in ((5, 1), (1, 5))
    assert signature(a) == Signature(1, 5, 0)


def test_signature_normalization():
    assert signature(Matrix.identity(3)) == Signature(0, 3, 0)
    assert signature(Matrix([[0, 1], [1, 0]])) == Signature(1, 1, 0)


def test_signature_rejects_nonreal_and_asymmetric():
    with pytest.raises(ValueError):
        signature(Matrix([[0, "i"], ["-i", 0]]))
    with pytest.raises(ValueError):
        signature(Matrix([[0, 1], [0, 0]]))


@given(st.integers(0, 10_000))
@settings(max_examples=30)
def test_signature_counts_sum_to_dimension(seed):
    import random

    rng = random.Random(seed)
    n = rng.choice((2, 3, 4))
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = Fraction(rng.randint(-3, 3))
    sig = signature(Matrix(m))
    assert sig.pos + sig.neg + sig.zero == n
    assert sig.pos <= sig.neg


def test_signature_congruence_invariance():
    import random

    rng = random.Random(11)
    for _ in range(20):
        n = rng.choice((3, 4))
        sym = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                sym[i][j] = sym[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        a = Matrix(sym)
        q = Matrix.identity(n)
        for _ in range(2 * n):
            i, j = rng.randrange(n), rng.randrange(n)
            if i == j:
                continue
            shear = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
            shear[i][j] = Fraction(rng.randint(1, 3), rng.randint(1, 2))
            q = q * Matrix(shear)
        assert signature(q.transpose() * a * q) == signature(a)


def test_matrix_determinant_and_rank():
    m = Matrix([[1, 2], [3, 4]])
    assert m.det() == gauss(-2)
    assert m.rank() == 2
    assert Matrix([[1, 2], [2, 4]]).rank() == 1
