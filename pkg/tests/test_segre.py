"""The double Segre surface: parametrization, quadrics, real structures."""

import random
from fractions import Fraction

import pytest

from celestial.exact import Matrix, gauss
from celestial import segre
from celestial.segre import (
    SEGRE_PARAM,
    FormSpan,
    apply_sigma,
    eval_param,
    form_from_pairs,
    i2_dimension_check,
    i2_segre,
    mu_matrix,
    mu_transform,
    normalize_point,
    rep_S,
    toric_projection,
    torus_sigma,
)


def test_eval_param_at_torus_identity():
    assert eval_param(SEGRE_PARAM, 1, 1) == tuple(gauss(1) for _ in range(9))


def test_eval_param_exact_values():
    pt = eval_param(SEGRE_PARAM, 2, 1)
    expected = [1, 2, Fraction(1, 2), 1, 1, 2, Fraction(1, 2), 2, Fraction(1, 2)]
    assert pt == tuple(gauss(x) for x in expected)


def test_eval_param_rejects_zero():
    with pytest.raises(ValueError):
        eval_param(SEGRE_PARAM, 0, 1)


def test_ideal_has_dimension_twenty_and_annihilates_points():
    span = i2_segre()
    assert len(span) == 20
    pt = eval_param(SEGRE_PARAM, 3, 5)
    assert all(not q.evaluate(pt) for q in span.basis)


def test_ideal_vanishes_on_deterministic_grid():
    span = i2_segre()
    for a in range(1, 8):
        for b in range(1, 8):
            pt = eval_param(SEGRE_PARAM, Fraction(a, 3), Fraction(b, 5))
            for q in span.basis:
                assert not q.evaluate(pt)


def test_ideal_dimension_recomputation_table():
    dims = {tag: i2_dimension_check(tag) for tag in "abcdefgh"}
    assert dims == {"a": 20, "b": 9, "c": 9, "d": 6, "e": 2, "f": 2, "g": 2, "h": 1}
    # stored generator list is validated against the recomputation
    assert len(i2_segre()) == dims["a"]


def test_sigma_commutes_with_the_parametrization():
    s, u = gauss("2"), gauss("-1+3i")
    for i in range(4):
        lhs = apply_sigma(i, eval_param(SEGRE_PARAM, s, u))
        rhs = eval_param(SEGRE_PARAM, *torus_sigma(i, s, u))
        assert normalize_point(lhs) == normalize_point(rhs)


def test_sigma_three_swaps_factors():
    s, u = gauss(2), gauss(5)
    lhs = apply_sigma(3, eval_param(SEGRE_PARAM, s, u))
    rhs = eval_param(SEGRE_PARAM, u.conjugate(), s.conjugate())
    assert normalize_point(lhs) == normalize_point(rhs)


def test_sigma_is_an_involution_on_points_and_forms():
    pt = eval_param(SEGRE_PARAM, gauss("2+i"), gauss("3-2i"))
    for i in range(4):
        assert apply_sigma(i, apply_sigma(i, pt)) == pt
        for q in i2_segre().basis:
            assert apply_sigma(i, apply_sigma(i, q)) == q


def test_sigma_fixes_real_forms_trivially():
    q = i2_segre().basis[0]
    assert apply_sigma(0, q) == q


def test_ideal_span_is_sigma_closed():
    span = i2_segre()
    for i in range(4):
        for q in span.basis:
            assert span.contains(apply_sigma(i, q))


def test_mu_two_moves_the_first_generator_to_a_real_frame():
    q = i2_segre().basis[0]  # vanishing difference on the first pair
    xq = mu_transform(2, q)
    expected = form_from_pairs(
        [((0, 0), Fraction(1, 4)), ((1, 1), -1), ((2, 2), -1)], 9, "x"
    )
    assert xq.matrix == expected.matrix
    assert xq.is_real


def test_mu_two_sum_is_the_sphere_equation():
    total = Matrix.zero(9, 9)
    for q in i2_segre().basis[:4]:
        total = total + mu_transform(2, q).matrix
    expected = form_from_pairs(
        [((0, 0), 1)] + [((k, k), -1) for k in range(1, 9)], 9, "x"
    )
    assert total == expected.matrix


def test_mu_zero_is_the_identity():
    q = i2_segre().basis[0]
    assert mu_transform(0, q).matrix == q.matrix


def test_mu_matrices_are_invertible():
    for i in range(4):
        assert mu_matrix(i).det()


def test_mu_transform_flags_incompatible_forms_without_rejecting():
    # a form that is not defined over the sigma_2 reals keeps an imaginary part
    q = i2_segre().basis[16]  # mixed product difference
    out = mu_transform(2, q)
    assert not out.is_real


def test_rep_identity():
    assert rep_S(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(9)


def test_rep_scaling_factor():
    alpha = gauss(2)
    a = rep_S(Matrix([[alpha, 0], [0, 1 / alpha]]), Matrix.identity(2))
    diag = [a[k, k] for k in range(9)]
    assert diag == [gauss(x) for x in [1, 4, Fraction(1, 4), 1, 1, 4, Fraction(1, 4), 4, Fraction(1, 4)]]
    for i in range(9):
        for j in range(9):
            if i != j:
                assert not a[i, j]


def test_rep_rejects_singular_factors():
    with pytest.raises(ValueError):
        rep_S(Matrix([[1, 1], [1, 1]]), Matrix.identity(2))


def _random_sl2(rng):
    def f():
        return Fraction(rng.randint(1, 5) * rng.choice((1, -1)), rng.randint(1, 3))

    return (
        Matrix([[1, f()], [0, 1]])
        * Matrix([[1, 0], [f(), 1]])
        * Matrix([[1, f()], [0, 1]])
    )


def test_rep_is_a_homomorphism():
    rng = random.Random(5)
    for _ in range(20):
        p1, p2, q1, q2 = (_random_sl2(rng) for _ in range(4))
        assert rep_S(p1 * q1, p2 * q2) == rep_S(p1, p2) * rep_S(q1, q2)


def test_rep_matches_the_lift_pointwise():
    rng = random.Random(9)
    for _ in range(10):
        p1, p2 = _random_sl2(rng), _random_sl2(rng)
        m = rep_S(p1, p2)
        s, t = gauss(rng.randint(1, 7)), gauss(rng.randint(1, 7))
        u, w = gauss(rng.randint(1, 7)), gauss(rng.randint(1, 7))
        lifted = SEGRE_PARAM.eval_lift(s, t, u, w)
        moved = SEGRE_PARAM.eval_lift(
            p1[0, 0] * s + p1[0, 1] * t,
            p1[1, 0] * s + p1[1, 1] * t,
            p2[0, 0] * u + p2[0, 1] * w,
            p2[1, 0] * u + p2[1, 1] * w,
        )
        assert m * Matrix.column(lifted) == Matrix.column(moved)


def test_rep_preserves_the_ideal_span():
    span = i2_segre()
    rng = random.Random(3)
    for _ in range(5):
        m = rep_S(_random_sl2(rng), _random_sl2(rng))
        for q in span.basis[:7]:
            moved = segre.QuadraticForm(m.transpose() * q.matrix * m, "y")
            assert span.contains(moved)


def test_toric_projection_dp6():
    param, span = toric_projection({5, 6})
    assert len(param) == 7
    assert param.coords == (0, 1, 2, 3, 4, 7, 8)
    assert len(span) == 9
    span.validate_on(param)


def test_toric_projection_spindle_and_horn_spans():
    _, spindle = toric_projection({5, 6, 7, 8})
    assert spindle.coords == (0, 1, 2, 3, 4)
    assert len(spindle) == 2
    expected = FormSpan(
        (
            form_from_pairs([((0, 0), 1), ((1, 2), -1)], 5),
            form_from_pairs([((0, 0), 1), ((3, 4), -1)], 5),
        ),
        "y",
    )
    assert spindle.equals(expected)

    _, horn = toric_projection({1, 2, 5, 8})
    assert horn.coords == (0, 3, 4, 6, 7)
    assert len(horn) == 2
    expected_h = FormSpan(
        (
            form_from_pairs([((0, 0), 1), ((1, 2), -1)], 5),
            form_from_pairs([((2, 2), 1), ((3, 4), -1)], 5),
        ),
        "y",
    )
    assert horn.equals(expected_h)


def test_toric_projection_rejects_degenerate_remnant():
    with pytest.raises(ValueError):
        toric_projection({3, 4, 5, 6, 7, 8})


def test_mu_transform_of_projected_span_is_exact():
    param, span = toric_projection({5, 6, 7, 8})
    q = span.basis[0]
    xq = mu_transform(1, q, span.coords)
    expected = form_from_pairs([((0, 0), 1), ((1, 1), -1), ((2, 2), -1)], 5, "x")
    assert xq.matrix == expected.matrix
