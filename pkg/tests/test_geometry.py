"""Divisor classes, cyclide models, and the Veronese track."""

from fractions import Fraction

import pytest

from celestial.exact import Signature, gauss, signature
from celestial import geometry
from celestial.geometry import (
    BLOWUP_CONFIGS,
    EXCEPTIONAL,
    EXPECTED_SINGULAR_STRINGS,
    L0,
    L1,
    NSClass,
    QuadExt,
    SQRT2,
    b_classes,
    cyclide_pipeline,
    dynkin,
    fiber_class,
    near_class,
    ns_product,
    so3_invariant_form,
    sphere_member,
    stereographic_check,
    veronese_data,
    veronese_invariant_forms,
    veronese_signature_witnesses,
)
from celestial.segre import form_from_pairs, FormSpan


def test_pairing_values():
    assert ns_product(L0, L1) == 1
    assert ns_product(L0, L0) == 0
    e1, e2, e3, e4 = EXCEPTIONAL
    assert ns_product(e1, e1) == -1
    assert ns_product(e1, e2) == 0
    b1 = near_class(1, 3)
    b2 = near_class(2, 4)
    assert ns_product(b1, b2) == 0
    assert ns_product(b1, fiber_class(2, 1, 2)) == 1


def test_pairing_is_symmetric_and_conjugation_equivariant():
    classes = [L0, L1, *EXCEPTIONAL, near_class(1, 3), fiber_class(1, 1, 3)]
    for a in classes:
        for b in classes:
            assert ns_product(a, b) == ns_product(b, a)
            assert ns_product(a.conjugate(), b.conjugate()) == ns_product(a, b)


def test_b_classes_of_the_configurations():
    assert b_classes(BLOWUP_CONFIGS["a"]) == frozenset()
    assert b_classes(BLOWUP_CONFIGS["b"]) == frozenset()
    assert b_classes(BLOWUP_CONFIGS["c"]) == {fiber_class(2, 1, 2)}
    assert b_classes(BLOWUP_CONFIGS["d"]) == {
        fiber_class(1, 1, 3),
        fiber_class(1, 2, 4),
        fiber_class(2, 1, 4),
        fiber_class(2, 2, 3),
    }
    assert b_classes(BLOWUP_CONFIGS["f"]) == {
        fiber_class(1, 1, 3),
        fiber_class(1, 2, 4),
        fiber_class(2, 1, 2),
        near_class(1, 3),
        near_class(2, 4),
    }


def test_b_classes_satisfy_the_numerical_constraints():
    for cfg in BLOWUP_CONFIGS.values():
        anticanonical = NSClass(
            (2, 2, *(-1 if k in cfg.points else 0 for k in (1, 2, 3, 4)))
        )
        for c in b_classes(cfg):
            assert ns_product(c, c) == -2
            assert ns_product(anticanonical, c) == 0


def test_dynkin_strings():
    for tag, cfg in BLOWUP_CONFIGS.items():
        assert dynkin(b_classes(cfg)).render() == EXPECTED_SINGULAR_STRINGS[tag]


def test_dynkin_rejects_branching_graphs():
    star = frozenset(
        {
            near_class(1, 3),
            near_class(2, 4),
            fiber_class(2, 1, 2),
            fiber_class(1, 3, 4),
        }
    )
    with pytest.raises(ValueError):
        dynkin(star)


def test_quadratic_extension_field():
    x = QuadExt.of(gauss(Fraction(1, 2))) + SQRT2
    y = x * x
    assert y == QuadExt.of(gauss(Fraction(9, 4))) + SQRT2
    assert (x / x) == QuadExt.of(gauss(1))
    assert SQRT2 * SQRT2 == QuadExt.of(gauss(2))
    assert not (x - x)


def test_cyclide_pipeline_matches_the_printed_pencils():
    x_s, x_h = cyclide_pipeline()
    spindle_expected = FormSpan(
        (
            form_from_pairs([((1, 1), 1), ((2, 2), 1), ((4, 4), -1)], 5, "x"),
            form_from_pairs([((0, 0), 1), ((3, 3), -1), ((4, 4), -2)], 5, "x"),
        ),
        "x",
    )
    horn_expected = FormSpan(
        (
            form_from_pairs([((2, 2), 1), ((0, 1), 2), ((1, 1), 2)], 5, "x"),
            form_from_pairs(
                [((0, 0), 1), ((0, 1), 2), ((1, 1), 1), ((3, 3), -1), ((4, 4), -1)],
                5,
                "x",
            ),
        ),
        "x",
    )
    assert x_s.equals(spindle_expected)
    assert x_h.equals(horn_expected)
    assert x_s.coords == (0, 1, 2, 3, 4)
    assert x_h.coords == (0, 3, 4, 6, 7)


def test_cyclide_pencils_contain_the_three_sphere():
    from celestial.verify import _combination

    for span in cyclide_pipeline():
        coords = sphere_member(span)
        assert coords is not None
        assert signature(_combination(span, coords).matrix) == Signature(1, 4, 0)


def test_pencils_annihilate_their_parametrizations():
    x_s, x_h = cyclide_pipeline()
    for t in (Fraction(1, 2), Fraction(2), Fraction(3, 5)):
        for u in (Fraction(1, 3), Fraction(2), Fraction(7, 2)):
            sp = geometry.spindle_point(t, u)
            for q in x_s.basis:
                assert not geometry._ext_eval(q, sp)
            hp = geometry.horn_point(t, u)
            for q in x_h.basis:
                assert not geometry._ext_eval(q, hp)


def test_stereographic_images_are_a_cone_and_a_cylinder():
    report = stereographic_check()
    assert report.ok
    assert report.cone_constant == Fraction(1)
    assert report.cylinder_radius_sq == Fraction(1)
    assert report.samples == 2 * 49 - report.skipped


def test_veronese_parametrization_and_ideal():
    param, span = veronese_data()
    assert len(span) == 6
    assert param.eval(1, 1) == tuple(gauss(1) for _ in range(6))
    pt = param.eval(2, 3)
    assert all(not q.evaluate(pt) for q in span.basis)


def test_so3_invariant_form_is_the_printed_one():
    q = so3_invariant_form()
    expected = form_from_pairs(
        [((1, 1), 1), ((2, 2), 1), ((3, 3), 1), ((0, 4), -1), ((0, 5), -1), ((4, 5), -1)],
        6,
    )
    assert q.matrix == expected.matrix
    assert signature(q.matrix) == Signature(1, 5, 0)


def test_full_sl3_leaves_nothing():
    assert len(veronese_invariant_forms(geometry.SL3_BASIS.values())) == 0


def test_signature_witnesses():
    witnesses = veronese_signature_witnesses()
    required = {
        Signature(1, 2, 3),
        Signature(1, 3, 2),
        Signature(1, 5, 0),
        Signature(2, 2, 2),
        Signature(3, 3, 0),
    }
    assert required <= witnesses
    full_rank = {s for s in witnesses if s.rank == 6}
    assert full_rank <= {Signature(1, 5, 0), Signature(3, 3, 0)}


def test_single_generator_witness():
    _, span = veronese_data()
    # the generator comparing the square of one coordinate with a product
    q = span.basis[2]
    assert signature(q.matrix) == Signature(1, 2, 3)
