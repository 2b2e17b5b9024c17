import pytest
from hypothesis import given, settings, strategies as st

from optfront.uncertain import (
    HistPDF,
    IdU,
    Interval,
    ShapeError,
    SimpleProb,
    ValidityError,
    fmap,
    generic_all,
    generic_any,
    generic_elem,
    generic_shape,
    is_valid,
    not_strictly_dominated,
    pointwise_le,
    same_shape,
    shape,
    strict_dom,
    support,
    validate,
    zip_u,
)


def test_same_shape_examples():
    assert same_shape([1, 2, 3], [9, 9, 9])
    assert not same_shape([1], [1, 2])
    assert same_shape(Interval(0, 1), Interval(5, 9))
    assert same_shape(IdU(3), IdU("x"))
    assert not same_shape([1, 2], Interval(1, 2))
    # distribution shape keeps the probability vector
    assert same_shape(SimpleProb(((1, 0.5), (2, 0.5))), SimpleProb(((7, 0.5), (9, 0.5))))
    assert not same_shape(SimpleProb(((1, 0.4), (2, 0.6))), SimpleProb(((1, 0.5), (2, 0.5))))
    # histogram shape is the bin count
    assert same_shape(
        HistPDF(Interval(0, 1), (0.5, 0.5)), HistPDF(Interval(3, 9), (0.1, 0.9))
    )


def test_strict_dom_examples():
    assert strict_dom([1, 1, 0], [3, 2, 2])
    assert not strict_dom([2, 5], [2, 5])
    assert strict_dom(Interval(0.0, 1.0), Interval(1.1, 1.2))
    assert not strict_dom(Interval(1.1, 1.2), Interval(0.0, 1.0))
    # touching intervals are incomparable
    assert not strict_dom(Interval(0, 1), Interval(1, 2))
    # histograms inherit the comparison of their supports
    a = HistPDF(Interval(0.0, 0.1), (0.6, 0.4))
    b = HistPDF(Interval(1.0, 2.0), (0.6, 0.4))
    assert strict_dom(a, b)
    assert not strict_dom(b, a)


def test_strict_dom_validates():
    with pytest.raises(ValidityError):
        strict_dom(Interval(2, 1), Interval(3, 4))
    with pytest.raises(ValidityError):
        strict_dom(SimpleProb(((1, 0.2),)), SimpleProb(((2, 1.0),)))
    with pytest.raises(ShapeError):
        strict_dom([1, 2], Interval(0, 1))


def test_pointwise_le_examples():
    assert pointwise_le([1, 2], [1, 3])
    assert not pointwise_le([1, 2], [3])
    assert pointwise_le(Interval(0, 2), Interval(1, 2))
    assert not pointwise_le(Interval(0, 2), Interval(1, 1))
    assert pointwise_le(IdU(1), IdU(4))
    sp = SimpleProb(((2, 0.4), (0, 0.6)))
    assert pointwise_le(sp, fmap(lambda v: v + 1, sp))


def test_not_strictly_dominated_examples():
    u = [4, 7]
    assert not_strictly_dominated(u, u)
    assert not not_strictly_dominated([3, 2, 2], [1, 1, 0])
    assert not_strictly_dominated([0, 5], [1, 4])


def test_validity_predicates():
    assert is_valid(SimpleProb(((1, 0.5), (2, 0.5))))
    assert not is_valid(SimpleProb(((1, 0.7), (2, 0.7))))
    assert not is_valid(SimpleProb(((1, -0.1), (2, 1.1))))
    assert is_valid(Interval(1, 1))
    assert not is_valid(Interval(2, 1))
    assert is_valid(HistPDF(Interval(0, 1), (0.25, 0.75)))
    assert not is_valid(HistPDF(Interval(1, 0), (1.0,)))
    assert not is_valid(HistPDF(Interval(0, 1), (0.4, 0.4)))
    validate([1, 2, 3])
    with pytest.raises(ValidityError):
        validate(Interval(5, 0))


def test_fmap_touches_values_only():
    sp = SimpleProb(((2, 0.4), (0, 0.6)))
    assert fmap(lambda v: v + 10, sp) == SimpleProb(((12, 0.4), (10, 0.6)))
    pdf = HistPDF(Interval(1.0, 2.0), (0.6, 0.4))
    shifted = fmap(lambda v: v + 1, pdf)
    assert shifted.support == Interval(2.0, 3.0)
    assert shifted.weights == (0.6, 0.4)
    assert fmap(lambda v: -v, IdU(3)) == IdU(-3)


def test_support_per_carrier():
    assert support([3, 1]) == [3, 1]
    assert support(IdU(4)) == [4]
    assert support(SimpleProb(((2, 0.4), (0, 0.6)))) == [2, 0]
    assert support(Interval(1, 9)) == [1, 9]
    assert support(HistPDF(Interval(1, 9), (1.0,))) == [1, 9]


def test_generic_derivations_examples():
    assert generic_elem(2, [1, 2, 3])
    assert not generic_elem(9, [1, 2, 3])
    assert generic_all([])
    assert generic_any([False, False, True])
    assert not generic_any([])
    assert generic_shape([1, 2]) == [(), ()]


@given(st.lists(st.integers(-5, 5), max_size=8), st.integers(-5, 5))
@settings(max_examples=300, deadline=None)
def test_generic_membership_agrees(xs, a):
    assert generic_elem(a, xs) == (a in xs)


@given(st.lists(st.booleans(), max_size=8))
@settings(max_examples=300, deadline=None)
def test_generic_quantifiers_agree(bs):
    assert generic_all(bs) == all(bs)
    assert generic_any(bs) == any(bs)


def test_zip_u():
    assert zip_u([1, 2], [3, 4]) == [(1, 3), (2, 4)]
    assert zip_u(IdU(1), IdU(2)) == IdU((1, 2))
    with pytest.raises(ShapeError):
        zip_u([1, 2], [3])
    with pytest.raises(ShapeError):
        zip_u([1], IdU(2))


def test_interval_dominance_is_endpoint_rule():
    grid = [k / 4 for k in range(-8, 9)]
    for a in grid:
        for b in grid:
            if a > b:
                continue
            for c in grid:
                for d in grid:
                    if c > d:
                        continue
                    assert strict_dom(Interval(a, b), Interval(c, d)) == (b < c)


def test_sp_dominance_ignores_probabilities():
    a = SimpleProb(((0, 0.9), (1, 0.1)))
    b = SimpleProb(((2, 0.2), (3, 0.8)))
    a2 = SimpleProb(((0, 0.1), (1, 0.9)))
    b2 = SimpleProb(((2, 0.5), (3, 0.5)))
    assert strict_dom(a, b) == strict_dom(a2, b2) == True  # noqa: E712
    # zero-probability outcomes still count as possible
    c = SimpleProb(((2, 1.0), (0, 0.0)))
    assert not strict_dom(SimpleProb(((1, 1.0),)), c)


def test_shape_values():
    assert shape([1, 2, 3]) == 3
    assert shape(Interval(0, 9)) == ()
    assert shape(HistPDF(Interval(0, 1), (0.5, 0.5))) == 2
