import pytest

from optfront import measures as M
from optfront import minu
from optfront.finset import EmptySetError, argmin, minimum, set_equal
from optfront.uncertain import IdU, Interval, strict_dom


def test_two_branch_objectives_are_fixed():
    assert minu.seq_example(0) == [3, 2, 2]
    assert minu.seq_example(1) == [1, 1, 0]
    assert minu.seq_example(17) == [3, 1, 0]
    assert minu.sp_example(False).pairs == ((2, 0.4), (0, 0.3), (1, 0.3))
    assert minu.sp_example(True).pairs == ((3, 0.4), (4, 0.3), (4, 0.3))
    assert minu.interval_example(True) == Interval(0.0, 1.0)
    assert minu.interval_example(False) == Interval(1.1, 1.2)
    assert minu.pdf_example(False).support == Interval(1.0, 2.0)
    assert minu.pdf_example(True).support == Interval(0.0, 0.1)
    assert minu.pdf_example(True).weights == (0.6, 0.4)


def test_min_uncertain_examples():
    assert minu.min_uncertain(M.seq_worst, minu.seq_example, [0, 1]) == [[1, 1, 0]]
    both = minu.min_uncertain(M.const(3), minu.seq_example, [0, 1])
    assert set_equal(both, [[3, 2, 2], [1, 1, 0]])


def test_argmin_uncertain_examples():
    assert minu.argmin_uncertain(M.seq_worst, minu.seq_example, [0, 1]) == [1]
    assert minu.argmin_uncertain(M.const(3), minu.seq_example, [0, 1]) == [0, 1]


def test_empty_input_raises():
    with pytest.raises(EmptySetError):
        minu.min_uncertain(M.seq_worst, minu.seq_example, [])
    with pytest.raises(EmptySetError):
        minu.argmin_uncertain(M.seq_worst, minu.seq_example, [])


def test_identity_reduction():
    f = minu.identity_square
    xs = [-2, 1, 2]
    assert minu.min_uncertain(M.unwrap, f, xs) == [IdU(1)]
    assert minu.argmin_uncertain(M.unwrap, f, xs) == argmin(lambda x: x * x, xs)
    assert minu.prop_identity_singleton(M.unwrap, f, xs)
    assert minu.prop_identity_min(M.unwrap, f, xs)
    assert minu.prop_identity_argmin(M.unwrap, f, xs)


def test_constant_measure_breaks_identity_reduction():
    f = minu.identity_square
    assert minu.prop_identity_singleton(M.const(7), f, [1, 2]) is False
    # one distinct image keeps the singleton property
    assert minu.prop_identity_singleton(M.const(7), f, [2, -2])


def test_soundness_property_verdicts():
    worst = M.seq_worst
    length = M.seq_length
    f = minu.seq_example
    # the structural measure returns a dominated branch once both are reachable
    assert minu.prop_result_never_dominated(length, f, [0, 1]) is False
    assert minu.prop_result_never_dominated(worst, f, [0, 1])
    assert minu.prop_result_never_dominated(worst, f, [0, 5, 1])
    for m in (worst, length, M.const(3)):
        assert minu.prop_result_nonempty_subset(m, f, [0, 1, 2])
        assert minu.prop_argmin_uncertain_sound(m, f, [0, 1, 2])
        assert minu.prop_argmin_uncertain_complete(m, f, [0, 1, 2])


def test_interval_width_failure_scenario():
    # minimizing the uncertainty width picks the interval with strictly
    # higher values, which the dominance order rejects
    result = minu.min_uncertain(M.iv_width, minu.interval_example, [False, True])
    assert result == [Interval(1.1, 1.2)]
    assert strict_dom(Interval(0.0, 1.0), Interval(1.1, 1.2))
    assert minu.prop_result_never_dominated(M.iv_width, minu.interval_example, [False, True]) is False
    assert minu.prop_result_never_dominated(M.iv_best, minu.interval_example, [False, True])


def test_sp_and_pdf_soundness():
    assert minu.prop_result_never_dominated(M.const(3), minu.sp_example, [False, True]) is False
    assert minu.prop_result_never_dominated(M.sp_expected, minu.sp_example, [False, True])
    assert minu.prop_result_never_dominated(M.const(3), minu.pdf_example, [False, True]) is False
    assert minu.prop_result_never_dominated(M.pdf_expected, minu.pdf_example, [False, True])
    assert minu.prop_result_never_dominated(M.pdf_most_likely, minu.pdf_example, [False, True])


def test_min_uncertain_reduces_to_plain_minimum():
    f = minu.identity_square
    xs = [3, -1, 4, -1]
    plain = minimum(lambda x: x * x, xs)
    assert set_equal(minu.min_uncertain(M.unwrap, f, xs), [IdU(plain)])
