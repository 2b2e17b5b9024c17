"""Minimization of objectives that return uncertain values.

``min_uncertain`` ranks the uncertain images of a finite set by a measure and
keeps every image whose measure is minimal; ``argmin_uncertain`` recovers the
inputs that map onto those images.  Because measures are rarely injective the
result is a set of uncertain values, not a single one.

The executable soundness properties live here too.  The central one demands
that no returned image is universally strictly dominated by any reachable
image; it holds exactly for measures passing the dominance-monotonicity
condition, and the fixed two-branch objectives at the bottom of the module
supply the standard counterexamples for measures that fail it.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .finset import (
    EmptySetError,
    argmin,
    contains,
    for_all,
    is_singleton_set,
    is_subset,
    minimum,
    set_equal,
)
from .measures import Measure
from .uncertain import HistPDF, IdU, Interval, SimpleProb, not_strictly_dominated


def min_uncertain(measure: Measure, f: Callable, xs: Sequence) -> list:
    """All measure-minimal uncertain images of ``xs`` under ``f``."""
    if not xs:
        raise EmptySetError("min_uncertain of an empty set")
    return argmin(measure, [f(a) for a in xs])


def argmin_uncertain(measure: Measure, f: Callable, xs: Sequence) -> list:
    """The inputs whose image lies in ``min_uncertain(measure, f, xs)``.

    Requires structural equality on the uncertain values: same shape, equal
    outcomes, and for distributions equal probabilities.
    """
    if not xs:
        raise EmptySetError("argmin_uncertain of an empty set")
    ms = min_uncertain(measure, f, xs)
    return [a for a in xs if contains(ms, f(a))]


# ---------------------------------------------------------------------------
# Soundness properties
# ---------------------------------------------------------------------------

def prop_result_nonempty_subset(measure, f, xs):
    """Nonempty inputs give a nonempty result inside the image."""
    if not xs:
        return None
    images = [f(a) for a in xs]
    ms = min_uncertain(measure, f, xs)
    return len(ms) > 0 and is_subset(ms, images)


def prop_result_never_dominated(measure, f, xs) -> bool:
    """No returned image is universally strictly dominated by a reachable one."""
    if not xs:
        return True
    ms = min_uncertain(measure, f, xs)
    return for_all(
        xs, lambda a: for_all(ms, lambda ub: not_strictly_dominated(ub, f(a)))
    )


def prop_argmin_uncertain_sound(measure, f, xs) -> bool:
    if not xs:
        return True
    ms = min_uncertain(measure, f, xs)
    chosen = argmin_uncertain(measure, f, xs)
    return for_all(xs, lambda a: not contains(chosen, a) or contains(ms, f(a)))


def prop_argmin_uncertain_complete(measure, f, xs) -> bool:
    if not xs:
        return True
    ms = min_uncertain(measure, f, xs)
    chosen = argmin_uncertain(measure, f, xs)
    return for_all(xs, lambda a: not contains(ms, f(a)) or contains(chosen, a))


# With the identity carrier the whole machinery must collapse to plain
# minimum/argmin, provided the measure respects dominance.

def prop_identity_singleton(measure, f, xs):
    if not xs:
        return None
    return is_singleton_set(min_uncertain(measure, f, xs))


def prop_identity_min(measure, f, xs):
    if not xs:
        return None
    plain = minimum(lambda a: f(a).value, xs)
    return set_equal(min_uncertain(measure, f, xs), [IdU(plain)])


def prop_identity_argmin(measure, f, xs):
    if not xs:
        return None
    plain = argmin(lambda a: f(a).value, xs)
    return set_equal(argmin_uncertain(measure, f, xs), plain)


# ---------------------------------------------------------------------------
# Fixed two-branch objectives for the soundness suites
# ---------------------------------------------------------------------------
# Each maps a tiny domain to a pair of uncertain values where one branch is
# universally strictly better than the other, so any measure that ignores
# outcome values gets caught returning the dominated branch.

def seq_example(n: int) -> list:
    if n == 0:
        return [3, 2, 2]
    if n == 1:
        return [1, 1, 0]
    return [3, 1, 0]


def sp_example(b: bool) -> SimpleProb:
    if b:
        return SimpleProb(((3, 0.4), (4, 0.3), (4, 0.3)))
    return SimpleProb(((2, 0.4), (0, 0.3), (1, 0.3)))


def interval_example(b: bool) -> Interval:
    if b:
        return Interval(0.0, 1.0)  # width 1.0, strictly lower values
    return Interval(1.1, 1.2)  # width 0.1


def pdf_example(b: bool) -> HistPDF:
    if b:
        return HistPDF(Interval(0.0, 0.1), (0.6, 0.4))
    return HistPDF(Interval(1.0, 2.0), (0.6, 0.4))


def identity_square(x: int) -> IdU:
    return IdU(x * x)
