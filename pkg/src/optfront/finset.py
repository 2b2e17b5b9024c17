"""Finite sets as plain sequences, plus single-objective minimization.

A finite set is represented by any Python sequence.  Order and multiplicity
are deliberately ignored by the set operations below: two sequences are
set-equal when each is a subset of the other, and no deduplication happens on
construction.  Elements only need a working ``==``.

The module also houses the generic relation-property helpers (anti-reflexive,
transitive, total, indifferent) used by the dominance test suites.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Optional, Sequence


class EmptySetError(ValueError):
    """Raised when an operation that needs at least one element gets none."""


# ---------------------------------------------------------------------------
# Set operations (multiplicity- and order-blind)
# ---------------------------------------------------------------------------

def contains(xs: Sequence, x) -> bool:
    return any(x == y for y in xs)


def is_subset(xs: Sequence, ys: Sequence) -> bool:
    return all(contains(ys, x) for x in xs)


def set_equal(xs: Sequence, ys: Sequence) -> bool:
    return is_subset(xs, ys) and is_subset(ys, xs)


def set_diff(xs: Sequence, ys: Sequence) -> list:
    """Elements of ``xs`` that do not occur in ``ys``."""
    return [x for x in xs if not contains(ys, x)]


def is_singleton_set(xs: Sequence) -> bool:
    """True when ``xs`` holds exactly one value (duplicates allowed)."""
    if not xs:
        return False
    first = xs[0]
    return all(x == first for x in xs)


# ---------------------------------------------------------------------------
# Minimization over a finite set
# ---------------------------------------------------------------------------

def minimum(f: Callable, xs: Sequence):
    """Least objective value attained by ``f`` on the nonempty set ``xs``."""
    if not xs:
        raise EmptySetError("minimum of an empty set")
    return min(f(x) for x in xs)


def argmin(f: Callable, xs: Sequence) -> list:
    """All elements of ``xs`` at which ``f`` attains its minimum.

    The result is a subset of ``xs``; an element belongs to it exactly when
    its objective value equals ``minimum(f, xs)``.
    """
    if not xs:
        raise EmptySetError("argmin of an empty set")
    vals = [f(x) for x in xs]
    m = min(vals)
    return [x for x, v in zip(xs, vals) if v == m]


def for_all(xs: Iterable, p: Callable[[Any], bool]) -> bool:
    """Universal quantifier over a finite set; vacuously true when empty."""
    return all(p(x) for x in xs)


# The three defining clauses of minimum/argmin, as executable properties.
# Each takes an objective and a set and returns a verdict; the check drivers
# supply randomly generated sets.

def prop_min_lower_bound(f, xs) -> bool:
    if not xs:
        return True
    m = minimum(f, xs)
    return for_all(xs, lambda a: m <= f(a))


def prop_argmin_sound(f, xs) -> bool:
    if not xs:
        return True
    m = minimum(f, xs)
    am = argmin(f, xs)
    return for_all(xs, lambda a: not contains(am, a) or f(a) == m)


def prop_argmin_complete(f, xs) -> bool:
    if not xs:
        return True
    m = minimum(f, xs)
    am = argmin(f, xs)
    return for_all(xs, lambda a: f(a) != m or contains(am, a))


# ---------------------------------------------------------------------------
# Relation properties
# ---------------------------------------------------------------------------
#
# A relation is any callable rel(x, y) -> bool.  The helpers below turn a
# relation into pointwise properties; the property-check drivers feed them
# randomly generated tuples.  Properties built from an implication return
# None when the antecedent fails so the drivers can track vacuity.

def anti_reflexive(rel) -> Callable:
    def prop(x):
        return not rel(x, x)

    return prop


def transitive(rel) -> Callable:
    def prop(case):
        x, y, z = case
        if rel(x, y) and rel(y, z):
            return rel(x, z)
        return None

    return prop


def total(rel) -> Callable:
    def prop(case):
        x, y = case
        return x == y or rel(x, y) or rel(y, x)

    return prop


def indifference(rel) -> Callable:
    """The relation holding when neither argument is related to the other."""

    def ind(x, y):
        return not rel(x, y) and not rel(y, x)

    return ind


def is_indiff(rel, xs: Sequence) -> bool:
    """True when no two distinct elements of ``xs`` are related either way."""
    ind = indifference(rel)
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] != xs[j] and not ind(xs[i], xs[j]):
                return False
    return True


class RelationProperty(enum.Enum):
    ANTI_REFLEXIVE = "anti-reflexive"
    TRANSITIVE = "transitive"
    TOTAL = "total"
    INDIFFERENT = "indifferent"


@dataclass(frozen=True)
class RelationVerdict:
    """Outcome of evaluating one relation property over supplied cases.

    ``witness`` is present exactly when ``holds`` is false.
    """

    prop: RelationProperty
    holds: bool
    witness: Optional[tuple] = None


def classify_relation(prop: RelationProperty, rel, cases: Iterable) -> RelationVerdict:
    """Evaluate ``prop`` of ``rel`` pointwise on ``cases``.

    Cases are single values for ANTI_REFLEXIVE, pairs for TOTAL, triples for
    TRANSITIVE and finite sets for INDIFFERENT.  The first failing case is
    reported as the witness.
    """
    if prop is RelationProperty.ANTI_REFLEXIVE:
        test = anti_reflexive(rel)
    elif prop is RelationProperty.TRANSITIVE:
        test = transitive(rel)
    elif prop is RelationProperty.TOTAL:
        test = total(rel)
    else:
        test = lambda xs: is_indiff(rel, xs)  # noqa: E731

    for case in cases:
        verdict = test(case)
        if verdict is False:
            witness = case if isinstance(case, tuple) else (case,)
            return RelationVerdict(prop, False, witness)
    return RelationVerdict(prop, True)
