"""Strict dominance on fixed-length vectors and incremental Pareto fronts.

Vectors are plain tuples of ordered scalars; two vectors may only be compared
when they have the same length.  ``dominates(x, y)`` holds when ``x`` is
componentwise less-or-equal to ``y`` and strictly less in at least one
component, which makes it an anti-reflexive, transitive, non-total relation.

The Pareto front of a finite set is computed as a fold of ``bump``, which
inserts one point into a mutually indifferent front while preserving three
properties: the result is a subset of the point plus the old front,
indifference is preserved, and everything the old front dominated stays
dominated.
"""

from __future__ import annotations

from typing import Callable, Sequence, Tuple

from .finset import argmin, contains, is_indiff, is_subset, minimum, set_diff

Vec = Tuple


class DimensionError(ValueError):
    """Raised when two vectors of different lengths are compared."""


def compare_components(quantifier, op, xs: Vec, ys: Vec) -> bool:
    """Apply ``quantifier`` (``all`` or ``any``) to the componentwise ``op``."""
    if len(xs) != len(ys):
        raise DimensionError(f"vectors of length {len(xs)} and {len(ys)}")
    return quantifier(op(a, b) for a, b in zip(xs, ys))


def dominates(x: Vec, y: Vec) -> bool:
    """Componentwise <= with strict < somewhere; the "better than" relation."""
    if len(x) != len(y):
        raise DimensionError(f"vectors of length {len(x)} and {len(y)}")
    strict = False
    for a, b in zip(x, y):
        if a > b:
            return False
        if a < b:
            strict = True
    return strict


def set_dominates_elem(xs: Sequence[Vec], y: Vec) -> bool:
    """True when some member of ``xs`` dominates ``y``."""
    return any(dominates(x, y) for x in xs)


def set_dominates_set(xs: Sequence[Vec], ys: Sequence[Vec]) -> bool:
    """True when every member of ``ys`` is dominated by some member of ``xs``."""
    return all(set_dominates_elem(xs, y) for y in ys)


def is_antichain(xs: Sequence[Vec]) -> bool:
    return is_indiff(dominates, xs)


def is_pareto_front_of(pxs: Sequence[Vec], xs: Sequence[Vec]) -> bool:
    """Subset + mutual indifference + domination of everything left out."""
    return (
        is_subset(pxs, xs)
        and is_antichain(pxs)
        and set_dominates_set(pxs, set_diff(xs, pxs))
    )


def bump(x: Vec, front: Sequence[Vec]) -> list:
    """Insert ``x`` into a mutually indifferent ``front``.

    Walks the front once: a member equal to or dominating ``x`` means the
    front already covers it; if ``x`` dominates a member, ``x`` replaces it
    and sweeps the remaining dominated members out; members indifferent to
    ``x`` are kept and the walk continues.
    """
    for i, p in enumerate(front):
        if p == x or dominates(p, x):
            return list(front)
        if dominates(x, p):
            return list(front[:i]) + [x] + [q for q in front[i + 1 :] if not dominates(x, q)]
    return list(front) + [x]


def pareto_front(xs: Sequence[Vec]) -> list:
    """The Pareto-optimal subset of ``xs``: its dominance-minimal elements."""
    front: list = []
    for x in xs:
        front = bump(x, front)
    return front


def merge_fronts(a: Sequence[Vec], b: Sequence[Vec]) -> list:
    """Merge two mutually indifferent fronts into the front of their union."""
    big, small = (a, b) if len(a) >= len(b) else (b, a)
    out = list(big)
    for x in small:
        out = bump(x, out)
    return out


def pareto_min(fs: Callable, xs: Sequence) -> list:
    """Pareto front of the image of ``xs`` under the vector objective ``fs``."""
    return pareto_front([fs(x) for x in xs])


def argpareto_min(fs: Callable, xs: Sequence) -> list:
    """All elements of ``xs`` whose image lies on the Pareto front."""
    front = pareto_min(fs, xs)
    return [a for a in xs if contains(front, fs(a))]


# ---------------------------------------------------------------------------
# Executable properties
# ---------------------------------------------------------------------------
# Property functions return True/False, or None when a built-in antecedent
# fails (so the check drivers can track vacuous cases).


def prop_bump_subset(x, xs) -> bool:
    return is_subset(bump(x, xs), [x] + list(xs))


def prop_bump_keeps_indifference(x, xs):
    if not is_antichain(xs):
        return None
    return is_antichain(bump(x, xs))


def prop_bump_keeps_domination(x, xs, ys):
    if not set_dominates_set(xs, ys):
        return None
    return set_dominates_set(bump(x, xs), ys)


def prop_front_is_pareto(xs) -> bool:
    return is_pareto_front_of(pareto_front(xs), xs)


def prop_merge_law(xs, ys) -> bool:
    merged = merge_fronts(pareto_front(xs), pareto_front(ys))
    from .finset import set_equal

    return set_equal(pareto_front(list(xs) + list(ys)), merged)


def prop_front_of_image(fs, xs) -> bool:
    return is_pareto_front_of(pareto_min(fs, xs), [fs(x) for x in xs])


def prop_argfront_sound(fs, xs) -> bool:
    front = pareto_min(fs, xs)
    chosen = argpareto_min(fs, xs)
    return all(not contains(chosen, a) or contains(front, fs(a)) for a in xs)


def prop_argfront_complete(fs, xs) -> bool:
    front = pareto_min(fs, xs)
    chosen = argpareto_min(fs, xs)
    return all(not contains(front, fs(a)) or contains(chosen, a) for a in xs)


def as_vector_objective(components: Sequence[Callable]) -> Callable:
    """Bundle scalar objectives into one tuple-valued objective."""

    def fs(a):
        return tuple(f(a) for f in components)

    return fs


def prop_single_front_is_min(f, xs):
    """With one objective the front is the singleton of its minimum."""
    if not xs:
        return None
    from .finset import set_equal

    front = pareto_min(lambda a: (f(a),), xs)
    return set_equal(front, [(minimum(f, xs),)])


def prop_single_argfront_is_argmin(f, xs):
    if not xs:
        return None
    from .finset import set_equal

    return set_equal(argpareto_min(lambda a: (f(a),), xs), argmin(f, xs))


def prop_component_min_attained(components, xs):
    """Every component objective attains its minimum somewhere on the front."""
    if not xs:
        return None
    chosen = argpareto_min(as_vector_objective(components), xs)
    return all(
        contains([f(a) for a in chosen], minimum(f, xs)) for f in components
    )


def prop_component_argmin_subset(components, xs):
    """Componentwise argmin refines the multi-objective argmin.

    A tempting strengthening of the attainment property; it is falsifiable,
    e.g. when one component is constant on the inputs.
    """
    if not xs:
        return None
    fs = as_vector_objective(components)
    wide = argpareto_min(fs, xs)
    return all(
        is_subset(argpareto_min(lambda a, f=f: (f(a),), xs), wide)
        for f in components
    )
