"""Containers of possible outcomes and the orders used to compare them.

Five carriers of uncertain values share one interface:

* plain sequences (lists or tuples) of outcomes,
* :class:`IdU`, a single certain value,
* :class:`SimpleProb`, a finite value/probability distribution,
* :class:`Interval`, all values between two ordered endpoints,
* :class:`HistPDF`, an equal-width histogram density over a support interval.

Three comparisons are defined on each: ``same_shape`` (equality after erasing
outcome values), ``pointwise_le`` (same shape and componentwise <=) and
``strict_dom`` (every outcome on the left strictly below every outcome on the
right).  ``strict_dom`` is anti-reflexive, transitive and far from total: one
point of overlap makes two values incomparable.  Intervals compare through
their endpoint pairs and histograms inherit the comparison of their supports,
so bin weights never influence dominance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence, Tuple, Union

PROB_TOL = 1e-9


class ValidityError(ValueError):
    """Raised when a structured uncertain value breaks its invariants."""


class ShapeError(ValueError):
    """Raised when two uncertain values of incompatible shape are combined."""


@dataclass(frozen=True)
class IdU:
    """A certain value wrapped as a degenerate uncertain one."""

    value: Any


@dataclass(frozen=True)
class Interval:
    """All values between ``start`` and ``end`` are considered possible."""

    start: Any
    end: Any


@dataclass(frozen=True)
class SimpleProb:
    """Finite distribution as value/probability pairs.

    Validity (checked by :func:`is_valid`) requires nonempty pairs,
    nonnegative probabilities and a total mass of one; zero-probability
    entries still count as possible outcomes.
    """

    pairs: Tuple[Tuple[Any, float], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((v, float(p)) for v, p in self.pairs))

    @property
    def values(self) -> tuple:
        return tuple(v for v, _ in self.pairs)

    @property
    def probs(self) -> tuple:
        return tuple(p for _, p in self.pairs)


@dataclass(frozen=True)
class HistPDF:
    """Histogram density: ``weights[i]`` sits on the i-th of equally wide bins
    partitioning ``support``."""

    support: Interval
    weights: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))

    def bin_midpoints(self) -> list:
        n = len(self.weights)
        width = (self.support.end - self.support.start) / n
        return [self.support.start + (i + 0.5) * width for i in range(n)]


Uncertain = Union[list, tuple, IdU, SimpleProb, Interval, HistPDF]

_SEQ = (list, tuple)


def _kind(u) -> str:
    if isinstance(u, _SEQ):
        return "seq"
    if isinstance(u, (IdU, SimpleProb, Interval, HistPDF)):
        return type(u).__name__
    raise TypeError(f"not an uncertain value: {u!r}")


# ---------------------------------------------------------------------------
# Validity
# ---------------------------------------------------------------------------

def is_valid(u) -> bool:
    """Structural validity; sequences and IdU are always valid."""
    if isinstance(u, SimpleProb):
        return (
            len(u.pairs) > 0
            and all(p >= 0.0 for p in u.probs)
            and abs(sum(u.probs) - 1.0) <= PROB_TOL
        )
    if isinstance(u, Interval):
        return u.start <= u.end
    if isinstance(u, HistPDF):
        return (
            is_valid(u.support)
            and len(u.weights) > 0
            and all(w >= 0.0 for w in u.weights)
            and abs(sum(u.weights) - 1.0) <= PROB_TOL
        )
    _kind(u)
    return True


def validate(u) -> None:
    if not is_valid(u):
        raise ValidityError(f"invalid uncertain value: {u!r}")


# ---------------------------------------------------------------------------
# Structure-generic plumbing
# ---------------------------------------------------------------------------

def fmap(g: Callable, u):
    """Map ``g`` over the outcome values, preserving the structure.

    Probabilities and histogram weights are carried along untouched.
    """
    if isinstance(u, list):
        return [g(v) for v in u]
    if isinstance(u, tuple):
        return tuple(g(v) for v in u)
    if isinstance(u, IdU):
        return IdU(g(u.value))
    if isinstance(u, SimpleProb):
        return SimpleProb(tuple((g(v), p) for v, p in u.pairs))
    if isinstance(u, Interval):
        return Interval(g(u.start), g(u.end))
    if isinstance(u, HistPDF):
        return HistPDF(fmap(g, u.support), u.weights)
    raise TypeError(f"not an uncertain value: {u!r}")


def support(u) -> list:
    """The outcomes compared by universal strict dominance.

    Intervals contribute their endpoint pair and histograms the endpoints of
    their support, so weights play no role here.
    """
    if isinstance(u, _SEQ):
        return list(u)
    if isinstance(u, IdU):
        return [u.value]
    if isinstance(u, SimpleProb):
        return [v for v, _ in u.pairs]
    if isinstance(u, Interval):
        return [u.start, u.end]
    if isinstance(u, HistPDF):
        return [u.support.start, u.support.end]
    raise TypeError(f"not an uncertain value: {u!r}")


def shape(u):
    """The part of a value that survives erasing its outcomes.

    Sequence shape is length, distribution shape keeps the probability
    vector, interval shape is trivial and histogram shape is the bin count.
    """
    if isinstance(u, _SEQ):
        return len(u)
    if isinstance(u, IdU):
        return ()
    if isinstance(u, SimpleProb):
        return u.probs
    if isinstance(u, Interval):
        return ()
    if isinstance(u, HistPDF):
        return len(u.weights)
    raise TypeError(f"not an uncertain value: {u!r}")


def same_shape(u1, u2) -> bool:
    try:
        k1, k2 = _kind(u1), _kind(u2)
    except TypeError:
        return False
    return k1 == k2 and shape(u1) == shape(u2)


def _pointwise_elems(u) -> list:
    if isinstance(u, _SEQ):
        return list(u)
    if isinstance(u, IdU):
        return [u.value]
    if isinstance(u, SimpleProb):
        return list(u.values)
    if isinstance(u, Interval):
        return [u.start, u.end]
    if isinstance(u, HistPDF):
        return [u.support.start, u.support.end]
    raise TypeError(f"not an uncertain value: {u!r}")


def pointwise_le(u1, u2) -> bool:
    """Same shape with componentwise <= outcomes; false on shape mismatch."""
    if not same_shape(u1, u2):
        return False
    return all(a <= b for a, b in zip(_pointwise_elems(u1), _pointwise_elems(u2)))


def strict_dom(u1, u2) -> bool:
    """Universally strictly better: every outcome of ``u1`` is below every
    outcome of ``u2``."""
    if _kind(u1) != _kind(u2):
        raise ShapeError(f"cannot compare {type(u1).__name__} with {type(u2).__name__}")
    validate(u1)
    validate(u2)
    right = support(u2)
    return all(x < y for x in support(u1) for y in right)


def not_strictly_dominated(u1, u2) -> bool:
    """``u1`` is acceptable next to ``u2``: the flipped dominance fails."""
    return not strict_dom(u2, u1)


# ---------------------------------------------------------------------------
# Generic derivations: membership and quantifiers from fmap plus equality
# ---------------------------------------------------------------------------
# For any structure with decidable equality, erasing values with a constant
# map gives shapes, and comparing a mapped structure against a constant map
# yields membership and the canonical quantifiers.  No pattern matching on
# the carrier is needed.

def generic_shape(u):
    return fmap(lambda _: (), u)


def generic_elem(a, u) -> bool:
    return fmap(lambda x: x == a, u) != fmap(lambda _: False, u)


def generic_all(u) -> bool:
    return u == fmap(lambda _: True, u)


def generic_any(u) -> bool:
    return u != fmap(lambda _: False, u)


def zip_u(u1, u2):
    """Pair up two same-shaped structures into one structure of pairs."""
    if not same_shape(u1, u2):
        raise ShapeError(f"shape mismatch: {u1!r} vs {u2!r}")
    if isinstance(u1, list):
        return [(a, b) for a, b in zip(u1, u2)]
    if isinstance(u1, tuple):
        return tuple(zip(u1, u2))
    if isinstance(u1, IdU):
        return IdU((u1.value, u2.value))
    if isinstance(u1, SimpleProb):
        return SimpleProb(tuple(((a, b), p) for (a, p), (b, _) in zip(u1.pairs, u2.pairs)))
    if isinstance(u1, Interval):
        return Interval((u1.start, u2.start), (u1.end, u2.end))
    if isinstance(u1, HistPDF):
        return HistPDF(zip_u(u1.support, u2.support), u1.weights)
    raise TypeError(f"not an uncertain value: {u1!r}")
