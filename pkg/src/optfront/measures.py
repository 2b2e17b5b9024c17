"""Measure functions over uncertain values and their monotonicity checks.

A measure maps an uncertain value to a totally ordered scalar so that
uncertain outcomes can be ranked.  Two executable conditions separate the
useful measures from the misleading ones:

* condition M1 (pointwise): raising outcome values never lowers the measure;
* condition M2 (dominance): when one value is universally strictly better
  than another, its measure must be strictly smaller.

M2 is the soundness condition for measure-based minimization; M1 alone is
satisfied by constant or purely structural measures that can steer a
minimizer towards dominated options.  The checks construct comparison
partners directly: the M2 partner shifts all outcomes up by one more than
the spread of the support, which guarantees strict dominance, while the M1
partner raises outcomes without reordering the structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict

from .finset import EmptySetError
from .quickprop import CheckResult, Rng, check
from .uncertain import (
    HistPDF,
    IdU,
    Interval,
    SimpleProb,
    fmap,
    is_valid,
    pointwise_le,
    strict_dom,
    support,
    validate,
)


@dataclass(frozen=True)
class Measure:
    """A named total function from an uncertain value to an ordered scalar."""

    name: str
    fn: Callable

    def __call__(self, u):
        return self.fn(u)

    def __repr__(self) -> str:
        return f"<measure {self.name}>"


def _nonempty(u):
    if len(u) == 0:
        raise EmptySetError("aggregate of an empty sequence")
    return u


# -- sequences --------------------------------------------------------------

seq_sum = Measure("sum", lambda u: sum(_nonempty(u)))
seq_average = Measure("average", lambda u: sum(_nonempty(u)) / len(u))
seq_head = Measure("head", lambda u: _nonempty(u)[0])
seq_best = Measure("best", lambda u: min(_nonempty(u)))
seq_worst = Measure("worst", lambda u: max(_nonempty(u)))
seq_length = Measure("length", len)


def const(c) -> Measure:
    """The measure ignoring its argument entirely."""
    return Measure(f"const-{c}", lambda _u: c)


# -- simple probability -----------------------------------------------------

def _sp(u: SimpleProb) -> SimpleProb:
    validate(u)
    return u


def _sp_expected(u: SimpleProb):
    return sum(v * p for v, p in _sp(u).pairs)


def _sp_mode(u: SimpleProb):
    # Mass of equal values accumulates; ties go to the value seen first.
    order = []
    mass: Dict = {}
    for v, p in _sp(u).pairs:
        if v not in mass:
            order.append(v)
            mass[v] = 0.0
        mass[v] += p
    top = max(mass[v] for v in order)
    for v in order:
        if mass[v] == top:
            return v


sp_expected = Measure("expected-value", _sp_expected)
sp_best = Measure("best", lambda u: min(_sp(u).values))
sp_worst = Measure("worst", lambda u: max(_sp(u).values))
sp_most_likely = Measure("most-likely", _sp_mode)


# -- intervals ---------------------------------------------------------------

def _iv(u: Interval) -> Interval:
    validate(u)
    return u


iv_sum = Measure("sum", lambda u: _iv(u).start + u.end)
iv_average = Measure("average", lambda u: (_iv(u).start + u.end) / 2)
iv_best = Measure("best", lambda u: _iv(u).start)
iv_worst = Measure("worst", lambda u: _iv(u).end)
iv_width = Measure("width", lambda u: _iv(u).end - u.start)


# -- histogram densities ------------------------------------------------------

def _pdf_expected(u: HistPDF):
    validate(u)
    return sum(m * w for m, w in zip(u.bin_midpoints(), u.weights))


def _pdf_most_likely(u: HistPDF):
    validate(u)
    top = max(u.weights)
    idx = u.weights.index(top)
    return u.bin_midpoints()[idx]


pdf_expected = Measure("expected-value", _pdf_expected)
pdf_most_likely = Measure("most-likely", _pdf_most_likely)


# -- identity -----------------------------------------------------------------

unwrap = Measure("unwrap", lambda u: u.value)


SEQ_MEASURES = (seq_sum, seq_average, seq_head, seq_best, seq_worst, seq_length)
SP_MEASURES = (sp_expected, sp_best, sp_worst, sp_most_likely)
INTERVAL_MEASURES = (iv_sum, iv_average, iv_best, iv_worst, iv_width)
PDF_MEASURES = (pdf_expected, pdf_most_likely)


# ---------------------------------------------------------------------------
# Monotonicity checks
# ---------------------------------------------------------------------------

def raised_partner(u, rng: Rng):
    """A pointwise-greater partner with the same shape.

    Most carriers are shifted by one.  Distributions get independent
    nonnegative increments per value: a uniform shift can never change which
    outcomes coincide, so it would miss measures that are sensitive to the
    merging of equal values (the mode being the prime example).
    """
    if isinstance(u, SimpleProb):
        return SimpleProb(tuple((v + int(rng.random() * 4), p) for v, p in u.pairs))
    return fmap(lambda v: v + 1, u)


def shifted_partner(u):
    """A partner strictly dominating ``u`` from above: every outcome moves up
    by one more than the spread of the support."""
    sup = support(u)
    if not sup:
        return None
    shift = 1 + (max(sup) - min(sup))
    return fmap(lambda v: v + shift, u)


def check_pointwise_monotone(gen: Callable, measure: Measure, n: int, rng: Rng) -> CheckResult:
    """Condition M1: raising outcomes must not lower the measure."""

    def pair(r: Rng):
        u1 = gen(r)
        return u1, raised_partner(u1, r)

    def prop(case):
        u1, u2 = case
        if not (is_valid(u1) and is_valid(u2) and pointwise_le(u1, u2)):
            return None
        return measure(u1) <= measure(u2)

    return check(n, pair, prop, rng)


def check_dominance_monotone(gen: Callable, measure: Measure, n: int, rng: Rng) -> CheckResult:
    """Condition M2: universal strict dominance must strictly lower the measure."""

    def pair(r: Rng):
        u1 = gen(r)
        return u1, shifted_partner(u1)

    def prop(case):
        u1, u2 = case
        if u2 is None or not (is_valid(u1) and is_valid(u2)):
            return None
        if not strict_dom(u1, u2):
            return None
        return measure(u1) < measure(u2)

    return check(n, pair, prop, rng)
