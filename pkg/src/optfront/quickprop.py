"""Deterministic, seedable property-check engine and case generators.

The driver contract is intentionally small: a *generator* is a callable
``gen(rng) -> case`` and a *property* is a callable ``prop(case)`` returning
``True``, ``False`` or ``None`` (``None`` marks a vacuous case whose
antecedent failed; these are counted as discards).  ``check`` runs ``n``
cases and stops at the first counterexample; ``falsify`` drives the same
loop when a counterexample is the desired outcome.

Randomness comes from :class:`random.Random` seeded with a 64-bit integer:
identical seeds produce identical case streams, so every reported witness is
reproducible from (seed, case index).  Benchmark figures quoted elsewhere are
therefore matched by tolerance rather than bit-exactness; the generator
algorithm is fixed but not shared with any other ecosystem.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

Rng = random.Random

# Runs whose antecedent held in fewer than this fraction of cases are flagged
# as discarded instead of silently passing.
MIN_USEFUL_FRACTION = 0.01


def rng_from_seed(seed: int) -> Rng:
    return random.Random(seed & 0xFFFFFFFFFFFFFFFF)


class Outcome(enum.Enum):
    PASSED = "passed"
    FALSIFIED = "falsified"
    DISCARDED = "discarded"


@dataclass(frozen=True)
class CheckResult:
    """Verdict of one property run.

    ``failed_at`` and ``witness`` are set exactly for falsified runs; the
    witness can be re-derived by re-running the same property with the stored
    seed.  ``discards`` counts vacuous cases.
    """

    outcome: Outcome
    cases: int
    discards: int = 0
    failed_at: Optional[int] = None
    witness: Optional[str] = None
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.outcome is Outcome.PASSED

    @property
    def found_counterexample(self) -> bool:
        return self.outcome is Outcome.FALSIFIED

    def summary(self) -> str:
        if self.outcome is Outcome.PASSED:
            return f"+++ OK, passed {self.cases} tests"
        if self.outcome is Outcome.FALSIFIED:
            return f"*** Failed, Falsified (after {self.failed_at} tests)"
        kept = self.cases - self.discards
        return f"*** Discarded, only {kept} of {self.cases} cases were non-vacuous"


def check(n: int, gen: Callable, prop: Callable, rng: Rng, seed: Optional[int] = None) -> CheckResult:
    """Run ``prop`` on ``n`` generated cases; stop at the first failure."""
    discards = 0
    for i in range(1, n + 1):
        case = gen(rng)
        verdict = prop(case)
        if verdict is None:
            discards += 1
        elif not verdict:
            return CheckResult(
                Outcome.FALSIFIED,
                cases=n,
                discards=discards,
                failed_at=i,
                witness=repr(case),
                seed=seed,
            )
    if n > 0 and (n - discards) < n * MIN_USEFUL_FRACTION:
        return CheckResult(Outcome.DISCARDED, cases=n, discards=discards, seed=seed)
    return CheckResult(Outcome.PASSED, cases=n, discards=discards, seed=seed)


def falsify(n: int, gen: Callable, prop: Callable, rng: Rng, seed: Optional[int] = None) -> CheckResult:
    """Look for a counterexample to ``prop`` within ``n`` cases.

    The run is the same as :func:`check`; callers that expect a refutation
    treat ``found_counterexample`` as success.
    """
    return check(n, gen, prop, rng, seed=seed)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_int(lo: int, hi: int) -> Callable:
    span = hi - lo + 1

    def g(rng: Rng) -> int:
        return lo + int(rng.random() * span)

    return g


def gen_dyadic(lo: int, hi: int, denom: int = 4) -> Callable:
    """Rationals k/denom in [lo, hi]; sums and differences stay exact."""
    base = gen_int(lo * denom, hi * denom)

    def g(rng: Rng) -> float:
        return base(rng) / denom

    return g


def gen_tuple(*gens: Callable) -> Callable:
    def g(rng: Rng) -> tuple:
        return tuple(gen(rng) for gen in gens)

    return g


def gen_pair(g1: Callable, g2: Callable) -> Callable:
    return gen_tuple(g1, g2)


def gen_vec(dim: int, elem: Callable) -> Callable:
    def g(rng: Rng) -> tuple:
        return tuple(elem(rng) for _ in range(dim))

    return g


def gen_finset(elem: Callable, min_size: int, max_size: int) -> Callable:
    span = max_size - min_size + 1

    def g(rng: Rng) -> list:
        k = min_size + int(rng.random() * span)
        return [elem(rng) for _ in range(k)]

    return g


def gen_nonempty_finset(elem: Callable, max_size: int) -> Callable:
    return gen_finset(elem, 1, max_size)


def gen_seq(elem: Callable, min_len: int, max_len: int) -> Callable:
    """Sequence-shaped uncertain values; alias of :func:`gen_finset`."""
    return gen_finset(elem, min_len, max_len)


def gen_choice(options: Sequence) -> Callable:
    n = len(options)

    def g(rng: Rng):
        return options[int(rng.random() * n)]

    return g


def gen_map(f: Callable, gen: Callable) -> Callable:
    def g(rng: Rng):
        return f(gen(rng))

    return g


def gen_simple_prob(value: Callable, min_size: int, max_size: int) -> Callable:
    """Value/probability pairs with normalized, strictly positive weights."""
    from .uncertain import SimpleProb

    span = max_size - min_size + 1

    def g(rng: Rng) -> SimpleProb:
        k = min_size + int(rng.random() * span)
        raw = [0.05 + rng.random() for _ in range(k)]
        total = sum(raw)
        return SimpleProb(tuple((value(rng), w / total) for w in raw))

    return g


def gen_interval(scalar: Callable) -> Callable:
    """Intervals with ordered endpoints drawn from ``scalar``."""
    from .uncertain import Interval

    def g(rng: Rng):
        a = scalar(rng)
        b = scalar(rng)
        if b < a:
            a, b = b, a
        return Interval(a, b)

    return g


def gen_hist_pdf(scalar: Callable, min_bins: int, max_bins: int) -> Callable:
    """Histogram densities over a generated support with normalized weights."""
    from .uncertain import HistPDF

    support = gen_interval(scalar)
    span = max_bins - min_bins + 1

    def g(rng: Rng):
        k = min_bins + int(rng.random() * span)
        raw = [0.05 + rng.random() for _ in range(k)]
        total = sum(raw)
        return HistPDF(support(rng), tuple(w / total for w in raw))

    return g


@dataclass(frozen=True)
class NamedFn:
    """A total function with a stable display name."""

    name: str
    fn: Callable

    def __call__(self, x):
        return self.fn(x)

    def __repr__(self) -> str:  # keeps witnesses readable
        return f"<fn {self.name}>"


def gen_table_fun(lo: int, hi: int, codomain: Callable, rng: Rng, name: str = "table") -> NamedFn:
    """A total integer function backed by a random value table on [lo, hi].

    Arguments outside the table range are clamped, keeping the function
    total for any generated input.
    """
    table = {k: codomain(rng) for k in range(lo, hi + 1)}

    def fn(x: int):
        return table[min(max(x, lo), hi)]

    return NamedFn(name, fn)
