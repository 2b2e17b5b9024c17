"""Minimization over finite sets under partial orders and uncertain values.

The package provides:

* plain min/argmin over finite sets with their defining properties
  (:mod:`optfront.finset`);
* strict dominance on vectors, incremental Pareto fronts and the
  multi-objective min/argmin pair (:mod:`optfront.pareto`);
* uncertain-value carriers with shape, pointwise and dominance orders
  (:mod:`optfront.uncertain`), measure functions and their monotonicity
  checks (:mod:`optfront.measures`), and measure-based minimization with its
  soundness properties (:mod:`optfront.minu`);
* a deterministic property-check engine (:mod:`optfront.quickprop`) and the
  named suites wiring everything together (:mod:`optfront.suites`);
* a two-objective benchmark with sampling and seed-and-grow drivers
  (:mod:`optfront.benchmark`) exposed through the ``optfront`` CLI.
"""

from .finset import EmptySetError, argmin, for_all, minimum
from .pareto import (
    DimensionError,
    argpareto_min,
    bump,
    dominates,
    merge_fronts,
    pareto_front,
    pareto_min,
)
from .minu import argmin_uncertain, min_uncertain
from .uncertain import (
    HistPDF,
    IdU,
    Interval,
    ShapeError,
    SimpleProb,
    ValidityError,
)

__version__ = "0.1.0"

__all__ = [
    "EmptySetError",
    "DimensionError",
    "ShapeError",
    "ValidityError",
    "minimum",
    "argmin",
    "for_all",
    "dominates",
    "bump",
    "pareto_front",
    "merge_fronts",
    "pareto_min",
    "argpareto_min",
    "min_uncertain",
    "argmin_uncertain",
    "IdU",
    "Interval",
    "SimpleProb",
    "HistPDF",
    "__version__",
]
