"""Two-objective benchmark: sampling, labeling and a seed-and-grow search.

The benchmark minimizes two objectives over a rectangle of controls.  The
first objective has a single sharp global minimum of 4.2 at (pi, pi); the
second has four local minima of value 0, one per quadrant, at exactly (3, 2)
and approximately (-3.779, -3.283), (-2.805, 3.131) and (3.584, -1.848).
A control is *safe* when its second objective does not exceed a threshold
(0.15 by default, inclusive).

Two drivers approximate the Pareto-optimal controls:

* :func:`run_sampling` evaluates a large uniform random sample and labels it;
* :func:`run_evolution` starts from a coarse grid and grows a front state one
  control at a time, preserving the invariant that the tracked optimal set
  equals the Pareto-optimal subset of every control evaluated so far.

Large samples use a sort-and-sweep front computation (:func:`front_mask`)
that is set-equivalent to the incremental fold from :mod:`optfront.pareto`;
the equivalence is enforced by the test suites.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .quickprop import Rng

SAFETY_THRESHOLD = 0.15

# Local minima of the second objective, one per quadrant; only (3, 2) is exact.
SECOND_OBJECTIVE_MINIMA = (
    (3.0, 2.0),
    (-3.779, -3.283),
    (-2.805, 3.131),
    (3.584, -1.848),
)


def f1(x, y):
    """Inverted bump: global minimum 4.2 at (pi, pi), close to 5.2 elsewhere."""
    return 5.2 - np.cos(x) * np.cos(y) * np.exp(-((x - np.pi) ** 2 + (y - np.pi) ** 2))


def f2(x, y):
    """Scaled four-well polynomial with minima of 0 in every quadrant."""
    return ((x * x + y - 11.0) ** 2 + (x + y * y - 7.0) ** 2) / 100.0


def objective_pair(control: Tuple[float, float]) -> Tuple[float, float]:
    x, y = control
    return float(f1(x, y)), float(f2(x, y))


@dataclass(frozen=True)
class Rect2:
    """Axis-aligned rectangle given as per-axis (lo, hi) ranges."""

    x: Tuple[float, float]
    y: Tuple[float, float]

    def __post_init__(self):
        if self.x[0] > self.x[1] or self.y[0] > self.y[1]:
            raise ValueError(f"empty rectangle: {self}")

    @property
    def widths(self) -> Tuple[float, float]:
        return self.x[1] - self.x[0], self.y[1] - self.y[0]

    def clamp(self, x: float, y: float) -> Tuple[float, float]:
        return (
            min(max(x, self.x[0]), self.x[1]),
            min(max(y, self.y[0]), self.y[1]),
        )


DEFAULT_RECT = Rect2((-5.0, 5.0), (-5.0, 5.0))


@dataclass(frozen=True)
class LabeledPoint:
    control: Tuple[float, float]
    objectives: Tuple[float, float]
    safe: bool
    pareto: bool


@dataclass(frozen=True)
class BenchConfig:
    seed: int = 137
    rect: Rect2 = DEFAULT_RECT
    threshold: float = SAFETY_THRESHOLD
    sample_size: int = 250_000
    grid_side: int = 50
    iterations: int = 22_500
    explore_prob: float = 0.2
    mutation_scale: float = 0.02
    invariant_check_every: int = 0  # 0: verify only at termination

    def __post_init__(self):
        if self.sample_size < 0 or self.grid_side < 0 or self.iterations < 0:
            raise ValueError("counts must be nonnegative")
        if not (0.0 <= self.explore_prob <= 1.0):
            raise ValueError("explore_prob must lie in [0, 1]")


def random_grid_2d(n: int, rect: Rect2, rng: Rng) -> np.ndarray:
    """``n`` points drawn uniformly over ``rect``; deterministic per seed."""
    raw = np.fromiter((rng.random() for _ in range(2 * n)), dtype=float, count=2 * n)
    pts = raw.reshape(n, 2) if n else np.empty((0, 2))
    (xlo, xhi), (ylo, yhi) = rect.x, rect.y
    pts[:, 0] = xlo + pts[:, 0] * (xhi - xlo)
    pts[:, 1] = ylo + pts[:, 1] * (yhi - ylo)
    return pts


def regular_grid_2d(side: int, rect: Rect2) -> np.ndarray:
    """``side`` x ``side`` cell-center grid over ``rect``."""
    if side == 0:
        return np.empty((0, 2))
    (xlo, xhi), (ylo, yhi) = rect.x, rect.y
    cx = xlo + (np.arange(side) + 0.5) * (xhi - xlo) / side
    cy = ylo + (np.arange(side) + 0.5) * (yhi - ylo) / side
    gx, gy = np.meshgrid(cx, cy)
    return np.column_stack([gx.ravel(), gy.ravel()])


def front_mask(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Boolean mask of the dominance-minimal points among the pairs (u, v).

    Sorts by the first coordinate and sweeps a running minimum of the second;
    duplicates of a front point stay on the front, while a point tied in one
    coordinate and beaten in the other is dominated.
    """
    n = len(u)
    if n == 0:
        return np.zeros(0, dtype=bool)
    order = np.lexsort((v, u))
    uu, vv = u[order], v[order]
    starts = np.r_[True, uu[1:] != uu[:-1]]
    gid = np.cumsum(starts) - 1
    gmin = np.minimum.reduceat(vv, np.flatnonzero(starts))
    prefix = np.minimum.accumulate(gmin)
    prev_best = np.r_[np.inf, prefix[:-1]][gid]
    dominated = (prev_best <= vv) | (gmin[gid] < vv)
    out = np.empty(n, dtype=bool)
    out[order] = ~dominated
    return out


def classify(
    controls,
    obj1: Callable = f1,
    obj2: Callable = f2,
    threshold: float = SAFETY_THRESHOLD,
) -> List[LabeledPoint]:
    """Evaluate both objectives once per control and attach safety and
    front-membership flags."""
    arr = np.asarray(controls, dtype=float).reshape(-1, 2)
    o1 = np.asarray(obj1(arr[:, 0], arr[:, 1]), dtype=float)
    o2 = np.asarray(obj2(arr[:, 0], arr[:, 1]), dtype=float)
    on_front = front_mask(o1, o2)
    safe = o2 <= threshold
    return [
        LabeledPoint((float(x), float(y)), (float(a), float(b)), bool(s), bool(p))
        for (x, y), a, b, s, p in zip(arr, o1, o2, safe, on_front)
    ]


# ---------------------------------------------------------------------------
# Seed-and-grow front state
# ---------------------------------------------------------------------------

@dataclass
class FrontState:
    """Disjoint Pareto-optimal / dominated control sets with cached images.

    The optimal side is kept sorted by image so membership tests and
    insertions are logarithmic plus the size of the displaced range.  The
    maintained contract: ``pys`` is exactly the set of evaluated controls
    whose image is dominance-minimal among all evaluated images, i.e. the
    multi-objective argmin over ``pys + npys``.
    """

    pys: List[Tuple[float, float]] = field(default_factory=list)
    npys: List[Tuple[float, float]] = field(default_factory=list)
    pys_f: List[Tuple[float, float]] = field(default_factory=list)
    npys_f: List[Tuple[float, float]] = field(default_factory=list)

    def front_size(self) -> int:
        return len(self.pys)


def _front_insert(state: FrontState, y: Tuple[float, float], fy: Tuple[float, float]) -> None:
    """Place one evaluated control on the correct side of the state.

    Controls whose image ties with a front image join the front: every
    preimage of a front point is Pareto-optimal.
    """
    fs, cs = state.pys_f, state.pys
    j = bisect_right(fs, (fy[0], math.inf))
    if j > 0:
        mu, mv = fs[j - 1]
        if mv < fy[1] or (mv == fy[1] and mu < fy[0]):
            state.npys.append(y)
            state.npys_f.append(fy)
            return
    lo = bisect_left(fs, (fy[0], -math.inf))
    hi = lo
    kept_c, kept_f = [], []
    while hi < len(fs) and fs[hi][1] >= fy[1]:
        if fs[hi] == fy:
            kept_c.append(cs[hi])
            kept_f.append(fs[hi])
        else:
            state.npys.append(cs[hi])
            state.npys_f.append(fs[hi])
        hi += 1
    state.pys_f[lo:hi] = kept_f + [fy]
    state.pys[lo:hi] = kept_c + [y]


def seed_front(fs: Callable, controls: Sequence[Tuple[float, float]]) -> FrontState:
    """Evaluate ``controls`` once each and split them into a valid state."""
    state = FrontState()
    for c in controls:
        y = (float(c[0]), float(c[1]))
        _front_insert(state, y, fs(y))
    return state


def evolve_step(
    state: FrontState,
    fs: Callable,
    rect: Rect2,
    rng: Rng,
    explore_prob: float = 0.2,
    mutation_scale: float = 0.02,
) -> FrontState:
    """Evaluate one new control and keep the state contract intact.

    With probability ``explore_prob`` the control is uniform over ``rect``;
    otherwise a uniformly chosen front member is perturbed with isotropic
    Gaussian noise of standard deviation ``mutation_scale`` times the domain
    width (per axis) and clamped back into the rectangle.  An empty front
    forces exploration.
    """
    (xlo, xhi), (ylo, yhi) = rect.x, rect.y
    explore = not state.pys or rng.random() < explore_prob
    if explore:
        y = (xlo + rng.random() * (xhi - xlo), ylo + rng.random() * (yhi - ylo))
    else:
        base = state.pys[int(rng.random() * len(state.pys))]
        wx, wy = rect.widths
        y = rect.clamp(
            base[0] + rng.gauss(0.0, mutation_scale * wx),
            base[1] + rng.gauss(0.0, mutation_scale * wy),
        )
    _front_insert(state, y, fs(y))
    return state


def front_invariant_holds(state: FrontState) -> bool:
    """Recompute the optimal subset from all cached images and compare."""
    all_f = state.pys_f + state.npys_f
    if not all_f:
        return not state.pys and not state.npys
    arr = np.asarray(all_f, dtype=float)
    mask = front_mask(arr[:, 0], arr[:, 1])
    all_c = state.pys + state.npys
    expected = {c for c, keep in zip(all_c, mask) if keep}
    return set(state.pys) == expected and not (set(state.npys) & expected)


# ---------------------------------------------------------------------------
# Drivers
# ---------------------------------------------------------------------------

def _point_metrics(o1: np.ndarray, o2: np.ndarray, controls: np.ndarray) -> dict:
    i1 = int(np.argmin(o1))
    i2 = int(np.argmin(o2))
    return {
        "f1min": float(o1[i1]),
        "f2min": float(o2[i2]),
        "argmin_f1": [float(controls[i1][0]), float(controls[i1][1])],
        "argmin_f2": [float(controls[i2][0]), float(controls[i2][1])],
    }


def run_sampling(config: BenchConfig) -> Tuple[List[LabeledPoint], dict]:
    """Label a uniform random sample; metrics summarize the whole sample."""
    rng = Rng(config.seed)
    pts = random_grid_2d(config.sample_size, config.rect, rng)
    labeled = classify(pts, threshold=config.threshold)
    metrics = {
        "evaluations": int(config.sample_size),
        "front_size": sum(1 for p in labeled if p.pareto),
        "safe_count": sum(1 for p in labeled if p.safe),
        "unsafe_count": sum(1 for p in labeled if not p.safe),
    }
    if labeled:
        o1 = np.fromiter((p.objectives[0] for p in labeled), float, len(labeled))
        o2 = np.fromiter((p.objectives[1] for p in labeled), float, len(labeled))
        metrics.update(_point_metrics(o1, o2, pts))
    else:
        metrics.update({"f1min": None, "f2min": None, "argmin_f1": None, "argmin_f2": None})
    return labeled, metrics


def run_evolution(config: BenchConfig) -> Tuple[FrontState, dict]:
    """Grow a front state from a regular seed grid; metrics summarize the
    tracked optimal set, with safety counted over everything evaluated."""
    rng = Rng(config.seed)
    calls = 0

    def fs(c):
        nonlocal calls
        calls += 1
        return objective_pair(c)

    grid = regular_grid_2d(config.grid_side, config.rect)
    state = seed_front(fs, grid)
    if not front_invariant_holds(state):
        raise RuntimeError("front state contract broken after seeding")
    for step in range(config.iterations):
        evolve_step(state, fs, config.rect, rng, config.explore_prob, config.mutation_scale)
        k = config.invariant_check_every
        if k and (step + 1) % k == 0 and not front_invariant_holds(state):
            raise RuntimeError(f"front state contract broken after step {step + 1}")
    invariant_ok = front_invariant_holds(state)

    metrics = {
        "evaluations": calls,
        "front_size": len(state.pys),
        "invariant_ok": bool(invariant_ok),
    }
    all_f = state.pys_f + state.npys_f
    metrics["safe_count"] = sum(1 for _, b in all_f if b <= config.threshold)
    metrics["unsafe_count"] = len(all_f) - metrics["safe_count"]
    if state.pys:
        o1 = np.fromiter((a for a, _ in state.pys_f), float, len(state.pys_f))
        o2 = np.fromiter((b for _, b in state.pys_f), float, len(state.pys_f))
        metrics.update(_point_metrics(o1, o2, np.asarray(state.pys)))
    else:
        metrics.update({"f1min": None, "f2min": None, "argmin_f1": None, "argmin_f2": None})
    return state, metrics
