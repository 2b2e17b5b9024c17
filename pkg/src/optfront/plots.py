"""Matplotlib rendering of benchmark results.

Writes two figures next to the delimited output: the operational space
(objective values with the front overlaid) and the control space.  Safe
points are green, unsafe points red and front members black, matching the
CSV flags.  Rendering is kept deterministic: a fixed Software tag replaces
the version-dependent PNG metadata so identical runs produce identical
bytes.
"""

from __future__ import annotations

import os
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

_PNG_META = {"Software": "optfront"}

_SAFE = "#2e9e4f"
_UNSAFE = "#c82f44"
_FRONT = "#000000"


def _scatter_split(ax, xs, ys, safe, front):
    import numpy as np

    xs = np.asarray(xs, float)
    ys = np.asarray(ys, float)
    safe = np.asarray(safe, bool)
    front = np.asarray(front, bool)
    size = 1.0 if len(xs) > 10_000 else 9.0
    ax.scatter(xs[~safe & ~front], ys[~safe & ~front], s=size, c=_UNSAFE, linewidths=0)
    ax.scatter(xs[safe & ~front], ys[safe & ~front], s=size, c=_SAFE, linewidths=0)
    ax.scatter(xs[front], ys[front], s=max(size, 2.0), c=_FRONT, linewidths=0)


def _save(fig, path: str) -> None:
    tmp = path + ".tmp"
    fig.savefig(tmp, format="png", dpi=120, metadata=_PNG_META)
    plt.close(fig)
    os.replace(tmp, path)


def render_operational(rows: Sequence, path: str) -> None:
    """rows: (f1, f2, safe, pareto) tuples."""
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    if rows:
        o1, o2, safe, front = zip(*rows)
        _scatter_split(ax, o1, o2, safe, front)
    ax.set_xlabel("first objective")
    ax.set_ylabel("second objective")
    ax.set_title("operational space")
    fig.tight_layout()
    _save(fig, path)


def render_control(rows: Sequence, path: str) -> None:
    """rows: (x, y, safe, pareto) tuples."""
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    if rows:
        xs, ys, safe, front = zip(*rows)
        _scatter_split(ax, xs, ys, safe, front)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_title("control space")
    fig.tight_layout()
    _save(fig, path)
