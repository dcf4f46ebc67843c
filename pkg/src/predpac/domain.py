"""Finite discrete stand-ins for the instance space.

Everything lives on a :class:`DomainGrid`, a strictly increasing list of
reals.  A :class:`Pmf` is a probability vector over the grid and a
:class:`FiniteMixture` is a weighted list of Pmfs on a common grid.  All
three are immutable once built.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

logger = logging.getLogger(__name__)

#: Inputs whose mass is further than this from 1 are rejected outright.
SUM_TOLERANCE = 1e-9

GridFunction = Union[Callable[[float], float], Sequence[float], np.ndarray]


@dataclass(frozen=True)
class DomainGrid:
    points: tuple[float, ...]

    def __post_init__(self):
        pts = tuple(float(p) for p in self.points)
        if not pts:
            raise ValueError("grid must contain at least one point")
        if any(not np.isfinite(p) for p in pts):
            raise ValueError("grid points must be finite")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValueError(f"grid points must be strictly increasing: {pts}")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float)

    def index_of(self, values) -> np.ndarray:
        """Grid indices of ``values``; raises if any value is off the grid."""
        vals = np.asarray(values, dtype=float).reshape(-1)
        pts = self.array
        idx = np.searchsorted(pts, vals)
        idx = np.minimum(idx, len(pts) - 1)
        bad = pts[idx] != vals
        if np.any(bad):
            raise ValueError(f"values not on grid: {vals[bad][:5].tolist()}")
        return idx

    def values_of(self, g: GridFunction) -> np.ndarray:
        """Tabulate a grid function.

        ``g`` may be a callable on points or a sequence already aligned with
        the grid.
        """
        if callable(g):
            return np.array([float(g(x)) for x in self.points])
        vals = np.asarray(g, dtype=float)
        if vals.shape != (len(self),):
            raise ValueError(
                f"grid function has shape {vals.shape}, expected ({len(self)},)"
            )
        return vals


@dataclass(frozen=True)
class Pmf:
    """Probability mass function on a :class:`DomainGrid`.

    Probabilities whose total is within ``SUM_TOLERANCE`` of one are divided
    by their sum once; ``renormalized`` records whether that changed them.
    Anything further from one is rejected.
    """

    grid: DomainGrid
    probs: tuple[float, ...]
    renormalized: bool = field(default=False, compare=False)

    def __post_init__(self):
        probs = np.asarray(self.probs, dtype=float).reshape(-1)
        if probs.shape != (len(self.grid),):
            raise ValueError(
                f"{probs.size} probabilities for a grid of {len(self.grid)} points"
            )
        if np.any(~np.isfinite(probs)) or np.any(probs < 0):
            raise ValueError("probabilities must be finite and nonnegative")
        total = float(probs.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        if total != 1.0:
            probs = probs / total
            object.__setattr__(self, "renormalized", True)
            logger.debug("renormalized pmf with mass %r", total)
        object.__setattr__(self, "probs", tuple(float(p) for p in probs))

    @classmethod
    def from_points(cls, points: Sequence[float], probs: Sequence[float]) -> "Pmf":
        return cls(DomainGrid(tuple(points)), tuple(probs))

    @classmethod
    def uniform(cls, grid: DomainGrid) -> "Pmf":
        m = len(grid)
        return cls(grid, (1.0 / m,) * m)

    @classmethod
    def point_mass(cls, grid: DomainGrid, x: float) -> "Pmf":
        probs = np.zeros(len(grid))
        probs[grid.index_of([x])[0]] = 1.0
        return cls(grid, tuple(probs))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=float)

    @property
    def support(self) -> tuple[float, ...]:
        return tuple(x for x, p in zip(self.grid.points, self.probs) if p > 0)

    def is_point_mass(self) -> bool:
        return sum(1 for p in self.probs if p > 0) == 1 and max(self.probs) == 1.0

    def __call__(self, x: float) -> float:
        return self.probs[int(self.grid.index_of([x])[0])]


@dataclass(frozen=True)
class FiniteMixture:
    """Directing measure with finite support: ``weights[i]`` on ``components[i]``."""

    components: tuple[Pmf, ...]
    weights: tuple[float, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if not comps:
            raise ValueError("mixture needs at least one component")
        if len(comps) != weights.size:
            raise ValueError(f"{len(comps)} components but {weights.size} weights")
        grid = comps[0].grid
        if any(c.grid != grid for c in comps):
            raise ValueError("all mixture components must share one grid")
        if np.any(~np.isfinite(weights)) or np.any(weights < 0):
            raise ValueError("mixture weights must be finite and nonnegative")
        total = float(weights.sum())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"mixture weights sum to {total!r}, not 1")
        if total != 1.0:
            weights = weights / total
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "weights", tuple(float(w) for w in weights))

    @property
    def grid(self) -> DomainGrid:
        return self.components[0].grid

    @property
    def matrix(self) -> np.ndarray:
        """Component probabilities stacked as a (components, grid) array."""
        return np.array([c.probs for c in self.components], dtype=float)

    def marginal(self) -> Pmf:
        return Pmf(self.grid, tuple(np.asarray(self.weights) @ self.matrix))


def pmf_expectation(pmf: Pmf, g: GridFunction) -> float:
    """Exact expectation of ``g`` under ``pmf`` as a finite sum."""
    return float(np.dot(pmf.array, pmf.grid.values_of(g)))


def pmf_cdf(pmf: Pmf, t: float) -> float:
    """Right-continuous distribution function ``P(X <= t)``."""
    k = int(np.searchsorted(pmf.grid.array, t, side="right"))
    if k >= len(pmf.grid):
        return 1.0
    return float(np.sum(pmf.array[:k]))


def inverse_cdf_index(probs: np.ndarray, u):
    """Map uniform variate(s) ``u`` in [0, 1) to grid indices.

    Cumulative weights are accumulated in ascending grid order and index
    ``j`` is returned when ``cum[j-1] <= u < cum[j]``.  Zero-probability
    points are never selected.
    """
    probs = np.asarray(probs, dtype=float)
    cum = np.cumsum(probs)
    idx = np.searchsorted(cum, u, side="right")
    # rounding can leave cum[-1] a hair under 1
    last = int(np.flatnonzero(probs > 0)[-1])
    return np.minimum(idx, last)


def sample_point(pmf: Pmf, rng: np.random.Generator) -> float:
    """Draw one point from ``pmf`` using exactly one uniform variate."""
    return pmf.grid.points[int(inverse_cdf_index(pmf.array, rng.random()))]


def sample_points(pmf: Pmf, n: int, rng: np.random.Generator) -> np.ndarray:
    """``n`` independent draws; equivalent to ``n`` calls of :func:`sample_point`."""
    return pmf.grid.array[inverse_cdf_index(pmf.array, rng.random(n))]
