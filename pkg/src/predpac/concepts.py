"""Binary concept classes on a grid: thresholds, intervals, unions of intervals.

Each concept is stored as a union of closed intervals ``[a, b]`` so that the
three families share one evaluator.  A threshold ``I[x >= t]`` is the ray
``[t, inf)``.

A :class:`ConceptClass` fixes a family and a grid.  Its parameter grid is
finite and sorted lexicographically by parameter vector, so ``argmin`` over
it implements the lexicographic tie-break used by the learners.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .domain import DomainGrid, Pmf
from .errors import EmptySample, SizeGuard

FAMILIES = ("threshold", "interval", "union_intervals")
SHATTER_MAX_POINTS = 20
VC_MAX_CAP = 6


@dataclass(frozen=True)
class Threshold:
    t: float

    @property
    def params(self) -> tuple[float, ...]:
        return (self.t,)

    @property
    def intervals(self) -> tuple[tuple[float, float], ...]:
        return ((self.t, np.inf),)

    def __call__(self, x: float) -> int:
        return evaluate(self, x)


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if self.a > self.b:
            raise ValueError(f"interval endpoints out of order: [{self.a}, {self.b}]")

    @property
    def params(self) -> tuple[float, ...]:
        return (self.a, self.b)

    @property
    def intervals(self) -> tuple[tuple[float, float], ...]:
        return ((self.a, self.b),)

    def __call__(self, x: float) -> int:
        return evaluate(self, x)


@dataclass(frozen=True)
class UnionOfIntervals:
    """Finite union of disjoint closed intervals listed left to right."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ivs = tuple((float(a), float(b)) for a, b in self.intervals)
        for a, b in ivs:
            if a > b:
                raise ValueError(f"interval endpoints out of order: [{a}, {b}]")
        for (_, b1), (a2, _) in zip(ivs, ivs[1:]):
            if not b1 < a2:
                raise ValueError(f"intervals must be disjoint and ordered: {ivs}")
        object.__setattr__(self, "intervals", ivs)

    @property
    def params(self) -> tuple[float, ...]:
        return tuple(v for iv in self.intervals for v in iv)

    def __call__(self, x: float) -> int:
        return evaluate(self, x)


Concept = Union[Threshold, Interval, UnionOfIntervals]


def evaluate(c: Concept, x: float) -> int:
    return int(any(a <= x <= b for a, b in c.intervals))


def concept_labels(c: Concept, points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    out = np.zeros(pts.shape, dtype=np.int8)
    for a, b in c.intervals:
        out |= ((pts >= a) & (pts <= b)).astype(np.int8)
    return out


def risk(theta: Pmf, h: Concept, f: Concept) -> float:
    """Exact disagreement mass ``sum_x theta(x) |h(x) - f(x)|``."""
    pts = theta.grid.array
    diff = np.abs(concept_labels(h, pts) - concept_labels(f, pts))
    return float(np.dot(theta.array, diff))


@dataclass(frozen=True)
class ConceptClass:
    """A concept family restricted to a finite parameter grid.

    ``declared_vc`` defaults to the known VC dimension of the family
    (1 for thresholds, 2 for intervals, ``2k`` for unions of ``k``
    intervals); it can be overridden to build deliberately wrong fixtures.
    """

    family: str
    grid: DomainGrid
    k: int = 1
    declared_vc: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown concept family {self.family!r}")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.family != "union_intervals" and self.k != 1:
            raise ValueError(f"k is only meaningful for unions, got k={self.k}")
        if self.declared_vc == 0:
            vc = {"threshold": 1, "interval": 2}.get(self.family, 2 * self.k)
            object.__setattr__(self, "declared_vc", vc)
        if self.declared_vc < 1:
            raise ValueError("declared VC dimension must be positive")

    def on_grid(self, grid: DomainGrid) -> "ConceptClass":
        return ConceptClass(self.family, grid, self.k, self.declared_vc)

    @property
    def parameter_grid(self) -> tuple[Concept, ...]:
        return _parameter_grid(self.family, self.k, self.grid)

    def __len__(self) -> int:
        return len(self.parameter_grid)

    def label_matrix(self, points=None) -> np.ndarray:
        """Labels of every candidate (rows) at ``points`` (columns).

        Rows follow :attr:`parameter_grid`.  Without ``points`` the grid
        itself is used and the result is cached.
        """
        lo, hi = _bounds_arrays(self.family, self.k, self.grid)
        if points is None:
            return _grid_label_matrix(self.family, self.k, self.grid)
        return _labels_from_bounds(lo, hi, np.asarray(points, dtype=float))

    def distinct_labelings(self) -> int:
        return len(np.unique(self.label_matrix(), axis=0))


def _sentinels(grid: DomainGrid) -> tuple[float, float]:
    return grid.points[0] - 1.0, grid.points[-1] + 1.0


@lru_cache(maxsize=64)
def _bounds_arrays(family: str, k: int, grid: DomainGrid):
    """Interval endpoints of every candidate, sorted lexicographically.

    Returns ``(lo, hi)`` of shape (candidates, k); unused interval slots are
    empty (``lo = inf``, ``hi = -inf``).
    """
    pts = grid.array
    below, above = _sentinels(grid)
    if family == "threshold":
        ts = np.concatenate([[below], pts, [above]])
        return ts[:, None], np.full((ts.size, 1), np.inf)
    if family == "interval":
        ia, ib = np.triu_indices(pts.size)
        order = np.lexsort((pts[ib], pts[ia]))
        lo = np.append(pts[ia][order], above)
        hi = np.append(pts[ib][order], above)
        return lo[:, None], hi[:, None]
    rows = []
    g = pts.size
    # a run [s, e-1] for each increasing pair (s, e) from range(g + 1); s_{i+1} > e_i
    # leaves at least one grid point between consecutive runs
    for j in range(k + 1):
        for cut in itertools.combinations(range(g + 1), 2 * j):
            rows.append(cut)
    lo = np.full((len(rows), k), np.inf)
    hi = np.full((len(rows), k), -np.inf)
    key = np.full((len(rows), 2 * k), -np.inf)
    for r, cut in enumerate(rows):
        for i in range(len(cut) // 2):
            lo[r, i] = pts[cut[2 * i]]
            hi[r, i] = pts[cut[2 * i + 1] - 1]
            key[r, 2 * i] = lo[r, i]
            key[r, 2 * i + 1] = hi[r, i]
    order = np.lexsort(key.T[::-1])
    return lo[order], hi[order]


def _labels_from_bounds(lo: np.ndarray, hi: np.ndarray, pts: np.ndarray) -> np.ndarray:
    inside = (pts[None, None, :] >= lo[:, :, None]) & (pts[None, None, :] <= hi[:, :, None])
    return inside.any(axis=1).astype(np.int8)


@lru_cache(maxsize=64)
def _grid_label_matrix(family: str, k: int, grid: DomainGrid) -> np.ndarray:
    lo, hi = _bounds_arrays(family, k, grid)
    mat = _labels_from_bounds(lo, hi, grid.array)
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=64)
def _parameter_grid(family: str, k: int, grid: DomainGrid) -> tuple[Concept, ...]:
    lo, hi = _bounds_arrays(family, k, grid)
    out: list[Concept] = []
    for row_lo, row_hi in zip(lo, hi):
        if family == "threshold":
            out.append(Threshold(float(row_lo[0])))
        elif family == "interval":
            out.append(Interval(float(row_lo[0]), float(row_hi[0])))
        else:
            ivs = tuple((float(a), float(b)) for a, b in zip(row_lo, row_hi) if a <= b)
            out.append(UnionOfIntervals(ivs))
    return tuple(out)


def _realized_labelings(cls: ConceptClass, pts: np.ndarray) -> set[int]:
    weights = 1 << np.arange(pts.size, dtype=np.int64)
    codes = cls.label_matrix(pts).astype(np.int64) @ weights
    return set(codes.tolist())


def shatter_check(cls: ConceptClass, points: Iterable[float]) -> bool:
    """Whether every labeling of ``points`` is realized by some concept.

    Candidates are the class's own parameter grid together with the same
    family built on the class grid augmented by the query points and the
    midpoints between consecutive query points.
    """
    pts = np.unique(np.asarray(list(points), dtype=float))
    if pts.size > SHATTER_MAX_POINTS:
        raise SizeGuard(f"shatter check limited to {SHATTER_MAX_POINTS} points")
    if pts.size == 0:
        return True
    mids = (pts[:-1] + pts[1:]) / 2.0
    aug = DomainGrid(tuple(np.unique(np.concatenate([cls.grid.array, pts, mids]))))
    seen = _realized_labelings(cls, pts) | _realized_labelings(cls.on_grid(aug), pts)
    return len(seen) == 2 ** pts.size


def vc_dimension_bruteforce(cls: ConceptClass, probe_grid: DomainGrid, cap: int) -> int:
    """Largest ``m <= cap`` such that some ``m``-subset of the probe grid is shattered."""
    if cap > VC_MAX_CAP:
        raise SizeGuard(f"VC search capped at {VC_MAX_CAP}, got cap={cap}")
    probe = cls.on_grid(probe_grid)
    best = 0
    for m in range(1, min(cap, len(probe_grid)) + 1):
        if not any(shatter_check(probe, s) for s in itertools.combinations(probe_grid.points, m)):
            # subsets of a shattered set are shattered, so no larger m can succeed
            break
        best = m
    return best


def empirical_risk(sample, h: Concept) -> float:
    """Fraction of sample points where ``h`` disagrees with the label."""
    if len(sample.points) == 0:
        raise EmptySample("empirical risk of an empty sample")
    pred = concept_labels(h, sample.points)
    return float(np.mean(np.abs(pred - np.asarray(sample.labels))))


def concept_from_params(family: str, params: Sequence[float]) -> Concept:
    if family == "threshold":
        (t,) = params
        return Threshold(float(t))
    if family == "interval":
        a, b = params
        return Interval(float(a), float(b))
    vals = [float(v) for v in params]
    if len(vals) % 2:
        raise ValueError("union parameters come in (a, b) pairs")
    return UnionOfIntervals(tuple(zip(vals[::2], vals[1::2])))


def family_of(c: Concept) -> str:
    if isinstance(c, Threshold):
        return "threshold"
    if isinstance(c, Interval):
        return "interval"
    return "union_intervals"
