"""Empirical and predictive distribution functions and their sup-distances.

Both the empirical CDF of a prefix and any CDF of a law on the grid are
step functions that jump only at grid atoms, so the supremum over the real
line is attained at an atom (or below the first one, where both vanish).
Evaluating at the atoms is therefore exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .domain import Pmf
from .errors import EmptySample
from .processes import Prefix, ProcessSpec, predictive_from_counts, prefix_values, process_grid


@dataclass(frozen=True)
class DeviationCurve:
    """Sup-deviations along increasing sample sizes.

    ``trial`` is the trial index for a single sample path, or ``None`` when
    the curve holds medians over many trials (``aggregated``).
    """

    n_values: tuple[int, ...]
    predictive_dev: tuple[float, ...]
    classical_dev: tuple[float, ...]
    aggregated: bool = False
    trial: Optional[int] = None

    def __post_init__(self):
        if not (len(self.n_values) == len(self.predictive_dev) == len(self.classical_dev)):
            raise ValueError("deviation curve columns must have equal length")
        if any(b <= a for a, b in zip(self.n_values, self.n_values[1:])):
            raise ValueError("n_values must be strictly increasing")
        for d in self.predictive_dev + self.classical_dev:
            if not 0.0 <= d <= 1.0:
                raise ValueError(f"deviation {d!r} outside [0, 1]")


def empirical_cdf(values: Prefix, t: float) -> float:
    """Fraction of observed values that are ``<= t``."""
    vals = prefix_values(values)
    if vals.size == 0:
        raise EmptySample("empirical CDF of an empty prefix")
    return float(np.count_nonzero(vals <= t)) / vals.size


def _empirical_cdf_on_grid(counts: np.ndarray) -> np.ndarray:
    return np.cumsum(counts) / counts.sum()


def _sup_gap(counts: np.ndarray, probs: np.ndarray) -> float:
    gap = np.abs(_empirical_cdf_on_grid(counts) - np.cumsum(probs))
    # both CDFs equal 1 at the top atom; clamp float residue
    return float(min(1.0, gap.max()))


def sup_deviation_from_counts(counts: np.ndarray, probs: Sequence[float]) -> float:
    if counts.sum() == 0:
        raise EmptySample("sup-deviation needs a nonempty prefix")
    return _sup_gap(np.asarray(counts, dtype=float), np.asarray(probs, dtype=float))


def sup_deviation_predictive(process: ProcessSpec, prefix: Prefix) -> float:
    """``sup_t |F_n(t) - P(X_{n+1} <= t | X_1..X_n)|`` over the grid atoms."""
    grid = process_grid(process)
    vals = prefix_values(prefix)
    if vals.size == 0:
        raise EmptySample("sup-deviation needs a nonempty prefix")
    counts = np.bincount(grid.index_of(vals), minlength=len(grid))
    return sup_deviation_from_counts(counts, predictive_from_counts(process, counts))


def sup_deviation_classical(prefix: Prefix, reference: Pmf) -> float:
    """``sup_t |F_n(t) - F(t)|`` against a fixed reference law on the grid."""
    vals = prefix_values(prefix)
    if vals.size == 0:
        raise EmptySample("sup-deviation needs a nonempty prefix")
    counts = np.bincount(reference.grid.index_of(vals), minlength=len(reference.grid))
    return sup_deviation_from_counts(counts, reference.array)
