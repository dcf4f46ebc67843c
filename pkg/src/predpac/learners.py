"""Learning rules: exact empirical risk minimization over a concept class."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bounds import BoundSpec, invert_bound
from .concepts import Concept, ConceptClass, concept_labels
from .errors import EmptySample

TIE_BREAKS = ("lex_min", "lex_max")


@dataclass(frozen=True)
class LabeledSample:
    """Ordered sample ``(x_j, y_j)``; repeated points are allowed."""

    points: tuple[float, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(float(x) for x in self.points)
        labels = tuple(int(y) for y in self.labels)
        if len(pts) != len(labels):
            raise ValueError(f"{len(pts)} points but {len(labels)} labels")
        if any(y not in (0, 1) for y in labels):
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.points)


def restrict(f: Concept, sigma: Sequence[float]) -> LabeledSample:
    """The sample ``f`` restricted to the points ``sigma``."""
    pts = tuple(float(x) for x in sigma)
    return LabeledSample(pts, tuple(concept_labels(f, pts).tolist()))


def erm_from_counts(cls: ConceptClass, ones: np.ndarray, zeros: np.ndarray, tie_break: str = "lex_min") -> int:
    """Index into ``cls.parameter_grid`` of an empirical risk minimizer.

    ``ones[j]`` and ``zeros[j]`` count the sample points at grid point ``j``
    labelled 1 and 0.  Risks are compared as exact integer mistake counts.
    """
    labels = cls.label_matrix().astype(np.int64)
    mistakes = labels @ zeros + (1 - labels) @ ones
    if tie_break == "lex_min":
        return int(np.argmin(mistakes))
    if tie_break == "lex_max":
        return int(mistakes.size - 1 - np.argmin(mistakes[::-1]))
    raise ValueError(f"unknown tie-break {tie_break!r}")


def sample_counts(cls: ConceptClass, sample: LabeledSample) -> tuple[np.ndarray, np.ndarray]:
    idx = cls.grid.index_of(sample.points)
    y = np.asarray(sample.labels, dtype=np.int64)
    g = len(cls.grid)
    ones = np.bincount(idx, weights=y, minlength=g).astype(np.int64)
    zeros = np.bincount(idx, minlength=g).astype(np.int64) - ones
    return ones, zeros


def erm(cls: ConceptClass, sample: LabeledSample, tie_break: str = "lex_min") -> Concept:
    """Empirical risk minimizer over the class's parameter grid.

    Among minimizers the lexicographically smallest parameter vector wins
    (``tie_break="lex_min"``); ``"lex_max"`` picks the largest instead.
    """
    if len(sample) == 0:
        raise EmptySample("ERM needs at least one labelled point")
    ones, zeros = sample_counts(cls, sample)
    return cls.parameter_grid[erm_from_counts(cls, ones, zeros, tie_break)]


@dataclass(frozen=True)
class LearningRule:
    target_class: ConceptClass
    tie_break: str = "lex_min"
    kind: str = "erm"

    def __post_init__(self):
        if self.kind != "erm":
            raise ValueError(f"only ERM rules are supported, got {self.kind!r}")
        if self.tie_break not in TIE_BREAKS:
            raise ValueError(f"unknown tie-break {self.tie_break!r}; expected one of {TIE_BREAKS}")

    def __call__(self, sample: LabeledSample) -> Concept:
        return erm(self.target_class, sample, self.tie_break)


def is_consistent(rule: LearningRule, cls: ConceptClass, f: Concept, sigma: Sequence[float]) -> bool:
    """True iff the rule's hypothesis reproduces ``f`` on every point of ``sigma``."""
    return is_consistent_on(rule, cls, restrict(f, sigma))


def is_consistent_on(rule: LearningRule, cls: ConceptClass, sample: LabeledSample) -> bool:
    """Consistency on an arbitrary labelled sample, realizable or not."""
    if len(sample) == 0:
        return True
    h = erm(cls, sample, rule.tie_break)
    return restrict(h, sample.points).labels == sample.labels


def epsilon_n(bound: BoundSpec, n: int) -> float:
    """Smallest accuracy reachable at confidence one half with ``n`` samples."""
    return invert_bound(bound, 0.5, n)
