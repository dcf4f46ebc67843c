"""Exchangeable processes and their conditional-expectation oracles.

Every process here is a de Finetti mixture: a component law is drawn once
from a directing measure and the path is then i.i.d. from it.  Four variants
are supported:

``IID``             one fixed law (a one-component mixture)
``FiniteDeFinetti`` finitely many component laws with weights
``BetaBernoulli``   Bernoulli(p) on {0, 1} with p ~ Beta(a, b)
``Diagonal``        point-mass components, so every path is constant

Conditioning on an observed prefix is done exactly.  For finite mixtures it
is a Bayes update of the component weights; for Beta-Bernoulli it is the
Polya urn rule.  :func:`brute_force_conditional` recomputes the same
quantity as a ratio of joint prefix probabilities and serves as the
independent check on the posterior path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np
from scipy.special import betainc

from .domain import (
    DomainGrid,
    FiniteMixture,
    GridFunction,
    Pmf,
    inverse_cdf_index,
    pmf_expectation,
)
from .errors import ImpossiblePrefix, SizeGuard, UnsupportedProcess

#: Prefixes longer than this are scored in log space.
LOG_SPACE_MIN_N = 51
BETA_BISECTION_STEPS = 64
BRUTE_FORCE_MAX_GRID = 6
BRUTE_FORCE_MAX_PREFIX = 6

BINARY_GRID = DomainGrid((0.0, 1.0))


@dataclass(frozen=True)
class IID:
    pmf: Pmf


@dataclass(frozen=True)
class FiniteDeFinetti:
    mixture: FiniteMixture


@dataclass(frozen=True)
class BetaBernoulli:
    a: float
    b: float

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0):
            raise ValueError(f"Beta parameters must be positive, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class Diagonal:
    """Constant paths ``X_i = X`` with ``X`` drawn from the atom weights."""

    atoms: FiniteMixture

    def __post_init__(self):
        if not all(c.is_point_mass() for c in self.atoms.components):
            raise ValueError("every diagonal component must be a point mass")

    @classmethod
    def over(cls, grid: DomainGrid, atoms: Sequence[float], weights=None) -> "Diagonal":
        if weights is None:
            weights = [1.0 / len(atoms)] * len(atoms)
        comps = tuple(Pmf.point_mass(grid, x) for x in atoms)
        return cls(FiniteMixture(comps, tuple(weights)))


ProcessSpec = Union[IID, FiniteDeFinetti, BetaBernoulli, Diagonal]
Prefix = Union["PathPrefix", Sequence[float], np.ndarray]


@dataclass(frozen=True)
class PathPrefix:
    """Observed values ``X_1..X_n`` and the component that generated them.

    ``realized_component`` is a component index for finite mixtures and the
    drawn success probability for Beta-Bernoulli.
    """

    values: tuple[float, ...]
    realized_component: Union[int, float]

    def __len__(self) -> int:
        return len(self.values)

    def head(self, n: int) -> "PathPrefix":
        return PathPrefix(self.values[:n], self.realized_component)


def prefix_values(prefix: Prefix) -> np.ndarray:
    if isinstance(prefix, PathPrefix):
        prefix = prefix.values
    return np.asarray(prefix, dtype=float).reshape(-1)


def as_mixture(process: ProcessSpec) -> FiniteMixture:
    """The finite directing measure of a finite-support process."""
    if isinstance(process, FiniteDeFinetti):
        return process.mixture
    if isinstance(process, IID):
        return FiniteMixture((process.pmf,), (1.0,))
    if isinstance(process, Diagonal):
        return process.atoms
    raise UnsupportedProcess(f"{type(process).__name__} has no finite directing measure")


@lru_cache(maxsize=256)
def _mixture_arrays(process: ProcessSpec):
    mix = as_mixture(process)
    theta = mix.matrix
    weights = np.asarray(mix.weights)
    with np.errstate(divide="ignore"):
        log_theta = np.log(theta)
        log_w = np.log(weights)
    return weights, theta, log_w, log_theta


def process_grid(process: ProcessSpec) -> DomainGrid:
    if isinstance(process, BetaBernoulli):
        return BINARY_GRID
    return as_mixture(process).grid


def marginal_pmf(process: ProcessSpec) -> Pmf:
    """Law of a single coordinate ``X_1`` (the mixture average)."""
    if isinstance(process, BetaBernoulli):
        p = process.a / (process.a + process.b)
        return Pmf(BINARY_GRID, (1.0 - p, p))
    return as_mixture(process).marginal()


def prefix_counts(process: ProcessSpec, prefix: Prefix) -> np.ndarray:
    """Occurrences of each grid point in the prefix."""
    grid = process_grid(process)
    vals = prefix_values(prefix)
    if vals.size == 0:
        return np.zeros(len(grid), dtype=np.int64)
    return np.bincount(grid.index_of(vals), minlength=len(grid))


def beta_quantile(a: float, b: float, u: float, steps: int = BETA_BISECTION_STEPS) -> float:
    """Inverse Beta(a, b) CDF at ``u`` by a fixed number of bisection steps."""
    lo, hi = 0.0, 1.0
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if betainc(a, b, mid) < u:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sample_path(process: ProcessSpec, n: int, rng: np.random.Generator) -> PathPrefix:
    """Draw the directing component, then ``n`` i.i.d. points from it.

    One uniform variate is consumed for the component and one per point,
    all by inverse CDF in ascending order.
    """
    if n < 0:
        raise ValueError(f"path length must be nonnegative, got {n}")
    if isinstance(process, BetaBernoulli):
        p = beta_quantile(process.a, process.b, rng.random())
        u = rng.random(n)
        values = (u >= 1.0 - p).astype(float)
        return PathPrefix(tuple(values.tolist()), p)
    weights, theta, _, _ = _mixture_arrays(process)
    k = int(inverse_cdf_index(weights, rng.random()))
    idx = inverse_cdf_index(theta[k], rng.random(n))
    values = process_grid(process).array[idx]
    return PathPrefix(tuple(values.tolist()), k)


def prefix_probability(process: ProcessSpec, values: Prefix) -> float:
    """Joint probability ``P(X_1 = x_1, ..., X_n = x_n)`` of the prefix.

    Computed straight from the mixture representation as
    ``sum_i w_i prod_j theta_i(x_j)``.
    """
    if isinstance(process, BetaBernoulli):
        raise UnsupportedProcess("prefix_probability needs a finite directing measure")
    weights, theta, _, _ = _mixture_arrays(process)
    idx = process_grid(process).index_of(prefix_values(values))
    likelihood = np.prod(theta[:, idx], axis=1)
    return float(np.dot(weights, likelihood))


def posterior_from_counts(process: ProcessSpec, counts: np.ndarray) -> np.ndarray:
    weights, theta, log_w, log_theta = _mixture_arrays(process)
    n = int(counts.sum())
    if n < LOG_SPACE_MIN_N:
        unnorm = weights * np.prod(theta ** counts, axis=1)
        total = unnorm.sum()
        if total <= 0.0:
            raise ImpossiblePrefix("observed prefix has zero likelihood under every component")
        return unnorm / total
    seen = counts > 0
    with np.errstate(invalid="ignore"):
        loglik = log_theta[:, seen] @ counts[seen]
    logpost = log_w + loglik
    top = logpost.max()
    if not np.isfinite(top):
        raise ImpossiblePrefix("observed prefix has zero likelihood under every component")
    unnorm = np.exp(logpost - top)
    return unnorm / unnorm.sum()


def posterior_weights(process: ProcessSpec, prefix: Prefix) -> np.ndarray:
    """Bayes posterior over mixture components given the prefix."""
    if isinstance(process, BetaBernoulli):
        raise UnsupportedProcess("Beta-Bernoulli has a continuous directing measure")
    return posterior_from_counts(process, prefix_counts(process, prefix))


def update_posterior(process: ProcessSpec, weights: np.ndarray, x: float) -> np.ndarray:
    """One sequential Bayes step: reweight ``weights`` by the likelihood of ``x``."""
    _, theta, _, _ = _mixture_arrays(process)
    j = int(process_grid(process).index_of([x])[0])
    unnorm = np.asarray(weights) * theta[:, j]
    total = unnorm.sum()
    if total <= 0.0:
        raise ImpossiblePrefix(f"point {x!r} has zero predictive probability")
    return unnorm / total


def predictive_from_counts(process: ProcessSpec, counts: np.ndarray) -> np.ndarray:
    if isinstance(process, BetaBernoulli):
        if counts.size != 2:
            raise ValueError("Beta-Bernoulli counts must cover {0, 1}")
        total = process.a + process.b + int(counts.sum())
        return np.array([(process.b + counts[0]) / total, (process.a + counts[1]) / total])
    post = posterior_from_counts(process, counts)
    return post @ _mixture_arrays(process)[1]


def predictive_pmf(process: ProcessSpec, prefix: Prefix) -> Pmf:
    """Conditional law of ``X_{n+1}`` given the prefix."""
    counts = prefix_counts(process, prefix)
    return Pmf(process_grid(process), tuple(predictive_from_counts(process, counts)))


def conditional_expectation(process: ProcessSpec, prefix: Prefix, g: GridFunction) -> float:
    """``E(g(X_{n+1}) | X_1..X_n)`` via the predictive law."""
    return pmf_expectation(predictive_pmf(process, prefix), g)


def tail_conditional_expectation(process: ProcessSpec, prefix: Prefix, g: GridFunction) -> float:
    """Posterior average of the per-component means, ``sum_i w'_i E_theta_i(g)``.

    This is the conditional expectation of the tail-measurable quantity
    ``E(g(X_1) | tail)`` given the prefix.
    """
    post = posterior_weights(process, prefix)
    _, theta, _, _ = _mixture_arrays(process)
    return float(post @ (theta @ process_grid(process).values_of(g)))


def brute_force_conditional(process: ProcessSpec, prefix: Prefix, g: GridFunction) -> float:
    """``E(g(X_{n+1}) | prefix)`` as a ratio of joint prefix probabilities.

    Uses no posterior: ``sum_x g(x) P(prefix + x) / P(prefix)``.  Limited to
    grids of at most 6 points and prefixes of at most 6 values.
    """
    grid = process_grid(process)
    vals = prefix_values(prefix)
    if len(grid) > BRUTE_FORCE_MAX_GRID or vals.size > BRUTE_FORCE_MAX_PREFIX:
        raise SizeGuard(
            f"brute force limited to grid <= {BRUTE_FORCE_MAX_GRID} and "
            f"prefix <= {BRUTE_FORCE_MAX_PREFIX}; got {len(grid)} and {vals.size}"
        )
    denom = prefix_probability(process, vals)
    if denom == 0.0:
        raise ImpossiblePrefix("observed prefix has zero probability")
    gv = grid.values_of(g)
    num = 0.0
    for x, gx in zip(grid.points, gv):
        num += gx * prefix_probability(process, np.append(vals, x))
    return num / denom
