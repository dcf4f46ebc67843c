"""Process and class fixtures shared across the test modules."""

import numpy as np

from predpac.domain import DomainGrid, FiniteMixture, Pmf
from predpac.processes import IID, Diagonal, FiniteDeFinetti

GRID20 = DomainGrid(tuple(float(x) for x in range(1, 21)))
BINARY = DomainGrid((0.0, 1.0))


def _normalized(weights):
    w = np.asarray(weights, dtype=float)
    return tuple(w / w.sum())


def left_right_uniform():
    """Geometric mass piled on the left, on the right, and a uniform component."""
    x = np.arange(20)
    comps = (
        Pmf(GRID20, _normalized(0.6 ** x)),
        Pmf(GRID20, _normalized(0.6 ** (19 - x))),
        Pmf.uniform(GRID20),
    )
    return FiniteDeFinetti(FiniteMixture(comps, (0.4, 0.4, 0.2)))


def two_bumps_and_gap():
    """Bumps near 5 and 15, plus a law that never visits the middle."""
    x = np.arange(1, 21)
    gap = np.where((x >= 8) & (x <= 13), 0.0, 1.0)
    comps = (
        Pmf(GRID20, _normalized(np.exp(-0.5 * ((x - 5) / 2.0) ** 2))),
        Pmf(GRID20, _normalized(np.exp(-0.5 * ((x - 15) / 2.0) ** 2))),
        Pmf(GRID20, _normalized(gap)),
    )
    return FiniteDeFinetti(FiniteMixture(comps, (0.25, 0.25, 0.5)))


def dirichlet_triple(seed=7):
    """Three Dirichlet(0.3) draws: spiky laws with many near-empty points."""
    rng = np.random.default_rng(seed)
    comps = tuple(Pmf(GRID20, tuple(rng.dirichlet(np.full(20, 0.3)))) for _ in range(3))
    return FiniteDeFinetti(FiniteMixture(comps, (0.5, 0.3, 0.2)))


STANDARD_MIXTURES = {
    "left_right_uniform": left_right_uniform,
    "two_bumps_and_gap": two_bumps_and_gap,
    "dirichlet_triple": dirichlet_triple,
}


def bernoulli_pair(p=0.1, q=0.9):
    return FiniteDeFinetti(FiniteMixture((Pmf(BINARY, (1 - p, p)), Pmf(BINARY, (1 - q, q))), (0.5, 0.5)))


def example_mixture():
    """w = (0.5, 0.5), theta_1 = (0.5, 0.5), theta_2 = (0.9, 0.1) on {0, 1}."""
    return FiniteDeFinetti(FiniteMixture((Pmf(BINARY, (0.5, 0.5)), Pmf(BINARY, (0.9, 0.1))), (0.5, 0.5)))


def diagonal_uniform_10():
    grid = DomainGrid(tuple(float(x) for x in range(1, 11)))
    return Diagonal.over(grid, grid.points)


def random_finite_process(rng, grid_size, n_components, zero_prob=0.25):
    """Random finite mixture, IID or diagonal process on a small grid.

    Some probabilities are zeroed so impossible prefixes occur.
    """
    grid = DomainGrid(tuple(float(x) for x in range(grid_size)))
    kind = rng.integers(3)
    if kind == 0:
        probs = rng.dirichlet(np.ones(grid_size))
        return IID(Pmf(grid, _normalized(probs)))
    if kind == 1:
        atoms = rng.choice(grid.points, size=n_components)
        return Diagonal.over(grid, list(atoms), _normalized(rng.dirichlet(np.ones(n_components))))
    comps = []
    for _ in range(n_components):
        p = rng.dirichlet(np.ones(grid_size))
        p[rng.random(grid_size) < zero_prob] = 0.0
        if p.sum() == 0:
            p[rng.integers(grid_size)] = 1.0
        comps.append(Pmf(grid, _normalized(p)))
    weights = _normalized(rng.dirichlet(np.ones(n_components)))
    return FiniteDeFinetti(FiniteMixture(tuple(comps), weights))
