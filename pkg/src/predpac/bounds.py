"""Sample-complexity formulas for VC classes and their inversion.

``lg`` is the base-2 logarithm throughout.  Bounds are returned as integer
sample sizes (ceilings of the real-valued formulas).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, Unreachable

FORMULAS = ("vidyasagar78", "corollary_predictive")
INVERT_TOL = 1e-9

BoundFn = Callable[[float, float], int]


def _check_unit(name: str, value: float) -> None:
    if not (0.0 < value < 1.0) or math.isnan(value):
        raise DomainError(f"{name} must lie in (0, 1), got {value!r}")


def _check_d(d: int) -> None:
    if int(d) != d or d < 1:
        raise DomainError(f"VC dimension must be a positive integer, got {d!r}")


def vidyasagar_bound(d: int, delta: float, epsilon: float) -> int:
    """Distribution-free PAC sample size for a class of VC dimension ``d``.

    ``max{(8d/eps) lg(8e/eps), (4/eps) lg(2/delta)}``, rounded up.
    """
    _check_d(d)
    _check_unit("delta", delta)
    _check_unit("epsilon", epsilon)
    first = (8 * d / epsilon) * math.log2(8 * math.e / epsilon)
    second = (4 / epsilon) * math.log2(2 / delta)
    return math.ceil(max(first, second))


def corollary_bound(d: int, delta: float, epsilon: float) -> int:
    """Predictive PAC sample size under exchangeable inputs.

    ``max{(16d/eps) lg(16e/eps), (8/eps) lg(2/delta) + (8/eps) lg(1/eps)}``,
    rounded up.
    """
    _check_d(d)
    _check_unit("delta", delta)
    _check_unit("epsilon", epsilon)
    first = (16 * d / epsilon) * math.log2(16 * math.e / epsilon)
    second = (8 / epsilon) * math.log2(2 / delta) + (8 / epsilon) * math.log2(1 / epsilon)
    return math.ceil(max(first, second))


def predictive_transform(base: BoundFn, delta: float, epsilon: float) -> int:
    """Evaluate an i.i.d. bound ``base(delta, epsilon)`` at ``(delta*epsilon, epsilon/2)``."""
    dd, ee = delta * epsilon, epsilon / 2
    if not (0.0 < dd < 1.0 and 0.0 < ee < 1.0):
        raise DomainError(
            f"transformed arguments (delta*eps={dd!r}, eps/2={ee!r}) leave (0, 1)"
        )
    return base(dd, ee)


@dataclass(frozen=True)
class BoundSpec:
    d: int
    formula: str = "vidyasagar78"

    def __post_init__(self):
        _check_d(self.d)
        if self.formula not in FORMULAS:
            raise ValueError(f"unknown bound formula {self.formula!r}; expected one of {FORMULAS}")

    def __call__(self, delta: float, epsilon: float) -> int:
        if self.formula == "vidyasagar78":
            return vidyasagar_bound(self.d, delta, epsilon)
        return corollary_bound(self.d, delta, epsilon)

    def predictive(self, delta: float, epsilon: float) -> int:
        """The exchangeable-input sample size derived from this bound."""
        return predictive_transform(self, delta, epsilon)


def invert_bound(spec: BoundSpec, delta: float, n: int) -> float:
    """Smallest ``epsilon`` (to ``INVERT_TOL``) with ``spec(delta, epsilon) <= n``.

    The bound is nonincreasing in ``epsilon``, so bisection keeps ``hi``
    feasible and ``lo`` infeasible; ``hi`` is returned.
    """
    if n < 1:
        raise DomainError(f"sample size must be at least 1, got {n!r}")
    hi = 1.0 - INVERT_TOL
    if spec(delta, hi) > n:
        raise Unreachable(f"bound exceeds n={n} even at epsilon={hi}")
    lo = 0.0
    while hi - lo > INVERT_TOL:
        mid = 0.5 * (lo + hi)
        if spec(delta, mid) <= n:
            hi = mid
        else:
            lo = mid
    return hi
