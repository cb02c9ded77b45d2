"""Exact-search parameter solving.

Given the target fraction lambda = M/N, find the smallest iteration count
k for which a matching phase alpha exists such that the k-step search
succeeds with probability exactly 1, together with the rotation phase
theta of the kernel spectrum.
"""

import math
from dataclasses import dataclass

from .errors import InfeasibleK, OutOfRange

# Tolerate rounding at exact boundary cases (e.g. lambda = 1/4 puts the
# arccos argument at exactly -1).
_CLAMP = 1e-12


@dataclass(frozen=True)
class SearchParams:
    """The tuple (lambda, k, alpha, theta) governing an exact search.

    For k = 0 (lambda = 1) the search needs no iterations and alpha,
    theta are reported as 0.
    """
    lam: float
    k: int
    alpha: float
    theta: float

    @property
    def no_iteration(self) -> bool:
        return self.k == 0


def _check_lambda(lam: float) -> None:
    if not 0.0 < lam <= 1.0:
        raise OutOfRange(f"lambda must be in (0, 1], got {lam}")


def _clamped_arccos(x: float) -> float:
    if abs(x) > 1.0 + _CLAMP:
        raise InfeasibleK(f"arccos argument {x} outside [-1, 1]")
    return math.acos(min(1.0, max(-1.0, x)))


def optimal_iterations(lam: float) -> int:
    """Smallest k with k >= (pi - arccos(1-2*lam)) / (2*arccos(1-2*lam));
    a non-increasing staircase function of lambda."""
    _check_lambda(lam)
    beta = math.acos(1.0 - 2.0 * lam)
    bound = (math.pi - beta) / (2.0 * beta)
    return max(0, math.ceil(bound - 1e-9))


def matching_phase(lam: float, k: int) -> float:
    """Phase alpha making the k-step search on fraction lambda exact.

    Raises InfeasibleK when k is below the optimal count (the arccos
    argument then falls outside [-1, 1]).
    """
    _check_lambda(lam)
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    return _clamped_arccos(1.0 - (1.0 - math.cos(math.pi / (2 * k + 1))) / lam)


def rotation_phase(lam: float, alpha: float) -> float:
    """theta = arccos(1 - lambda*(1 - cos(alpha))), in [0, pi].

    The arccos form is branch-safe; the equivalent arctan form crosses a
    branch when lambda*(1 - cos(alpha)) passes 1.
    """
    _check_lambda(lam)
    return _clamped_arccos(1.0 - lam * (1.0 - math.cos(alpha)))


def rotation_phase_arctan(lam: float, alpha: float) -> float:
    """Verification path: the two-argument arctangent form of theta,
    mapped to the principal branch [0, pi]."""
    _check_lambda(lam)
    x = lam * (1.0 - math.cos(alpha))
    return math.atan2(math.sqrt(max(0.0, x * (2.0 - x))), 1.0 - x)


def exact_rotation_phase(k: int) -> float:
    """theta_k = pi / (2k + 1)."""
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    return math.pi / (2 * k + 1)


def solve(lam: float) -> SearchParams:
    """Solve for (k, alpha, theta) from lambda alone.

    lambda = 1 yields the no-iteration search: the uniform state is
    already all-target, so k = 0 with alpha = theta = 0.
    """
    k = optimal_iterations(lam)
    if k == 0:
        return SearchParams(lam=lam, k=0, alpha=0.0, theta=0.0)
    return SearchParams(lam=lam, k=k, alpha=matching_phase(lam, k),
                        theta=exact_rotation_phase(k))
