"""Dimensions of the stable cohomology of M_{g,n} and the ranges where they apply.

The stable ring is free on kappa_i (degree 2i, i >= 1) and psi_1..psi_n
(degree 2), so its Poincare series is
``prod_i (1 - t^(2i))^(-1) * (1 - t^2)^(-n)``.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache


class Unavailable(str, Enum):
    """Why an orbifold Betti number is not reported. Never conflated with zero."""

    EQUAL_TO_ORDINARY = "equal-to-ordinary, value unavailable"
    UNKNOWN = "unavailable"


@lru_cache(maxsize=None)
def _series(n, max_degree):
    coeffs = [0] * (max_degree + 1)
    coeffs[0] = 1
    # each factor 1/(1 - t^step) is a running prefix sum with stride step
    steps = [2 * i for i in range(1, max_degree // 2 + 1)] + [2] * n
    for step in steps:
        for k in range(step, max_degree + 1):
            coeffs[k] += coeffs[k - step]
    return tuple(coeffs)


def stable_betti(n, k):
    """Dimension of the degree-``k`` part of the stable ring with ``n`` marks."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return _series(n, k)[k]


def harer_iso_range(g, k):
    return 3 * k + 2 <= 2 * g


def orbifold_equals_ordinary(g, n, k):
    """True when no twisted sector contributes in degree ``k``."""
    return k < g - 2 + n or n > 2 * g + 2


def corollary_range(g, n, k):
    """Range in which orbifold cohomology is stable in ``g``."""
    return k <= min(Fraction(g - 3 + n), Fraction(2 * g - 2, 3))


def orbifold_stable_betti(g, n, k):
    """``dim H^k_orb(M_{g,n})`` when both the orbifold and Harer ranges apply.

    Returns an :class:`Unavailable` marker otherwise.
    """
    if not orbifold_equals_ordinary(g, n, k):
        return Unavailable.UNKNOWN
    if not harer_iso_range(g, k):
        return Unavailable.EQUAL_TO_ORDINARY
    return stable_betti(n, k)


@dataclass(frozen=True)
class BettiTable:
    n: int
    max_degree: int
    dims: tuple
    g: int = None

    @classmethod
    def stable(cls, n, max_degree):
        return cls(n=n, max_degree=max_degree, dims=_series(n, max_degree))

    @classmethod
    def orbifold(cls, g, n, max_degree):
        dims = tuple(orbifold_stable_betti(g, n, k) for k in range(max_degree + 1))
        return cls(n=n, max_degree=max_degree, dims=dims, g=g)

    def to_dict(self):
        out = {"n": self.n}
        if self.g is not None:
            out["g"] = self.g
        out["dims"] = [None if isinstance(v, Unavailable) else v for v in self.dims]
        reasons = {str(k): v.value for k, v in enumerate(self.dims) if isinstance(v, Unavailable)}
        if reasons:
            out["reason"] = reasons
        return out
