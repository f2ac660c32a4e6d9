"""Age (degree-shifting number) of a twisted sector, in exact rationals.

The age splits as::

    age = (3g' - 3)(N - 1)/2  +  sum_i a_i * mark_weight(i)  +  sum_i d_i * point_weight(i)

``point_weight(i) = (1/N) sum_k k ({ki/N} + sigma(k, i))``.

Marked points use ``mark_weight(i) = (N - inv(i))/N`` where ``inv(i)`` is the
inverse of ``i`` mod ``N``: the generator acts on the cotangent line at a
marked point by ``omega_N ** inv(i)``, hence on the tangent line with age
``(N - inv(i))/N``. The literal closed formula instead sums ``k * sigma(k, i)``
per marked point; that variant is kept as ``MarkConvention.PRINTED`` because it
breaks ``age(Y) + age(twin Y) = codim(Y)`` whenever ``N = 2`` and ``n > 0``.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import frac_part, mod_inverse, proper_divisors
from .sector import require_valid


class MarkConvention(str, Enum):
    CORRECTED = "corrected"
    PRINTED = "printed"


def _check_index(i, N):
    if N < 2:
        raise ValueError(f"order must be >= 2, got {N}")
    if not 1 <= i <= N - 1:
        raise ValueError(f"index {i} out of range [1, {N - 1}]")


def sigma_indicator(k, i, N):
    """0 if ``k*i + gcd(i, N)`` is divisible by ``N``, else 1."""
    _check_index(k, N)
    _check_index(i, N)
    return 0 if (k * i + gcd(i, N)) % N == 0 else 1


@lru_cache(maxsize=None)
def point_weight(i, N):
    """Age contribution of one branch point of type ``i``."""
    _check_index(i, N)
    total = sum(
        k * (frac_part(Fraction(k * i, N)) + sigma_indicator(k, i, N)) for k in range(1, N)
    )
    return total / N


@lru_cache(maxsize=None)
def mark_weight(i, N, convention=MarkConvention.CORRECTED):
    """Age contribution of one marked point over a branch point of type ``i``."""
    _check_index(i, N)
    if gcd(i, N) != 1:
        raise ValueError(f"marked points need gcd(i, N) = 1, got i={i}, N={N}")
    if MarkConvention(convention) is MarkConvention.PRINTED:
        return Fraction(sum(k * sigma_indicator(k, i, N) for k in range(1, N)), N)
    return Fraction(N - mod_inverse(i, N), N)


@dataclass(frozen=True)
class AgeBreakdown:
    base: Fraction
    mark: Fraction
    per_sigma: dict = field(default_factory=dict)

    @property
    def total(self):
        return self.base + self.mark + sum(self.per_sigma.values(), Fraction(0))

    def to_dict(self):
        return {
            "base": str(self.base),
            "mark": str(self.mark),
            "per_sigma": {str(s): str(v) for s, v in self.per_sigma.items()},
            "total": str(self.total),
        }


def age_breakdown(datum, convention=MarkConvention.CORRECTED):
    """Base, marked-point, and per-divisor contributions to the age.

    ``per_sigma[s]`` collects the branch points of type ``i`` with
    ``gcd(i, N) = s``; every proper divisor of ``N`` is a key, even when its
    contribution is zero.
    """
    require_valid(datum)
    N = datum.order
    base = Fraction((3 * datum.g_prime - 3) * (N - 1), 2)
    mark = sum(
        (ai * mark_weight(i, N, convention) for i, ai in enumerate(datum.a, 1) if ai),
        Fraction(0),
    )
    per_sigma = {s: Fraction(0) for s in proper_divisors(N)}
    for i, di in enumerate(datum.d, 1):
        if di:
            per_sigma[gcd(i, N)] += di * point_weight(i, N)
    return AgeBreakdown(base=base, mark=mark, per_sigma=per_sigma)


def age(datum, convention=MarkConvention.CORRECTED):
    return age_breakdown(datum, convention).total
