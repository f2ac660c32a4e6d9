"""Enumeration of all (g, n)-admissible data and count tables."""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd

from .age import MarkConvention, age
from .sector import (
    E_STABILITY,
    SectorDatum,
    codimension,
    is_hyperelliptic,
    multiplicity,
    ramification_weight,
    sector_dimension,
    twin,
)

FILTERS = ("none", "gprime0", "gprime0_sumd3")


class UnstableError(ValueError):
    code = E_STABILITY

    def __init__(self, g, n):
        super().__init__(f"{E_STABILITY}: M_{{{g},{n}}} is unstable (2g-2+n = {2 * g - 2 + n})")


def order_bound(g):
    """Largest order of a cyclic automorphism considered at genus ``g``."""
    return 4 * g + 2 if g >= 2 else 6


def branch_vectors(N, budget):
    """All ``d`` with ``sum (N - gcd(i, N)) d_i == budget`` and ``sum i d_i == 0 mod N``.

    Yields tuples in lexicographic order.
    """
    if budget < 0:
        return
    weights = [ramification_weight(i, N) for i in range(1, N)]
    cur = [0] * (N - 1)

    def rec(j, remaining, residue):
        if j == N - 1:
            if remaining == 0 and residue == 0:
                yield tuple(cur)
            return
        w = weights[j]
        c = 0
        while c * w <= remaining:
            cur[j] = c
            yield from rec(j + 1, remaining - c * w, (residue + c * (j + 1)) % N)
            c += 1
        cur[j] = 0

    yield from rec(0, budget, 0)


def _connected(N, d):
    return reduce(gcd, (i for i, di in enumerate(d, 1) if di), N) == 1


def mark_vectors(N, d, n):
    """Distributions of ``n`` marks over totally ramified points, ``a_i <= d_i``."""
    slots = [i for i in range(1, N) if gcd(i, N) == 1 and d[i - 1]]
    cur = [0] * (N - 1)

    def rec(k, remaining):
        if k == len(slots):
            if remaining == 0:
                yield tuple(cur)
            return
        i = slots[k]
        for c in range(min(d[i - 1], remaining) + 1):
            cur[i - 1] = c
            yield from rec(k + 1, remaining - c)
        cur[i - 1] = 0

    yield from rec(0, n)


def _quotient_genera(g, N):
    gp = 0
    while N * (2 * gp - 2) <= 2 * g - 2:
        yield gp
        gp += 1


def admissible_data(g, n, max_order=None):
    """All (g, n)-admissible data in canonical order.

    Canonical order is ``(N, g', d, a)`` ascending. ``max_order`` overrides
    :func:`order_bound`.
    """
    if 2 * g - 2 + n <= 0:
        raise UnstableError(g, n)
    top = order_bound(g) if max_order is None else max_order
    out = []
    for N in range(2, top + 1):
        for gp in _quotient_genera(g, N):
            for d in branch_vectors(N, 2 * g - 2 - N * (2 * gp - 2)):
                if n == 0 and gp == 0 and not _connected(N, d):
                    continue
                for a in mark_vectors(N, d, n):
                    out.append(SectorDatum(g=g, n=n, g_prime=gp, order=N, d=d, a=a))
    out.sort(key=SectorDatum.sort_key)
    return out


@dataclass(frozen=True)
class SectorRecord:
    datum: SectorDatum
    age: Fraction
    codim: int
    dim: int
    multiplicity: int
    is_hyperelliptic: bool
    twin: int

    def to_dict(self):
        out = self.datum.to_dict()
        out.update(
            age=str(self.age),
            codim=self.codim,
            dim=self.dim,
            multiplicity=self.multiplicity,
            hyperelliptic=self.is_hyperelliptic,
            twin_key=self.twin,
        )
        return out


@dataclass
class EnumerationResult:
    g: int
    n: int
    records: list
    convention: MarkConvention = MarkConvention.CORRECTED
    counts: dict = field(init=False)

    def __post_init__(self):
        data = [r.datum for r in self.records]
        self.counts = {
            "total": len(data),
            "by_g_prime": dict(sorted(Counter(y.g_prime for y in data).items())),
            "by_sum_d": dict(sorted(Counter(y.sum_d for y in data).items())),
            "by_order": dict(sorted(Counter(y.order for y in data).items())),
        }

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    @property
    def data(self):
        return [r.datum for r in self.records]


def enumerate_sectors(g, n, convention=MarkConvention.CORRECTED, max_order=None):
    data = admissible_data(g, n, max_order=max_order)
    index = {y: k for k, y in enumerate(data)}
    records = []
    for y in data:
        records.append(
            SectorRecord(
                datum=y,
                age=age(y, convention),
                codim=codimension(y),
                dim=sector_dimension(y),
                multiplicity=multiplicity(y),
                is_hyperelliptic=is_hyperelliptic(y),
                # twins share (N, g') so they always fall inside the same enumeration
                twin=index[twin(y)],
            )
        )
    return EnumerationResult(g=g, n=n, records=records, convention=MarkConvention(convention))


def sanity_sweep(g, factor=2):
    """Search orders in ``(order_bound(g), factor * order_bound(g)]`` for admissible data.

    Returns ``None`` when nothing is found, otherwise the first counterexample.
    A datum counts if it is admissible for some stable ``n``: either with no
    marks (g >= 2, connected) or with one mark on a totally ramified point.
    """
    lo = order_bound(g)
    for N in range(lo + 1, factor * lo + 1):
        for gp in _quotient_genera(g, N):
            for d in branch_vectors(N, 2 * g - 2 - N * (2 * gp - 2)):
                if g >= 2 and (gp > 0 or _connected(N, d)):
                    return SectorDatum(g=g, n=0, g_prime=gp, order=N, d=d, a=(0,) * (N - 1))
                for a in mark_vectors(N, d, 1):
                    return SectorDatum(g=g, n=1, g_prime=gp, order=N, d=d, a=a)
    return None


def _table_input(g):
    # (1, 0) is unstable; the genus-one column is M_{1,1}
    return (1, 1) if g == 1 else (g, 0)


def count_table(g_max, filter="none", max_order=None):
    """Number of admissible data of M_g for ``g = 1..g_max`` (``M_{1,1}`` at ``g = 1``)."""
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    row = []
    for g in range(1, g_max + 1):
        data = admissible_data(*_table_input(g), max_order=max_order)
        if filter == "gprime0":
            data = [y for y in data if y.g_prime == 0]
        elif filter == "gprime0_sumd3":
            data = [y for y in data if y.g_prime == 0 and y.sum_d == 3]
        row.append(len(data))
    return row
