"""Exhaustive checks of the minimum-age theorem and the bounds used to prove it.

Every check runs over a full enumeration at fixed ``(g, n)`` in exact
arithmetic; a failed check carries the first offending datum as its witness.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .age import MarkConvention, age, age_breakdown, sigma_indicator
from .arith import frac_part, mod_inverse
from .enumeration import enumerate_sectors
from .sector import codimension, is_hyperelliptic, require_valid, twin


@dataclass
class Check:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def to_dict(self):
        witness = self.witness
        if hasattr(witness, "to_dict"):
            witness = witness.to_dict()
        return {"name": self.name, "passed": self.passed, "witness": witness, "detail": self.detail}


@dataclass
class VerificationReport:
    scope: object
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, name, witness=None, detail=""):
        """Record a check; it passes iff ``witness`` is None."""
        self.checks.append(Check(name, witness is None, witness, detail))

    def extend(self, other):
        self.checks.extend(other.checks)
        self.notes.extend(n for n in other.notes if n not in self.notes)
        return self

    def to_dict(self):
        scope = self.scope.to_dict() if hasattr(self.scope, "to_dict") else self.scope
        return {
            "scope": scope,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }


def _scope(g, n, convention):
    return {"g": g, "n": n, "mark_convention": MarkConvention(convention).value}


def _sectors(g, n, convention, report, max_order=None):
    result = enumerate_sectors(g, n, convention=convention, max_order=max_order)
    if not len(result):
        report.notes.append(f"empty enumeration: no admissible data for (g, n) = ({g}, {n})")
    return result


def verify_twin_identity(g, n, convention=MarkConvention.CORRECTED, max_order=None):
    """``age(Y) + age(twin Y) == codim(Y)`` for every sector of M_{g,n}."""
    report = VerificationReport(_scope(g, n, convention))
    result = _sectors(g, n, convention, report, max_order)
    witness = None
    for rec in result:
        partner = result.records[rec.twin]
        if rec.age + partner.age != rec.codim:
            witness = rec.datum
            break
    detail = ""
    if witness is not None:
        detail = (
            f"age {age(witness, convention)} + twin age {age(twin(witness), convention)}"
            f" != codim {codimension(witness)}"
        )
        if MarkConvention(convention) is MarkConvention.PRINTED:
            detail += "; expected under the printed mark convention"
    report.add("twin_identity", witness, detail)
    return report


def verify_min_age(g, n, convention=MarkConvention.CORRECTED, max_order=None):
    """Minimum of ``2 * age`` is ``g - 2 + n``, reached only by the hyperelliptic sector."""
    report = VerificationReport(_scope(g, n, convention))
    result = _sectors(g, n, convention, report, max_order)
    if not len(result):
        return report
    low = min(r.age for r in result)
    minimisers = [r.datum for r in result if r.age == low]
    report.add(
        "min_age_value",
        None if 2 * low == g - 2 + n else minimisers[0],
        f"minimum age {low}, expected {Fraction(g - 2 + n, 2)}",
    )
    report.add(
        "min_age_unique",
        None if len(minimisers) == 1 else minimisers[1],
        f"{len(minimisers)} sector(s) of minimum age",
    )
    report.add(
        "min_age_hyperelliptic",
        None if is_hyperelliptic(minimisers[0]) else minimisers[0],
    )
    return report


def verify_codim_bound(g, n, max_order=None):
    """``codim(Y) >= g - 2 + n`` with equality only at the hyperelliptic sector.

    Also checks ``(N/2) sum d_i <= 2g - 2 - N(2g' - 2)`` per datum.
    """
    report = VerificationReport(_scope(g, n, MarkConvention.CORRECTED))
    result = _sectors(g, n, MarkConvention.CORRECTED, report, max_order)
    bound = g - 2 + n
    below = next((r.datum for r in result if r.codim < bound), None)
    report.add("codim_bound", below)
    equal = next((r.datum for r in result if r.codim == bound and not r.is_hyperelliptic), None)
    report.add("codim_equality_hyperelliptic_only", equal)
    branch = None
    for r in result:
        y = r.datum
        if Fraction(y.order, 2) * y.sum_d > 2 * g - 2 - y.order * (2 * y.g_prime - 2):
            branch = y
            break
    report.add("branch_count_bound", branch)
    return report


def verify_central_inequality(g, n, convention=MarkConvention.CORRECTED, max_order=None):
    """``|age(Y) - age(twin Y)| <= codim(Y) - (g - 2 + n)``, equality only when hyperelliptic."""
    report = VerificationReport(_scope(g, n, convention))
    result = _sectors(g, n, convention, report, max_order)
    over = equal = None
    for r in result:
        gap = abs(r.age - result.records[r.twin].age)
        slack = r.codim - (g - 2 + n)
        if gap > slack and over is None:
            over = r.datum
        if gap == slack and not r.is_hyperelliptic and equal is None:
            equal = r.datum
    report.add("central_inequality", over)
    report.add("central_equality_hyperelliptic_only", equal)
    return report


def _mark_bound(N):
    return Fraction(N - 2, N)


def _sigma_bound(N, s):
    return Fraction((N - 2 * s) * (Fraction(N, s) + 5), 6 * N)


def lemma_bounds(datum, convention=MarkConvention.CORRECTED):
    """Compare each age component of ``datum`` with the same component of its twin.

    The marked-point part may differ by at most ``(N-2)/N`` per marked point;
    the branch points with ``gcd(i, N) = s`` by at most
    ``(N - 2s)(N/s + 5)/(6N)`` each.
    """
    require_valid(datum)
    N = datum.order
    mine = age_breakdown(datum, convention)
    other = age_breakdown(twin(datum), convention)
    report = VerificationReport(datum)

    marks = sum(ai for i, ai in enumerate(datum.a, 1) if gcd(i, N) == 1)
    diff = abs(mine.mark - other.mark)
    limit = _mark_bound(N) * marks
    report.add("mark_bound", None if diff <= limit else datum, f"|{diff}| <= {limit}")

    for s in mine.per_sigma:
        count = sum(di for i, di in enumerate(datum.d, 1) if gcd(i, N) == s)
        diff = abs(mine.per_sigma[s] - other.per_sigma[s])
        limit = _sigma_bound(N, s) * count
        report.add(f"sigma_bound[{s}]", None if diff <= limit else datum, f"|{diff}| <= {limit}")
    return report


def verify_lemma_bounds(g, n, convention=MarkConvention.CORRECTED, max_order=None):
    report = VerificationReport(_scope(g, n, convention))
    result = _sectors(g, n, convention, report, max_order)
    witness = None
    for r in result:
        if not lemma_bounds(r.datum, convention).passed:
            witness = r.datum
            break
    report.add("lemma_bounds", witness)
    return report


SUITES = {
    "twin": lambda g, n, c, m: verify_twin_identity(g, n, c, m),
    "minage": lambda g, n, c, m: verify_min_age(g, n, c, m),
    "codim": lambda g, n, c, m: verify_codim_bound(g, n, m),
    "lemma": lambda g, n, c, m: verify_lemma_bounds(g, n, c, m),
    "central": lambda g, n, c, m: verify_central_inequality(g, n, c, m),
}


def verify(g, n, suite="all", convention=MarkConvention.CORRECTED, max_order=None):
    names = list(SUITES) if suite == "all" else [suite]
    report = VerificationReport(_scope(g, n, convention))
    for name in names:
        report.extend(SUITES[name](g, n, convention, max_order))
    return report


# -- auxiliary functions from the proof -------------------------------------


def _check_divisor(N, s):
    if N < 2 or s < 1 or s >= N or N % s:
        raise ValueError(f"{s} is not a proper divisor of {N}")


def g_sigma(N, s, i):
    """``|sum_k k ({ik/N} - {(N-i)k/N})|`` for ``gcd(i, N) == s``."""
    _check_divisor(N, s)
    if not 1 <= i < N or gcd(i, N) != s:
        raise ValueError(f"gcd({i}, {N}) != {s}")
    total = sum(
        k * (frac_part(Fraction(i * k, N)) - frac_part(Fraction((N - i) * k, N)))
        for k in range(1, N)
    )
    return abs(total)


def g_sigma_closed(N, s):
    """Closed form ``(N/s - 1)(N - 2s)/6`` of the maximum of :func:`g_sigma`."""
    _check_divisor(N, s)
    return Fraction((N // s - 1) * (N - 2 * s), 6)


def sigma_pair_difference(N, i):
    """``sum_k k (sigma(k, i) - sigma(k, N - i))``."""
    return sum(k * (sigma_indicator(k, i, N) - sigma_indicator(k, N - i, N)) for k in range(1, N))


def mark_pair_difference(N, i):
    """``inv(i) - inv(N - i) = 2 inv(i) - N``, the per-mark twin gap times ``N``."""
    return mod_inverse(i, N) - mod_inverse(N - i, N)


def f_value(N, s):
    """``(N - s - 1)`` minus the per-point twin-gap bound, for real ``s`` in ``[1, N/2]``."""
    s = Fraction(s)
    if N < 2 or not 1 <= s <= Fraction(N, 2):
        raise ValueError(f"need 1 <= s <= N/2, got N={N}, s={s}")
    return (N - s - 1) - (N - 2 * s) * (N / s + 5) / (6 * N)


def f_value_expanded(N, s):
    s = Fraction(s)
    return ((6 - 1 / s) * N * N - (6 * s + 9) * N + 10 * s) / (6 * N)


def f_tilde(N):
    """``f_value(N, 1) - (N-2)/N == (N-2)(5N-11)/(6N)``."""
    return f_value(N, 1) - Fraction(N - 2, N)


def triple_lhs(N, sigmas):
    sigmas = [Fraction(s) for s in sigmas]
    inv = sum(1 / s for s in sigmas)
    tot = sum(sigmas)
    return (6 - inv) * N * N - (3 + 6 * tot) * N + 10 * tot


def triple_inequality(N, n, sigmas):
    """Strict inequality that closes the proof for ``g' = 0`` and three branch points."""
    sigmas = [Fraction(s) for s in sigmas]
    if len(sigmas) != 3 or not 0 <= n <= 3:
        raise ValueError("need exactly three sigmas and 0 <= n <= 3")
    if any(not 1 <= s <= Fraction(N, 2) for s in sigmas):
        raise ValueError(f"sigmas must lie in [1, N/2], got {sigmas}")
    return triple_lhs(N, sigmas) > 6 * n * (N - 2)


def rank_by_age(g, n, top=None, convention=MarkConvention.CORRECTED, max_order=None):
    """Sectors of M_{g,n} by increasing age; ties keep canonical order."""
    result = enumerate_sectors(g, n, convention=convention, max_order=max_order)
    ranked = sorted(enumerate(result.records), key=lambda kr: (kr[1].age, kr[0]))
    ranked = [r for _, r in ranked]
    return ranked if top is None else ranked[:top]
