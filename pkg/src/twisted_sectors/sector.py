"""Admissible data for twisted sectors of M_{g,n}.

A datum ``(g', N; d_1..d_{N-1}, a_1..a_{N-1})`` records a connected cyclic
cover of order ``N`` of a genus ``g'`` curve by a genus ``g`` curve: ``d_i``
counts branch points of type ``i`` and ``a_i`` how many of the ``n`` marked
points sit over them. Vectors are stored densely and indexed from ``i = 1``,
so ``d[i - 1]`` is ``d_i``.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd
import json

from .arith import multinomial

E_SHAPE = "E_SHAPE"
E_STABILITY = "E_STABILITY"
E_RH = "E_RH"
E_FAN = "E_FAN"
E_MARKS = "E_MARKS"
E_CONNECT = "E_CONNECT"
E_INVALID = "E_INVALID"

DATUM_KEYS = ("g", "n", "g_prime", "order", "d", "a")


@dataclass(frozen=True)
class Violation:
    code: str
    message: str

    def __str__(self):
        return f"{self.code}: {self.message}"


class InvalidDatumError(ValueError):
    """Raised when an operation needs a valid datum and did not get one."""

    code = E_INVALID

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True, order=True)
class SectorDatum:
    g: int
    n: int
    g_prime: int
    order: int
    d: tuple
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def sum_d(self):
        return sum(self.d)

    def sort_key(self):
        """Canonical ordering: order, then g', then d and a lexicographically."""
        return (self.order, self.g_prime, self.d, self.a)

    def to_dict(self):
        return {
            "g": self.g,
            "n": self.n,
            "g_prime": self.g_prime,
            "order": self.order,
            "d": list(self.d),
            "a": list(self.a),
        }

    @classmethod
    def from_dict(cls, data):
        """Build a datum from its JSON mapping; extra keys are ignored."""
        if not isinstance(data, dict):
            raise ValueError("datum must be a JSON object")
        missing = [k for k in DATUM_KEYS if k not in data]
        if missing:
            raise ValueError(f"datum is missing keys: {', '.join(missing)}")
        for key in ("g", "n", "g_prime", "order"):
            if not _is_int(data[key]):
                raise ValueError(f"{key} must be an integer")
        for key in ("d", "a"):
            if not isinstance(data[key], list) or not all(_is_int(x) for x in data[key]):
                raise ValueError(f"{key} must be a list of integers")
        return cls(
            g=data["g"],
            n=data["n"],
            g_prime=data["g_prime"],
            order=data["order"],
            d=data["d"],
            a=data["a"],
        )

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed JSON: {exc}") from exc
        return cls.from_dict(data)

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def ramification_weight(i, N):
    """Coefficient ``N - gcd(i, N)`` of ``d_i`` in Riemann-Hurwitz."""
    return N - gcd(i, N)


def validate(datum):
    """Return the list of violated admissibility conditions (empty when valid)."""
    g, n, gp, N, d, a = (datum.g, datum.n, datum.g_prime, datum.order, datum.d, datum.a)

    shape = []
    if min(g, n, gp) < 0:
        shape.append("g, n and g' must be nonnegative")
    if N < 2:
        shape.append(f"order must be >= 2, got {N}")
    elif len(d) != N - 1 or len(a) != N - 1:
        shape.append(f"d and a must have length {N - 1}, got {len(d)} and {len(a)}")
    if any(x < 0 for x in d) or any(x < 0 for x in a):
        shape.append("d and a entries must be nonnegative")
    if shape:
        return [Violation(E_SHAPE, "; ".join(shape))]

    out = []
    if 2 * g - 2 + n <= 0:
        out.append(Violation(E_STABILITY, f"2g-2+n = {2 * g - 2 + n} is not positive"))

    rhs = N * (2 * gp - 2) + sum(ramification_weight(i, N) * di for i, di in enumerate(d, 1))
    if rhs != 2 * g - 2:
        out.append(Violation(E_RH, f"Riemann-Hurwitz gives 2g-2 = {rhs}, expected {2 * g - 2}"))

    fan = sum(i * di for i, di in enumerate(d, 1))
    if fan % N:
        out.append(Violation(E_FAN, f"sum i*d_i = {fan} is not divisible by {N}"))

    marks = []
    if sum(a) != n:
        marks.append(f"sum a_i = {sum(a)} != n = {n}")
    over = [i for i, (ai, di) in enumerate(zip(a, d), 1) if ai > di]
    if over:
        marks.append(f"a_i > d_i at i = {over}")
    noncoprime = [i for i, ai in enumerate(a, 1) if ai and gcd(i, N) != 1]
    if noncoprime:
        marks.append(f"marks on non-totally-ramified points i = {noncoprime}")
    if marks:
        out.append(Violation(E_MARKS, "; ".join(marks)))

    if n == 0 and gp == 0:
        common = reduce(gcd, (i for i, di in enumerate(d, 1) if di), N)
        if common != 1:
            out.append(Violation(E_CONNECT, f"gcd of N and branch types is {common}, cover is disconnected"))
    return out


def is_valid(datum):
    return not validate(datum)


def require_valid(datum):
    violations = validate(datum)
    if violations:
        raise InvalidDatumError(violations)
    return datum


def total_genus(g_prime, order, d):
    """Solve Riemann-Hurwitz for ``g``; ``None`` if the result is odd or negative."""
    N = order
    if N < 2 or len(d) != N - 1 or any(x < 0 for x in d) or g_prime < 0:
        raise ValueError(f"{E_SHAPE}: bad shape for order {N}: g'={g_prime}, d={list(d)}")
    rhs = N * (2 * g_prime - 2) + sum(ramification_weight(i, N) * di for i, di in enumerate(d, 1))
    if rhs % 2:
        return None
    g = rhs // 2 + 1
    return g if g >= 0 else None


def codimension(datum):
    require_valid(datum)
    return 3 * datum.g - 3 * datum.g_prime - datum.sum_d + datum.n


def sector_dimension(datum):
    require_valid(datum)
    return 3 * datum.g_prime - 3 + datum.sum_d


def twin(datum):
    """The datum of the inverse generator: ``d`` and ``a`` reversed."""
    require_valid(datum)
    return SectorDatum(
        g=datum.g,
        n=datum.n,
        g_prime=datum.g_prime,
        order=datum.order,
        d=datum.d[::-1],
        a=datum.a[::-1],
    )


def is_hyperelliptic(datum):
    """True for the hyperelliptic sector with all marks at Weierstrass points."""
    return (
        datum.g_prime == 0
        and datum.order == 2
        and datum.d == (2 * datum.g + 2,)
        and datum.a == (datum.n,)
    )


def hyperelliptic_datum(g, n):
    return SectorDatum(g=g, n=n, g_prime=0, order=2, d=(2 * g + 2,), a=(n,))


def multiplicity(datum):
    """Number of twisted sectors obtained by permuting the marked points."""
    return multinomial(datum.n, datum.a)
