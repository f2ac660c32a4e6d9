"""Twisted sectors of the moduli spaces M_{g,n}: enumeration, exact ages,
checks of the minimum-age theorem, and stable orbifold Betti numbers."""

from .age import AgeBreakdown, MarkConvention, age, age_breakdown, mark_weight, point_weight, sigma_indicator
from .arith import frac_part, mod_inverse, multinomial, rat
from .enumeration import (
    EnumerationResult,
    SectorRecord,
    admissible_data,
    count_table,
    enumerate_sectors,
    order_bound,
    sanity_sweep,
)
from .sector import (
    InvalidDatumError,
    SectorDatum,
    codimension,
    hyperelliptic_datum,
    is_hyperelliptic,
    multiplicity,
    sector_dimension,
    total_genus,
    twin,
    validate,
)
from .stable import (
    BettiTable,
    Unavailable,
    corollary_range,
    harer_iso_range,
    orbifold_equals_ordinary,
    orbifold_stable_betti,
    stable_betti,
)

__version__ = "0.1.0"
