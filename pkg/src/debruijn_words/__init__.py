"""De Bruijn sequences over primitive words, and short words containing all squares."""

from .debruijn import CircularSequence, circular_factors, generate_classic_db, is_debruijn_of
from .oracle import (
    CoverageReport,
    InconclusiveSearch,
    exhaustive_min_cover,
    verify_coverage,
    verify_nonsquare_gap_counting,
)
from .primitive_db import GreedyTrace, build_fu, generate_primitive_db, to_circular_db
from .squares import (
    SquareConstructionReport,
    construction_gap,
    fractional_power,
    generate_square_word,
    square_lower_bound,
)
from .words import (
    AlphabetParams,
    ConjugacyClass,
    ResourceCeilingError,
    Word,
    conjugacy_class_count,
    conjugacy_classes,
    count_primitive,
    delta,
    euler_phi,
    is_primitive,
    rotate,
)

__version__ = "0.1.0"
