"""Murasugi sums made computable: braid-word composition and splitting,
linear-plumbing rewrites, exact integer invariants, and certified bounds
for the minimal sum size d_M.
"""

from .braid import (
    BraidSyntaxError,
    BraidWord,
    CompositeBraid,
    ShuffleError,
    SplitIndexError,
    closure_data,
    format_braid,
    is_knot,
    mirror_braid,
    murasugi_concat,
    parse_braid,
    split_braid,
)
from .distances import (
    DistanceData,
    DistanceDataError,
    DMInterval,
    GonPlan,
    dm_interval,
    dm_lower_bounds,
    dm_upper_bound,
    gon_merge,
    load_distance_data,
    plan_triple_sum,
)
from .laurent import LaurentPolynomial
from .plumbing import (
    PlumbingError,
    PlumbingWord,
    RewriteTrace,
    SearchBudget,
    boundary_profile,
    normalize,
    rewrite_search,
    star4,
    two_bridge_fraction,
)
from .profiles import InvariantProfile, identify, profile
from .surgery import (
    TripleBudget,
    TripleFailure,
    TripleWitness,
    TwistAnnulus,
    apply_crossing_changes,
    search_triples,
    unknot_certificate,
    unknotting_crossing_set,
    verify_triple,
)
from .table import KnotTableEntry, TableError, load_table, lookup, table_names

__version__ = "0.1.0"

__all__ = [
    "BraidSyntaxError",
    "BraidWord",
    "CompositeBraid",
    "DistanceData",
    "DistanceDataError",
    "DMInterval",
    "GonPlan",
    "InvariantProfile",
    "KnotTableEntry",
    "LaurentPolynomial",
    "PlumbingError",
    "PlumbingWord",
    "RewriteTrace",
    "SearchBudget",
    "ShuffleError",
    "SplitIndexError",
    "TableError",
    "TripleBudget",
    "TripleFailure",
    "TripleWitness",
    "TwistAnnulus",
    "apply_crossing_changes",
    "boundary_profile",
    "closure_data",
    "dm_interval",
    "dm_lower_bounds",
    "dm_upper_bound",
    "format_braid",
    "gon_merge",
    "identify",
    "is_knot",
    "load_distance_data",
    "load_table",
    "lookup",
    "mirror_braid",
    "murasugi_concat",
    "normalize",
    "parse_braid",
    "plan_triple_sum",
    "profile",
    "rewrite_search",
    "search_triples",
    "split_braid",
    "star4",
    "table_names",
    "two_bridge_fraction",
    "unknot_certificate",
    "unknotting_crossing_set",
    "verify_triple",
]
