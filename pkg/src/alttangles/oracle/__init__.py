"""Independent diagram enumeration used to cross-check the analytic series."""
from .counts import (
    FREE_ENERGY_CAP,
    TANGLE_CAP,
    TWO_POINT_CAP,
    DiagramFilter,
    OracleCapError,
    count_free_energy,
    count_tangles,
    count_two_point,
    labeled_vacuum_pairings,
)
from .fatgraph import FatGraph

__all__ = [
    "FREE_ENERGY_CAP",
    "TANGLE_CAP",
    "TWO_POINT_CAP",
    "DiagramFilter",
    "FatGraph",
    "OracleCapError",
    "count_free_energy",
    "count_tangles",
    "count_two_point",
    "labeled_vacuum_pairings",
]
