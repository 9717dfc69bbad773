"""V-polynomial and Potts partition functions of weighted graphs."""

from ._core import (
    CapacityError,
    Graph,
    InputError,
    ParseError,
    SingularInputError,
    VpottsError,
    connected_partition_count,
    crosscheck,
    parse,
    rfim,
    run,
    spanning_forest_count,
    spanning_tree_count,
    tutte,
    v_polynomial,
    z_ext,
    z_zero,
    zt,
)

__all__ = [
    "CapacityError",
    "Graph",
    "InputError",
    "ParseError",
    "SingularInputError",
    "VpottsError",
    "connected_partition_count",
    "crosscheck",
    "parse",
    "rfim",
    "run",
    "spanning_forest_count",
    "spanning_tree_count",
    "tutte",
    "v_polynomial",
    "z_ext",
    "z_zero",
    "zt",
]
