"""Exact engine and workbench for E-clusters on the continuous type-A line."""

from .line import (
    MINUS,
    NEG_INF,
    PLUS,
    POS_INF,
    DefaultLadder,
    DoubledPoint,
    ExtendedRational,
    IntervalObject,
    Ladder,
    ScaledLadder,
)
from .compat import (
    e_compatible_euler,
    e_compatible_geometric,
    euler_pairing,
    exchange_middle,
    ext_direction,
    g_vector,
    is_degenerate,
)
from .clusters import (
    ClusterDescription,
    build_projective_cluster,
    build_t_infinity,
    build_t_n,
    verify_window,
)
from .mutation import AmbiguousExchange, MutationResult, NotMutable, is_mutable, mutate

__all__ = [
    "MINUS",
    "PLUS",
    "NEG_INF",
    "POS_INF",
    "DoubledPoint",
    "ExtendedRational",
    "IntervalObject",
    "Ladder",
    "DefaultLadder",
    "ScaledLadder",
    "g_vector",
    "euler_pairing",
    "e_compatible_euler",
    "e_compatible_geometric",
    "ext_direction",
    "exchange_middle",
    "is_degenerate",
    "ClusterDescription",
    "build_projective_cluster",
    "build_t_infinity",
    "build_t_n",
    "verify_window",
    "mutate",
    "is_mutable",
    "MutationResult",
    "NotMutable",
    "AmbiguousExchange",
]
