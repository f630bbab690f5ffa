"""Floor quotient partial order: exact relation tests, intervals, floor-multiple
numerical semigroups, and the poset Mobius function machinery.

All computation happens in the C++ extension; this package re-exports it.
"""

from ._floorq import (
    Characterization,
    ChainCount,
    ClassicalMobiusTable,
    GrowthSummary,
    IncidenceStats,
    InitialSplit,
    IntervalView,
    MobiusTable,
    Mu1Context,
    QuotientWitness,
    Ratio,
    SemigroupInfo,
    SetDelta,
    SignChangeSequence,
    alpha0,
    canonical_cutting_length,
    characterization,
    classical_mobius,
    count_chains,
    consecutive_delta,
    covering_edges,
    cutting_set,
    dilated_floor_commute_check,
    floor_reciprocal,
    gap,
    growth_scan,
    hall_chain_sum,
    incidence_stats,
    initial_interval,
    interval,
    interval_to_csv,
    is_floor_multiple,
    is_floor_quotient,
    longest_sign_run,
    mobius_table_to_csv,
    mobius_value,
    mu1,
    mu1_initial_table,
    multiplicity,
    scan_width_csv,
    semigroup_gaps,
    semigroup_info,
    sign_change_sequence,
    split,
    to_dot,
    width,
    zeta_real,
)

__version__ = "1.0.0"

__all__ = [
    "Characterization",
    "ChainCount",
    "ClassicalMobiusTable",
    "GrowthSummary",
    "IncidenceStats",
    "InitialSplit",
    "IntervalView",
    "MobiusTable",
    "Mu1Context",
    "QuotientWitness",
    "Ratio",
    "SemigroupInfo",
    "SetDelta",
    "SignChangeSequence",
    "alpha0",
    "canonical_cutting_length",
    "characterization",
    "classical_mobius",
    "count_chains",
    "consecutive_delta",
    "covering_edges",
    "cutting_set",
    "dilated_floor_commute_check",
    "floor_reciprocal",
    "gap",
    "growth_scan",
    "hall_chain_sum",
    "incidence_stats",
    "initial_interval",
    "interval",
    "interval_to_csv",
    "is_floor_multiple",
    "is_floor_quotient",
    "longest_sign_run",
    "mobius_table_to_csv",
    "mobius_value",
    "mu1",
    "mu1_initial_table",
    "multiplicity",
    "scan_width_csv",
    "semigroup_gaps",
    "semigroup_info",
    "sign_change_sequence",
    "split",
    "to_dot",
    "width",
    "zeta_real",
]
