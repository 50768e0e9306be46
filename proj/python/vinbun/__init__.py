"""Point counts, trace functions and representation data for the SL2 local models."""

from ._core import (
    BudgetExceeded,
    DrinfeldBudgetExceeded,
    LaurentValue,
    StalkUndetermined,
    character,
    character_table_csv,
    count_points,
    drinfeld_value,
    equations,
    ic_kernel,
    kernel_of_n,
    nearby_vs_boundary,
    omega_point_count,
    per_fiber_uniformity,
    predicted_stratum_count,
    reconstruct_plo,
    run_suite,
    schur_weyl,
    strata_counts,
    trace,
)

__all__ = [
    "BudgetExceeded",
    "DrinfeldBudgetExceeded",
    "LaurentValue",
    "StalkUndetermined",
    "character",
    "character_table_csv",
    "count_points",
    "drinfeld_value",
    "equations",
    "ic_kernel",
    "kernel_of_n",
    "nearby_vs_boundary",
    "omega_point_count",
    "per_fiber_uniformity",
    "predicted_stratum_count",
    "reconstruct_plo",
    "run_suite",
    "schur_weyl",
    "strata_counts",
    "trace",
]
