"""Exact counting and enumeration of separation-constrained k-subsets.

Counts k-subsets of n objects on a line or a circle such that no two
chosen objects have exactly m-1, 2m-1, ..., pm-1 objects between them
(equivalently: no pairwise distance is m, 2m, ..., pm; on the circle both
arcs count).  Everything is exact integer/rational arithmetic, every
formula is cross-checked against a brute-force oracle, and an audit
subsystem sweeps each identity over parameter grids.
"""

from .binomials import binom_gen, binom_nat, falling_factorial
from .counting import (
    CountQuery,
    PartitionSizes,
    SeparationParams,
    Topology,
    compositions,
    count_query,
    g_closed,
    g_from_h,
    h_closed_1,
    h_closed_2,
    h_closed_3,
    h_composition,
    partition_sizes,
)
from .omega_phi import (
    OmegaQuery,
    SingularTermError,
    gould_check,
    hwang_wei_check,
    omega_closed_1,
    omega_closed_2,
    omega_closed_3,
    omega_direct,
    phi_closed,
    phi_direct,
)
from .oracle import (
    DEFAULT_CAP,
    EnumerationCapError,
    count_brute,
    is_separate_circle,
    is_separate_line,
    kernel_backend,
    list_brute,
)
from .series import PowerSeries, binomial_series, g_series, h_series, phi_residue
from .audit import (
    AuditReport,
    GridSpec,
    IdentityId,
    bijection_count_check,
    g_alternating,
    g_recurrence,
    h_from_g,
    h_recurrence,
    run_audit,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "binom_nat",
    "binom_gen",
    "falling_factorial",
    "PowerSeries",
    "binomial_series",
    "phi_residue",
    "h_series",
    "g_series",
    "Topology",
    "SeparationParams",
    "CountQuery",
    "PartitionSizes",
    "partition_sizes",
    "compositions",
    "count_query",
    "h_composition",
    "h_closed_1",
    "h_closed_2",
    "h_closed_3",
    "g_closed",
    "g_from_h",
    "OmegaQuery",
    "SingularTermError",
    "omega_direct",
    "omega_closed_1",
    "omega_closed_2",
    "omega_closed_3",
    "phi_direct",
    "phi_closed",
    "hwang_wei_check",
    "gould_check",
    "DEFAULT_CAP",
    "EnumerationCapError",
    "count_brute",
    "list_brute",
    "is_separate_line",
    "is_separate_circle",
    "kernel_backend",
    "IdentityId",
    "GridSpec",
    "AuditReport",
    "run_audit",
    "h_recurrence",
    "g_recurrence",
    "g_alternating",
    "h_from_g",
    "bijection_count_check",
]
