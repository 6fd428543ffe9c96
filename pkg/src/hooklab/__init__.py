"""Exact partition combinatorics and hook-length expansions of Dedekind eta powers."""

from .partitions import (
    BoxHook,
    Partition,
    PartitionError,
    classify,
    conjugate,
    double_distinct,
    durfee,
    enumerate_partitions,
    hook_lengths,
    hook_multiset,
    make_partition,
    principal_hooks,
    undouble,
)
from .series import TruncatedSeries, eta_power, poly_identity_check, power_product
from .cores import (
    CoreVector,
    PairSCDD,
    delta_profile,
    dd_to_pair,
    gks_phi,
    gks_phi_inv,
    is_t_core,
    make_pair,
    pair_to_dd,
    phi1,
    phi2,
    t_core_reduce,
    varphi,
    varphi_inv,
)
from .macdonald import macdonald_series, verify_macdonald
from .hooks import (
    CompactSet,
    bij_product_check,
    genfunc_pair,
    no_rhs,
    pair_Q,
    pair_rhs,
    symplectic_hook_sum,
    typeC_rhs,
)

__version__ = "0.1.0"
