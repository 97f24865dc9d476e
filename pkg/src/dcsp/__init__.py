"""Decentralized joint sparsity-pattern recovery.

Greedy subspace-pursuit recovery of a support set shared by all nodes of a
network, under exact per-scalar communication accounting: a fully
collaborative variant (``ssp_run``), a neighborhood-collaborative variant
with majority-rule fusion (``dcsp_run``), closed-form cost models for both
plus the standard comparison baselines, and a Monte Carlo harness that
sweeps measurement count or network scale.
"""

from .costs import (
    ALGORITHMS,
    CostParams,
    cost_dcsp,
    cost_dcsp_general,
    cost_ssp,
    cost_table1,
)
from .errors import (
    DcspError,
    DegenerateSignalError,
    IndexOutOfRangeError,
    InsufficientDistinctError,
    InvalidDegreeError,
    RankDeficientError,
    TooLargeError,
)
from .experiments import (
    ExperimentConfig,
    SweepRow,
    TrialResult,
    default_l_grid,
    default_m_grid,
    derive_trial_seed,
    run_fig1,
    run_fig2,
    run_fig3,
    run_single_trial,
    run_sweep,
)
from .linalg import (
    as_index_set,
    column_submatrix,
    correlate,
    lstsq,
    max_ind,
    max_occ,
    resid,
)
from .network import (
    Message,
    Topology,
    WireCounter,
    broadcast_all,
    exchange_neighbors,
    full_topology,
    ring_topology,
    topology_from_listing,
)
from .problems import (
    ProblemConfig,
    ProblemInstance,
    dump_instance,
    generate,
    load_instance,
    success,
)
from .pursuit import NodeState, RunResult, dcsp_run, exhaustive_decoder, ssp_run

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "CostParams",
    "DcspError",
    "DegenerateSignalError",
    "ExperimentConfig",
    "IndexOutOfRangeError",
    "InsufficientDistinctError",
    "InvalidDegreeError",
    "Message",
    "NodeState",
    "ProblemConfig",
    "ProblemInstance",
    "RankDeficientError",
    "RunResult",
    "SweepRow",
    "TooLargeError",
    "Topology",
    "TrialResult",
    "WireCounter",
    "as_index_set",
    "broadcast_all",
    "column_submatrix",
    "correlate",
    "cost_dcsp",
    "cost_dcsp_general",
    "cost_ssp",
    "cost_table1",
    "dcsp_run",
    "default_l_grid",
    "default_m_grid",
    "derive_trial_seed",
    "dump_instance",
    "exchange_neighbors",
    "exhaustive_decoder",
    "full_topology",
    "generate",
    "load_instance",
    "lstsq",
    "max_ind",
    "max_occ",
    "resid",
    "ring_topology",
    "run_fig1",
    "run_fig2",
    "run_fig3",
    "run_single_trial",
    "run_sweep",
    "ssp_run",
    "success",
    "topology_from_listing",
]
