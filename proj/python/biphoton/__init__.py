"""Two-photon interferometry simulator.

Python bindings for the C++ core: single-photon and entangled-pair
interference, fringe-offset and CHSH checks, seeded Monte Carlo sampling,
and the labeled-state measurement chain.
"""

from biphoton._core import (
    ChshEstimate,
    CoherenceReport,
    CoincidenceTable,
    PhaseConvention,
    PhaseOffsets,
    SampleStats,
    StateVector,
    Subsystem,
    SweepResult,
    Table1Row,
    TrialRecord,
    __version__,
    apply_measurement,
    beam_splitter_matrix,
    chsh_value,
    coherence_report,
    coincidence_table,
    correlation_curve,
    default_phase_grid,
    detector_ready_state,
    equal_path_superposition,
    estimate_chsh,
    mzi_probabilities,
    oracle_coincidence_probabilities,
    outcome_distribution,
    path_entangled_pair,
    phase_offset_check,
    propagate,
    sample_trials,
    table1,
    tally,
    tensor,
)

__all__ = [
    "ChshEstimate",
    "CoherenceReport",
    "CoincidenceTable",
    "PhaseConvention",
    "PhaseOffsets",
    "SampleStats",
    "StateVector",
    "Subsystem",
    "SweepResult",
    "Table1Row",
    "TrialRecord",
    "__version__",
    "apply_measurement",
    "beam_splitter_matrix",
    "chsh_value",
    "coherence_report",
    "coincidence_table",
    "correlation_curve",
    "default_phase_grid",
    "detector_ready_state",
    "equal_path_superposition",
    "estimate_chsh",
    "mzi_probabilities",
    "oracle_coincidence_probabilities",
    "outcome_distribution",
    "path_entangled_pair",
    "phase_offset_check",
    "propagate",
    "sample_trials",
    "table1",
    "tally",
    "tensor",
]
