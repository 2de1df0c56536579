"""Kac ring simulator: recurrence times and entropy for a toy model of
irreversibility, with classical and quantum pointer mechanisms and exact
brute-force oracles to check the Monte Carlo machinery against.
"""

from .ensemble import (
    EnsembleParams,
    EnsembleResult,
    EntropyOccupancy,
    RecurrenceHistogram,
    SweepRow,
    TrajectoryBundle,
    derive_seed,
    entropy_time_distribution,
    run_ensemble,
    sweep_sites,
)
from .fitting import FitResult, cauchy_like, fit_cauchy_like, fit_geometric, fit_linear
from .oracle import (
    chain_kernel,
    classical_entropy_series,
    classical_recurrence_map,
    quantum_expected_recurrence,
    symmetry_check,
)
from .qubit import MeasurementOutcome, QubitState, hadamard, measure, qubit_zero, sample_flip
from .ring import (
    Color,
    PointerPolicy,
    RingConfig,
    Trajectory,
    counts,
    default_cap,
    evolve,
    imbalance,
    imbalance_decay,
    relative_entropy,
    step,
)

__version__ = "0.1.0"

__all__ = [
    "Color",
    "PointerPolicy",
    "RingConfig",
    "Trajectory",
    "step",
    "evolve",
    "counts",
    "imbalance",
    "imbalance_decay",
    "relative_entropy",
    "default_cap",
    "QubitState",
    "MeasurementOutcome",
    "qubit_zero",
    "hadamard",
    "measure",
    "sample_flip",
    "EnsembleParams",
    "EnsembleResult",
    "EntropyOccupancy",
    "RecurrenceHistogram",
    "TrajectoryBundle",
    "SweepRow",
    "derive_seed",
    "run_ensemble",
    "sweep_sites",
    "entropy_time_distribution",
    "FitResult",
    "cauchy_like",
    "fit_cauchy_like",
    "fit_linear",
    "fit_geometric",
    "classical_recurrence_map",
    "classical_entropy_series",
    "symmetry_check",
    "chain_kernel",
    "quantum_expected_recurrence",
    "__version__",
]
