"""Minimal single-qubit pointer: prepare, Hadamard, measure, reset.

Only one qubit, one gate, and a computational-basis measurement are ever
needed, so the state is a bare pair of complex amplitudes rather than a
circuit-simulator object. Global phase is not normalized away; measurement
probabilities do not depend on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["QubitState", "MeasurementOutcome", "qubit_zero", "hadamard", "measure", "sample_flip"]

_NORM_TOL = 1e-12
_SQRT_HALF = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class QubitState:
    """Amplitudes over the computational basis; |amp0|^2 + |amp1|^2 = 1."""

    amp0: complex
    amp1: complex

    def norm_error(self) -> float:
        return abs(abs(self.amp0) ** 2 + abs(self.amp1) ** 2 - 1.0)


@dataclass(frozen=True)
class MeasurementOutcome:
    """Measured bit plus the collapsed post-measurement state."""

    bit: int
    post_state: QubitState


def qubit_zero() -> QubitState:
    """The ground state |0>."""
    return QubitState(amp0=1.0 + 0.0j, amp1=0.0 + 0.0j)


def hadamard(state: QubitState) -> QubitState:
    """Apply the Hadamard gate: maps |0> to the equal superposition."""
    if state.norm_error() > _NORM_TOL:
        raise ValueError(
            f"qubit state is not normalized (error {state.norm_error():.3g})"
        )
    return QubitState(
        amp0=(state.amp0 + state.amp1) * _SQRT_HALF,
        amp1=(state.amp0 - state.amp1) * _SQRT_HALF,
    )


def measure(state: QubitState, rng: np.random.Generator) -> MeasurementOutcome:
    """Sample a computational-basis measurement and collapse the state.

    Consumes exactly one uniform variate from ``rng`` and compares it
    against |amp1|^2, returning bit 1 on a hit.
    """
    p_one = abs(state.amp1) ** 2
    bit = 1 if rng.random() < p_one else 0
    post = QubitState(amp0=0.0j, amp1=1.0 + 0.0j) if bit else qubit_zero()
    return MeasurementOutcome(bit=bit, post_state=post)


# One flip probability per pointer cycle: |<1|H|0>|^2, kept as the exact
# float the gate arithmetic produces so sample_flip consumes the stream
# identically to measure(hadamard(qubit_zero()), rng).
_P_FLIP = abs(hadamard(qubit_zero()).amp1) ** 2


def sample_flip(rng: np.random.Generator) -> bool:
    """One full pointer cycle: prepare |0>, apply Hadamard, measure, reset.

    Returns True when the measurement collapses to |1>. Each call is an
    independent fresh cycle; no state survives between calls.
    """
    return rng.random() < _P_FLIP
