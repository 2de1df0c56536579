import math

import numpy as np
import pytest

from kacring import QubitState, hadamard, measure, qubit_zero, sample_flip


def test_zero_state():
    state = qubit_zero()
    assert state.amp0 == 1.0
    assert state.amp1 == 0.0
    assert state.norm_error() == 0.0


def test_hadamard_creates_equal_superposition():
    plus = hadamard(qubit_zero())
    assert plus.amp0 == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert plus.amp1 == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert abs(plus.amp0) ** 2 + abs(plus.amp1) ** 2 == pytest.approx(1.0, abs=1e-15)


def test_hadamard_is_its_own_inverse():
    back = hadamard(hadamard(qubit_zero()))
    assert back.amp0 == pytest.approx(1.0, abs=1e-15)
    assert back.amp1 == pytest.approx(0.0, abs=1e-15)
    one = QubitState(0.0, 1.0)
    back = hadamard(hadamard(one))
    assert back.amp1 == pytest.approx(1.0, abs=1e-15)


def test_hadamard_rejects_unnormalized_state():
    with pytest.raises(ValueError):
        hadamard(QubitState(1.0, 1.0))


def test_measuring_basis_states_is_deterministic():
    rng = np.random.default_rng(0)
    for _ in range(32):
        out = measure(qubit_zero(), rng)
        assert out.bit == 0
        assert out.post_state == qubit_zero()
    one = QubitState(0.0, 1.0)
    for _ in range(32):
        out = measure(one, rng)
        assert out.bit == 1
        assert abs(out.post_state.amp1) == 1.0


def test_measurement_collapses_to_normalized_state():
    rng = np.random.default_rng(7)
    plus = hadamard(qubit_zero())
    seen = set()
    for _ in range(64):
        out = measure(plus, rng)
        seen.add(out.bit)
        assert out.post_state.norm_error() < 1e-12
        # collapsed state is the basis state that was observed
        assert abs((out.post_state.amp1 if out.bit else out.post_state.amp0)) == pytest.approx(
            1.0, abs=1e-12
        )
    assert seen == {0, 1}


def test_sample_flip_matches_prepare_gate_measure_composition():
    """The fast path must consume the stream exactly like the slow path."""
    rng_fast = np.random.default_rng(123)
    rng_slow = np.random.default_rng(123)
    for _ in range(10_000):
        via_circuit = measure(hadamard(qubit_zero()), rng_slow).bit == 1
        assert sample_flip(rng_fast) == via_circuit


def test_sample_flip_frequency_is_near_half():
    rng = np.random.default_rng(99)
    hits = sum(sample_flip(rng) for _ in range(100_000))
    assert 0.49 < hits / 100_000 < 0.51
