import numpy as np
import pytest

from kacring import (
    RingConfig,
    chain_kernel,
    classical_entropy_series,
    classical_recurrence_map,
    evolve,
    quantum_expected_recurrence,
    symmetry_check,
)


class TestClassicalRecurrenceMap:
    def test_three_sites(self):
        table = classical_recurrence_map(3)
        assert len(table) == 8
        assert table["WBW"] == 2
        assert table["BWB"] == 2
        # every other config needs the full 2n steps
        assert all(t == 6 for cfg, t in table.items() if cfg not in ("WBW", "BWB"))

    def test_power_of_two_sizes_recur_at_exactly_two_n(self):
        for n in (1, 2, 4, 8):
            assert set(classical_recurrence_map(n).values()) == {2 * n}

    def test_five_sites_split(self):
        values = sorted(classical_recurrence_map(5).values())
        assert values.count(2) == 2
        assert values.count(10) == 30

    def test_bound(self):
        for n in range(1, 9):
            assert all(1 <= t <= 2 * n for t in classical_recurrence_map(n).values())

    def test_range_check(self):
        with pytest.raises(ValueError, match="outside supported range"):
            classical_recurrence_map(0)
        with pytest.raises(ValueError, match="outside supported range"):
            classical_recurrence_map(21)


class TestEntropySeries:
    def test_alternating_three_sites(self):
        assert classical_entropy_series("WBW", 6) == [0, 3, 0, 3, 0, 3, 0]

    def test_matches_fast_path_for_small_rings(self):
        # naive list-based stepping against the bit-packed engine
        for n in range(1, 8):
            for bits in range(1 << n):
                config = RingConfig(bits=bits, n=n)
                traj = evolve(config, cap=2 * n, stop_at_recurrence=False)
                assert classical_entropy_series(config, 2 * n) == list(traj.entropy_series)

    def test_symmetry_check(self):
        for n in range(1, 8):
            assert symmetry_check(n)
        with pytest.raises(ValueError):
            symmetry_check(11)


class TestChainKernel:
    def test_shape_and_state_order(self):
        kernel, states = chain_kernel(2)
        assert kernel.shape == (8, 8)
        assert len(states) == 8
        assert len(set(states)) == 8
        assert all(0 <= bits < 4 and phase in (0, 1) for bits, phase in states)

    def test_rows_are_exact_distributions(self):
        for n in (1, 2, 3):
            kernel, _ = chain_kernel(n)
            assert np.all(kernel.sum(axis=1) == 1.0)

    def test_doubly_stochastic(self):
        # both flip branches are permutations of the state space, so the
        # average preserves the uniform distribution exactly
        for n in (1, 2, 3, 4):
            kernel, _ = chain_kernel(n)
            assert np.all(kernel.sum(axis=0) == 1.0)

    def test_range_check(self):
        with pytest.raises(ValueError):
            chain_kernel(7)


class TestQuantumExpectedRecurrence:
    def test_single_site(self):
        assert quantum_expected_recurrence("B") == pytest.approx(2.0, abs=1e-9)
        assert quantum_expected_recurrence("W") == pytest.approx(2.0, abs=1e-9)

    def test_every_config_expects_two_to_the_n(self):
        for n in (1, 2, 3, 4):
            for bits in range(1 << n):
                value = quantum_expected_recurrence(RingConfig(bits=bits, n=n))
                assert value == pytest.approx(2.0**n, rel=1e-9)

    def test_five_and_six_site_spot_checks(self):
        assert quantum_expected_recurrence("BWBWB") == pytest.approx(32.0, rel=1e-9)
        assert quantum_expected_recurrence("BBWWBW") == pytest.approx(64.0, rel=1e-9)

    def test_color_swap_invariance(self):
        for text in ("BWB", "BBWW", "BWWWB"):
            swapped = text.translate(str.maketrans("BW", "WB"))
            assert quantum_expected_recurrence(text) == pytest.approx(
                quantum_expected_recurrence(swapped), rel=1e-12
            )

    def test_monte_carlo_agreement_three_sites(self):
        from kacring import EnsembleParams, PointerPolicy, run_ensemble

        params = EnsembleParams(
            sites=3,
            runs=4000,
            policy=PointerPolicy.QUANTUM,
            master_seed=314,
            cap=2048,
            initial=RingConfig.from_string("BWW"),
        )
        result = run_ensemble(params, keep_trajectories=False)
        assert result.histogram.overflow == 0
        exact = quantum_expected_recurrence("BWW")
        assert abs(result.mean_recurrence - exact) < 3 * result.stderr
