"""Seeded, reproducible Monte Carlo ensembles of Kac ring runs.

Every run r of an ensemble gets its own random stream, seeded by mixing
(master_seed, r) through the splitmix64 finalizer. That derivation is
normative: results are bit-identical for a given parameter set no matter
how runs are scheduled or how many worker processes execute them. Each
run's stream is consumed in a fixed order: first the random initial
configuration (when requested), then one draw per quantum pointer decision.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .ring import PointerPolicy, RingConfig, default_cap, evolve

__all__ = [
    "derive_seed",
    "EnsembleParams",
    "RecurrenceHistogram",
    "EntropyOccupancy",
    "TrajectoryBundle",
    "EnsembleResult",
    "SweepRow",
    "run_ensemble",
    "sweep_sites",
    "entropy_time_distribution",
]

_MASK64 = (1 << 64) - 1


def derive_seed(master_seed: int, index: int) -> int:
    """Mix (master_seed, index) into an independent 64-bit stream seed.

    Splitmix64: add the golden-ratio increment ``index + 1`` times, then
    apply the xor-shift/multiply finalizer. The exact constants below are
    part of the reproducibility contract.
    """
    z = (master_seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class EnsembleParams:
    """Parameters of one ensemble: R independent runs of an n-site ring.

    ``initial`` selects the starting configuration per run: the string
    "random" (uniform over all 2**n colorings, redrawn each run),
    "all-black", or a fixed :class:`RingConfig` reused by every run.
    """

    sites: int
    runs: int
    policy: PointerPolicy = PointerPolicy.CLASSICAL
    master_seed: int = 0
    cap: int | None = None
    initial: RingConfig | str = "random"

    def __post_init__(self) -> None:
        if self.sites < 1:
            raise ValueError(f"sites must be >= 1, got {self.sites}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if isinstance(self.initial, RingConfig):
            if self.initial.n != self.sites:
                raise ValueError(
                    f"configuration length {self.initial.n} does not match sites {self.sites}"
                )
        elif self.initial not in ("random", "all-black"):
            raise ValueError(
                f"initial must be 'random', 'all-black', or a RingConfig, got {self.initial!r}"
            )

    @property
    def resolved_cap(self) -> int:
        if self.cap is not None:
            return self.cap
        return default_cap(self.policy, self.sites)


@dataclass
class RecurrenceHistogram:
    """Counts of observed recurrence times; capped runs land in overflow."""

    bins: dict[int, int]
    overflow: int

    @property
    def total(self) -> int:
        return sum(self.bins.values()) + self.overflow


@dataclass
class EntropyOccupancy:
    """Fraction of a run's duration spent at each entropy level 0..n.

    Per run the occupancy over timesteps [0, T) sums to exactly 1; the
    arrays hold the across-run mean and standard error. Runs that hit the
    cap are excluded and counted in ``overflow``.
    """

    mean_fraction: np.ndarray
    stderr: np.ndarray
    runs_used: int
    overflow: int


@dataclass
class TrajectoryBundle:
    """Entropy series of recurred runs, for normalized-time overlays.

    Each element is (run index, entropy series over t = 0..T inclusive);
    normalized time is the exact rational t / T, no interpolation.
    """

    series: list[tuple[int, np.ndarray]] = field(default_factory=list)


@dataclass
class EnsembleResult:
    params: EnsembleParams
    histogram: RecurrenceHistogram
    occupancy: EntropyOccupancy
    bundle: TrajectoryBundle | None
    mean_recurrence: float
    stderr: float


@dataclass(frozen=True)
class SweepRow:
    n: int
    runs: int
    mean_recurrence: float
    stderr: float
    overflow: int


def _initial_bits(params: EnsembleParams, rng: np.random.Generator) -> int:
    if isinstance(params.initial, RingConfig):
        return params.initial.bits
    if params.initial == "all-black":
        return (1 << params.sites) - 1
    return RingConfig.random(params.sites, rng).bits


def _run_one(params: EnsembleParams, run_index: int, keep_series: bool):
    """Execute run ``run_index`` and reduce it to (recurrence, occupancy, series)."""
    rng = np.random.default_rng(np.random.PCG64(derive_seed(params.master_seed, run_index)))
    initial = RingConfig(bits=_initial_bits(params, rng), n=params.sites)
    traj = evolve(initial, params.policy, rng=rng, cap=params.resolved_cap)
    if traj.recurrence_time is None:
        return None, None, None
    # Occupancy counts timesteps [0, T): the recurring endpoint is excluded
    # so per-run fractions sum to exactly 1.
    occ = np.bincount(traj.entropy_series[:-1], minlength=params.sites + 1)
    series = traj.entropy_series if keep_series else None
    return traj.recurrence_time, occ, series


def _run_block(args) -> list:
    params, start, stop, keep_series = args
    return [_run_one(params, r, keep_series) for r in range(start, stop)]


def _collect_records(params: EnsembleParams, workers: int, keep_series: bool) -> list:
    if workers <= 1:
        return [_run_one(params, r, keep_series) for r in range(params.runs)]
    block = max(1, -(-params.runs // (workers * 8)))
    chunks = [
        (params, start, min(start + block, params.runs), keep_series)
        for start in range(0, params.runs, block)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_run_block, chunks))
    # Chunks are keyed by run index, so concatenation restores run order
    # regardless of which worker produced which block.
    return [record for part in parts for record in part]


def run_ensemble(
    params: EnsembleParams,
    workers: int = 1,
    keep_trajectories: bool = True,
) -> EnsembleResult:
    """Run R independent rings and aggregate every recurrence statistic.

    Parameters
    ----------
    params : EnsembleParams
        Ensemble definition, including the master seed.
    workers : int
        Worker processes; any value yields bit-identical results because
        per-run streams are derived from (master_seed, run index) and the
        reduction always happens in run order.
    keep_trajectories : bool
        Collect the per-run entropy series bundle (memory scales with
        runs x recurrence time); statistics are unaffected when off.

    Returns
    -------
    EnsembleResult
        Histogram, occupancy, optional bundle, and the mean recurrence
        time with its standard error (over recurred runs only; capped
        runs are reported via overflow counts, never dropped silently).
    """
    records = _collect_records(params, workers, keep_trajectories)

    times = [rec for rec, _, _ in records if rec is not None]
    overflow = params.runs - len(times)
    bins: dict[int, int] = {}
    for rec in times:
        bins[rec] = bins.get(rec, 0) + 1

    if times:
        arr = np.asarray(times, dtype=np.float64)
        mean = float(arr.mean())
        stderr = float(arr.std(ddof=1) / np.sqrt(arr.size)) if arr.size > 1 else 0.0
    else:
        mean = float("nan")
        stderr = float("nan")

    occ_rows = [occ / occ.sum() for _, occ, _ in records if occ is not None]
    if occ_rows:
        occ_mat = np.asarray(occ_rows, dtype=np.float64)
        occ_mean = occ_mat.mean(axis=0)
        if occ_mat.shape[0] > 1:
            occ_err = occ_mat.std(axis=0, ddof=1) / np.sqrt(occ_mat.shape[0])
        else:
            occ_err = np.zeros(params.sites + 1)
    else:
        occ_mean = np.full(params.sites + 1, np.nan)
        occ_err = np.full(params.sites + 1, np.nan)

    bundle = None
    if keep_trajectories:
        bundle = TrajectoryBundle(
            series=[
                (r, series)
                for r, (rec, _, series) in enumerate(records)
                if rec is not None and series is not None
            ]
        )

    return EnsembleResult(
        params=params,
        histogram=RecurrenceHistogram(bins=bins, overflow=overflow),
        occupancy=EntropyOccupancy(
            mean_fraction=occ_mean,
            stderr=occ_err,
            runs_used=len(occ_rows),
            overflow=overflow,
        ),
        bundle=bundle,
        mean_recurrence=mean,
        stderr=stderr,
    )


def sweep_sites(
    min_n: int,
    max_n: int,
    runs: int,
    policy: PointerPolicy = PointerPolicy.CLASSICAL,
    master_seed: int = 0,
    cap: int | None = None,
    initial: str = "random",
    workers: int = 1,
) -> list[SweepRow]:
    """Mean recurrence time versus ring size, one ensemble per n.

    Each size gets an independent master seed derived from
    ``(master_seed, n)``, so adding or removing sizes never perturbs the
    others. Rows are emitted in ascending n.
    """
    if not 1 <= min_n <= max_n:
        raise ValueError(f"invalid site range {min_n}..{max_n}")
    rows = []
    for n in range(min_n, max_n + 1):
        params = EnsembleParams(
            sites=n,
            runs=runs,
            policy=policy,
            master_seed=derive_seed(master_seed, n),
            cap=cap,
            initial=initial,
        )
        result = run_ensemble(params, workers=workers, keep_trajectories=False)
        rows.append(
            SweepRow(
                n=n,
                runs=runs,
                mean_recurrence=result.mean_recurrence,
                stderr=result.stderr,
                overflow=result.histogram.overflow,
            )
        )
    return rows


def entropy_time_distribution(params: EnsembleParams, workers: int = 1) -> EntropyOccupancy:
    """Time distribution of entropy: per-run occupancy averaged over runs."""
    return run_ensemble(params, workers=workers, keep_trajectories=False).occupancy
