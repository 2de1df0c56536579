"""CSV serialization for every result the toolkit produces.

Formats are stable contracts: fixed header rows, floats written with
repr() so reruns are byte-identical, lines terminated with a bare
newline. Readers accept anything the writers emit.

Writers and headers:

========================  =========================================
writer                    header
========================  =========================================
write_trajectory_csv      t,entropy,imbalance
write_sweep_csv           n,runs,mean_recurrence,stderr,overflow
write_histogram_csv       recurrence_time,count
write_occupancy_csv       entropy,mean_fraction,stderr
write_bundle_csv          run,t,normalized_t,entropy
write_oracle_csv          config,recurrence_time  (classical)
                          config,expected_recurrence  (quantum)
write_fit_csv             param,value
write_curve_csv           x,y_fit
========================  =========================================

Configurations are serialized as strings over {B, W} with site 0 as the
leftmost character.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .ensemble import EnsembleResult, SweepRow
from .fitting import FitResult
from .ring import Trajectory

__all__ = [
    "write_trajectory_csv",
    "write_sweep_csv",
    "write_histogram_csv",
    "write_occupancy_csv",
    "write_bundle_csv",
    "write_oracle_csv",
    "write_fit_csv",
    "write_curve_csv",
    "read_points_csv",
]


def _open_writer(path):
    handle = open(path, "w", newline="")
    return handle, csv.writer(handle, lineterminator="\n")


def write_trajectory_csv(path, trajectory: Trajectory) -> None:
    """One row per timestep of a single run."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["t", "entropy", "imbalance"])
        for t in range(trajectory.entropy_series.size):
            writer.writerow(
                [t, int(trajectory.entropy_series[t]), int(trajectory.imbalance_series[t])]
            )


def write_sweep_csv(path, rows: list[SweepRow]) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["n", "runs", "mean_recurrence", "stderr", "overflow"])
        for row in rows:
            writer.writerow(
                [row.n, row.runs, repr(row.mean_recurrence), repr(row.stderr), row.overflow]
            )


def write_histogram_csv(path, result: EnsembleResult) -> None:
    """Recurrence-time counts in ascending time order; overflow is not a
    bin and is reported by the caller separately."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["recurrence_time", "count"])
        for rec in sorted(result.histogram.bins):
            writer.writerow([rec, result.histogram.bins[rec]])


def write_occupancy_csv(path, result: EnsembleResult) -> None:
    handle, writer = _open_writer(path)
    occ = result.occupancy
    with handle:
        writer.writerow(["entropy", "mean_fraction", "stderr"])
        for level in range(occ.mean_fraction.size):
            writer.writerow(
                [level, repr(float(occ.mean_fraction[level])), repr(float(occ.stderr[level]))]
            )


def write_bundle_csv(path, result: EnsembleResult) -> None:
    """Entropy trajectories of recurred runs with exact normalized time t/T."""
    if result.bundle is None:
        raise ValueError("ensemble was run without trajectories")
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["run", "t", "normalized_t", "entropy"])
        for run, series in result.bundle.series:
            span = series.size - 1
            for t in range(series.size):
                writer.writerow([run, t, repr(t / span), int(series[t])])


def write_oracle_csv(path, table: dict[str, int] | dict[str, float], quantum: bool) -> None:
    """Exact per-configuration recurrence values, keyed by B/W string."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["config", "expected_recurrence" if quantum else "recurrence_time"])
        for config in sorted(table):
            value = table[config]
            writer.writerow([config, repr(float(value)) if quantum else int(value)])


def write_fit_csv(path, fit: FitResult) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["param", "value"])
        for name in sorted(fit.params):
            writer.writerow([name, repr(fit.params[name])])


def write_curve_csv(path, x, y_fit) -> None:
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["x", "y_fit"])
        for xi, yi in zip(np.asarray(x), np.asarray(y_fit)):
            writer.writerow([repr(float(xi)), repr(float(yi))])


def read_points_csv(path, x_column: int = 0, y_column: int = 1) -> np.ndarray:
    """Read (x, y) pairs from any CSV with a single header row.

    Returns an (m, 2) float array. Raises ValueError on files that do not
    parse as numeric two-column data past the header.
    """
    path = Path(path)
    try:
        with open(path, newline="") as handle:
            reader = csv.reader(handle)
            rows = list(reader)
    except OSError as err:
        raise ValueError(f"cannot read CSV file {path}: {err}") from err
    if len(rows) < 2:
        raise ValueError(f"CSV file {path} has no data rows")
    points = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        try:
            points.append((float(row[x_column]), float(row[y_column])))
        except (ValueError, IndexError) as err:
            raise ValueError(f"CSV file {path}, line {lineno}: not numeric data") from err
    return np.asarray(points, dtype=np.float64)
