import numpy as np
import pytest

from kacring import (
    EnsembleParams,
    FitResult,
    RingConfig,
    evolve,
    run_ensemble,
    sweep_sites,
)
from kacring.io import (
    read_points_csv,
    write_bundle_csv,
    write_curve_csv,
    write_fit_csv,
    write_histogram_csv,
    write_occupancy_csv,
    write_oracle_csv,
    write_sweep_csv,
    write_trajectory_csv,
)


def lines_of(path):
    return path.read_text().splitlines()


def test_trajectory_csv(tmp_path):
    out = tmp_path / "traj.csv"
    write_trajectory_csv(out, evolve(RingConfig.from_string("WBW")))
    assert lines_of(out) == ["t,entropy,imbalance", "0,0,-1", "1,3,1", "2,0,-1"]


def test_sweep_csv_header_and_roundtrip(tmp_path):
    out = tmp_path / "sweep.csv"
    rows = sweep_sites(3, 5, 50, master_seed=1)
    write_sweep_csv(out, rows)
    lines = lines_of(out)
    assert lines[0] == "n,runs,mean_recurrence,stderr,overflow"
    assert len(lines) == 4
    # repr-formatted floats survive a read back exactly
    points = read_points_csv(out, x_column=0, y_column=2)
    assert points[:, 1].tolist() == [r.mean_recurrence for r in rows]


def test_histogram_csv_sorted(tmp_path):
    out = tmp_path / "hist.csv"
    result = run_ensemble(EnsembleParams(sites=5, runs=300, master_seed=4))
    write_histogram_csv(out, result)
    lines = lines_of(out)
    assert lines[0] == "recurrence_time,count"
    times = [int(line.split(",")[0]) for line in lines[1:]]
    assert times == sorted(times)
    counts = [int(line.split(",")[1]) for line in lines[1:]]
    assert sum(counts) + result.histogram.overflow == 300


def test_occupancy_csv(tmp_path):
    out = tmp_path / "occ.csv"
    result = run_ensemble(EnsembleParams(sites=2, runs=10, master_seed=0))
    write_occupancy_csv(out, result)
    lines = lines_of(out)
    assert lines[0] == "entropy,mean_fraction,stderr"
    assert lines[1] == "0,0.25,0.0"
    assert lines[2] == "1,0.5,0.0"
    assert len(lines) == 4


def test_bundle_csv_exact_normalized_time(tmp_path):
    out = tmp_path / "bundle.csv"
    result = run_ensemble(EnsembleParams(sites=4, runs=3, master_seed=5))
    write_bundle_csv(out, result)
    lines = lines_of(out)
    assert lines[0] == "run,t,normalized_t,entropy"
    # every run of a 4-site classical ring recurs at t=8
    assert lines[1] == "0,0,0.0,0"
    assert lines[2].startswith("0,1,0.125,")
    assert lines[9].startswith("0,8,1.0,0")

    stats_only = run_ensemble(
        EnsembleParams(sites=4, runs=3, master_seed=5), keep_trajectories=False
    )
    with pytest.raises(ValueError, match="without trajectories"):
        write_bundle_csv(tmp_path / "x.csv", stats_only)


def test_oracle_csv_headers(tmp_path):
    classical = tmp_path / "c.csv"
    write_oracle_csv(classical, {"BW": 4, "BB": 4}, quantum=False)
    assert lines_of(classical) == ["config,recurrence_time", "BB,4", "BW,4"]

    quantum = tmp_path / "q.csv"
    write_oracle_csv(quantum, {"B": 2.0, "W": 2.0}, quantum=True)
    assert lines_of(quantum) == ["config,expected_recurrence", "B,2.0", "W,2.0"]


def test_fit_and_curve_csv(tmp_path):
    fit = FitResult(
        params={"slope": 2.0, "intercept": -0.5},
        residual_sum_squares=0.0,
        converged=True,
        iterations=0,
    )
    fit_path = tmp_path / "fit.csv"
    write_fit_csv(fit_path, fit)
    assert lines_of(fit_path) == ["param,value", "intercept,-0.5", "slope,2.0"]

    curve_path = tmp_path / "curve.csv"
    write_curve_csv(curve_path, [1.0, 2.0], [1.5, 3.5])
    assert lines_of(curve_path) == ["x,y_fit", "1.0,1.5", "2.0,3.5"]


class TestReadPointsCsv:
    def test_reads_back_written_points(self, tmp_path):
        path = tmp_path / "pts.csv"
        write_curve_csv(path, [0.1, 0.2, 0.3], [1.0, 2.0, 3.0])
        points = read_points_csv(path)
        assert np.array_equal(points, [[0.1, 1.0], [0.2, 2.0], [0.3, 3.0]])

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValueError, match="cannot read CSV file"):
            read_points_csv(tmp_path / "absent.csv")

    def test_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("x,y\n")
        with pytest.raises(ValueError, match="no data rows"):
            read_points_csv(path)

    def test_non_numeric(self, tmp_path):
        path = tmp_path / "text.csv"
        path.write_text("x,y\nfoo,bar\n")
        with pytest.raises(ValueError, match="line 2: not numeric"):
            read_points_csv(path)

    def test_column_selection(self, tmp_path):
        path = tmp_path / "wide.csv"
        path.write_text("a,b,c\n1,2,3\n4,5,6\n")
        points = read_points_csv(path, x_column=0, y_column=2)
        assert np.array_equal(points, [[1.0, 3.0], [4.0, 6.0]])
