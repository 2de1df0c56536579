"""Command-line interface: simulate rings, sweep sizes, fit results.

Subcommands
-----------
simulate      one run, trajectory CSV (t, entropy, imbalance)
sweep         mean recurrence time versus ring size
hist          recurrence-time histogram at one size
entropy-dist  time distribution of entropy levels
trajectories  entropy series of every recurred run, normalized time
fit           fit a line, geometric curve, or symmetric bump to CSV data
oracle        exact per-configuration recurrence values

Common behavior: ``--sites`` takes a single size or an inclusive range
``A..B``; outputs default into the directory named by the KACRING_OUTDIR
environment variable (current directory otherwise); ``--config`` reads a
TOML file whose keys mirror the flag names, with explicit flags taking
precedence; ``--plot`` writes a deterministic SVG next to the CSV.
Reruns with identical arguments produce byte-identical data files, for
any ``--workers`` value. Runs that hit the step cap are reported on
stderr and counted in overflow columns, never silently dropped.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from . import fitting, io, oracle, plots
from .ensemble import EnsembleParams, derive_seed, run_ensemble, sweep_sites
from .ring import PointerPolicy, RingConfig, evolve

__all__ = ["main", "entry_point"]

_QUANTUM_SITE_LIMIT = 20
_DEFAULT_RUNS = 10_000
_DEFAULT_FILES = {
    "simulate": "simulate.csv",
    "sweep": "sweep.csv",
    "hist": "hist.csv",
    "entropy-dist": "entropy_dist.csv",
    "trajectories": "trajectories.csv",
    "fit": "fit.csv",
    "oracle": "oracle.csv",
}


class CliError(Exception):
    """Invalid input reported with a diagnostic and exit code 1."""


def _parse_sites(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise CliError(f"invalid site range {text!r}: expected A..B") from None
    else:
        try:
            lo = hi = int(text)
        except ValueError:
            raise CliError(f"invalid site count {text!r}") from None
    if not 1 <= lo <= hi:
        raise CliError(f"invalid site range {text!r}: need 1 <= A <= B")
    return lo, hi


def _parse_initial(text: str, sites: int) -> RingConfig | str:
    if text in ("random", "all-black"):
        return text
    config = RingConfig.from_string(text)
    if config.n != sites:
        raise CliError(f"configuration length {config.n} does not match sites {sites}")
    return config


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--mode", choices=["classical", "quantum"], default=None)
    sub.add_argument("--sites", default=None, help="site count N, or inclusive range A..B")
    sub.add_argument("--runs", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--cap", type=int, default=None, help="step cap per run")
    sub.add_argument(
        "--initial", default=None, help="'random', 'all-black', or a B/W string like WBW"
    )
    sub.add_argument("--output", default=None, help="output CSV path")
    sub.add_argument("--plot", action="store_true", help="also write an SVG next to the CSV")
    sub.add_argument("--workers", type=int, default=None)
    sub.add_argument("--config", default=None, help="TOML file mirroring these flags")
    sub.add_argument(
        "--force", action="store_true", help="allow quantum runs with more than 20 sites"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kacring",
        description="Kac ring recurrence and entropy experiments",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    for name, summary in [
        ("simulate", "run one ring and write its trajectory"),
        ("sweep", "mean recurrence time for each size in a range"),
        ("hist", "recurrence-time histogram at one size"),
        ("entropy-dist", "time distribution of entropy levels"),
        ("trajectories", "entropy series of recurred runs vs normalized time"),
        ("fit", "fit a curve family to two columns of a CSV"),
        ("oracle", "exact recurrence values by brute force"),
    ]:
        sub = subs.add_parser(name, help=summary)
        _add_common_flags(sub)
        if name == "fit":
            sub.add_argument("--family", choices=["linear", "geometric", "cauchy-like"])
            sub.add_argument("--input", default=None, help="input CSV path")
            sub.add_argument("--x-column", type=int, default=0)
            sub.add_argument("--y-column", type=int, default=1)
    return parser


def _merge_config(args: argparse.Namespace) -> dict:
    """Fold TOML config under the parsed flags; explicit flags win."""
    merged = dict(vars(args))
    if args.config is not None:
        try:
            with open(args.config, "rb") as handle:
                table = tomllib.load(handle)
        except (OSError, tomllib.TOMLDecodeError) as err:
            raise CliError(f"cannot read config file {args.config}: {err}") from err
        for key, value in table.items():
            key = key.replace("-", "_")
            if key not in merged:
                raise CliError(f"unknown key {key!r} in config file {args.config}")
            if merged[key] in (None, False):
                merged[key] = value
    return merged


def _resolve(merged: dict) -> dict:
    merged["mode"] = merged["mode"] or "classical"
    merged["policy"] = PointerPolicy.parse(merged["mode"])
    merged["runs"] = merged["runs"] if merged["runs"] is not None else _DEFAULT_RUNS
    merged["seed"] = merged["seed"] if merged["seed"] is not None else 0
    merged["workers"] = merged["workers"] if merged["workers"] is not None else 1
    if merged["sites"] is None:
        if merged["subcommand"] != "fit":
            raise CliError("--sites is required")
        merged["site_range"] = None
        return merged
    merged["site_range"] = _parse_sites(str(merged["sites"]))
    hi = merged["site_range"][1]
    if (
        merged["policy"] is PointerPolicy.QUANTUM
        and hi > _QUANTUM_SITE_LIMIT
        and not merged["force"]
        and merged["subcommand"] != "fit"
    ):
        raise CliError(
            f"quantum runs with more than {_QUANTUM_SITE_LIMIT} sites take ~2^N steps; "
            "pass --force to proceed"
        )
    return merged


def _output_path(merged: dict) -> Path:
    if merged["output"]:
        path = Path(merged["output"])
    else:
        outdir = Path(os.environ.get("KACRING_OUTDIR", "."))
        path = outdir / _DEFAULT_FILES[merged["subcommand"]]
    if path.parent != Path("."):
        path.parent.mkdir(parents=True, exist_ok=True)
    return path


def _single_size(merged: dict) -> int:
    if merged["site_range"] is None:
        raise CliError("--sites is required for this operation")
    lo, hi = merged["site_range"]
    if lo != hi:
        raise CliError(f"{merged['subcommand']} takes a single site count, got range {lo}..{hi}")
    return lo


def _report_overflow(overflow: int, runs: int, cap: int) -> None:
    if overflow:
        print(
            f"warning: {overflow} of {runs} runs hit the step cap {cap} without recurring",
            file=sys.stderr,
        )


def _ensemble_params(merged: dict, sites: int) -> EnsembleParams:
    initial = _parse_initial(merged["initial"] or "random", sites)
    return EnsembleParams(
        sites=sites,
        runs=merged["runs"],
        policy=merged["policy"],
        master_seed=merged["seed"],
        cap=merged["cap"],
        initial=initial,
    )


def _cmd_simulate(merged: dict) -> int:
    sites = _single_size(merged)
    initial = _parse_initial(merged["initial"] or "random", sites)
    rng = np.random.default_rng(np.random.PCG64(derive_seed(merged["seed"], 0)))
    if isinstance(initial, str):
        start = (
            RingConfig.all_black(sites) if initial == "all-black" else RingConfig.random(sites, rng)
        )
    else:
        start = initial
    traj = evolve(start, merged["policy"], rng=rng, cap=merged["cap"])
    path = _output_path(merged)
    io.write_trajectory_csv(path, traj)
    if merged["plot"]:
        t = np.arange(traj.entropy_series.size)
        plots.line_chart(
            path.with_suffix(".svg"),
            [("entropy", t, traj.entropy_series), ("imbalance", t, traj.imbalance_series)],
            f"single run, {sites} sites, {merged['mode']} pointer",
            "t",
            "value",
        )
    if traj.recurrence_time is not None:
        print(f"initial {start}: recurrence at t={traj.recurrence_time}")
    else:
        print(f"initial {start}: no recurrence within cap {traj.entropy_series.size - 1}")
        print("warning: 1 of 1 runs hit the step cap without recurring", file=sys.stderr)
    print(f"wrote {path}")
    return 0


def _cmd_sweep(merged: dict) -> int:
    lo, hi = merged["site_range"]
    initial = merged["initial"] or "random"
    if initial not in ("random", "all-black"):
        # A fixed configuration can only match one size; defer to the
        # per-size validation so the mismatch message stays uniform.
        initial = _parse_initial(initial, lo)
    rows = sweep_sites(
        lo,
        hi,
        merged["runs"],
        policy=merged["policy"],
        master_seed=merged["seed"],
        cap=merged["cap"],
        initial=initial,
        workers=merged["workers"],
    )
    path = _output_path(merged)
    io.write_sweep_csv(path, rows)
    total_overflow = sum(row.overflow for row in rows)
    if total_overflow:
        print(
            f"warning: {total_overflow} of {merged['runs'] * len(rows)} runs hit the step cap",
            file=sys.stderr,
        )
    if merged["plot"]:
        ns = np.asarray([row.n for row in rows], dtype=float)
        means = np.asarray([row.mean_recurrence for row in rows])
        plots.line_chart(
            path.with_suffix(".svg"),
            [("mean recurrence", ns, means)],
            f"mean recurrence time, {merged['mode']} pointer",
            "sites",
            "mean recurrence time",
        )
    print(f"wrote {path} ({len(rows)} sizes)")
    return 0


def _cmd_hist(merged: dict) -> int:
    sites = _single_size(merged)
    params = _ensemble_params(merged, sites)
    result = run_ensemble(params, workers=merged["workers"], keep_trajectories=False)
    path = _output_path(merged)
    io.write_histogram_csv(path, result)
    _report_overflow(result.histogram.overflow, params.runs, params.resolved_cap)
    if merged["plot"]:
        times = sorted(result.histogram.bins)
        plots.bar_chart(
            path.with_suffix(".svg"),
            [str(t) for t in times],
            [result.histogram.bins[t] for t in times],
            f"recurrence times, {sites} sites, {merged['mode']} pointer",
            "recurrence time",
            "count",
        )
    print(f"wrote {path} ({len(result.histogram.bins)} distinct times)")
    return 0


def _cmd_entropy_dist(merged: dict) -> int:
    sites = _single_size(merged)
    params = _ensemble_params(merged, sites)
    result = run_ensemble(params, workers=merged["workers"], keep_trajectories=False)
    path = _output_path(merged)
    io.write_occupancy_csv(path, result)
    _report_overflow(result.occupancy.overflow, params.runs, params.resolved_cap)
    if merged["plot"]:
        occ = result.occupancy
        plots.bar_chart(
            path.with_suffix(".svg"),
            [str(level) for level in range(occ.mean_fraction.size)],
            occ.mean_fraction,
            f"time distribution of entropy, {sites} sites, {merged['mode']} pointer",
            "entropy",
            "mean fraction of run",
        )
    print(f"wrote {path}")
    return 0


def _cmd_trajectories(merged: dict) -> int:
    sites = _single_size(merged)
    params = _ensemble_params(merged, sites)
    result = run_ensemble(params, workers=merged["workers"], keep_trajectories=True)
    path = _output_path(merged)
    io.write_bundle_csv(path, result)
    _report_overflow(result.histogram.overflow, params.runs, params.resolved_cap)
    if merged["plot"]:
        series = [
            (None, np.arange(s.size) / (s.size - 1), s) for _, s in result.bundle.series[:24]
        ]
        if series:
            plots.line_chart(
                path.with_suffix(".svg"),
                series,
                f"entropy trajectories, {sites} sites, {merged['mode']} pointer",
                "t / recurrence time",
                "entropy",
            )
    print(f"wrote {path} ({len(result.bundle.series)} recurred runs)")
    return 0


def _cmd_fit(merged: dict) -> int:
    if not merged["family"]:
        raise CliError("--family is required for fit")
    if not merged["input"]:
        raise CliError("fit requires an input CSV path (--input)")
    points = io.read_points_csv(merged["input"], merged["x_column"], merged["y_column"])
    x = points[:, 0]
    if merged["family"] == "linear":
        fit = fitting.fit_linear(points)
        y_fit = fit.params["slope"] * x + fit.params["intercept"]
    elif merged["family"] == "geometric":
        fit = fitting.fit_geometric(points)
        y_fit = fit.params["prefactor"] * fit.params["base"] ** x
    else:
        sites = _single_size(merged)
        fit = fitting.fit_cauchy_like(points, sites)
        y_fit = fitting.cauchy_like(x, sites, fit.params["a"], fit.params["b"], fit.params["c"])

    path = _output_path(merged)
    io.write_fit_csv(path, fit)
    curve_path = path.with_name(path.stem + "_curve" + path.suffix)
    io.write_curve_csv(curve_path, x, y_fit)
    if merged["plot"]:
        plots.line_chart(
            path.with_suffix(".svg"),
            [("data", x, points[:, 1]), ("fit", x, y_fit)],
            f"{merged['family']} fit",
            "x",
            "y",
        )
    for name in sorted(fit.params):
        print(f"{name} = {fit.params[name]!r}")
    print(f"wrote {path} and {curve_path}")
    return 0


def _cmd_oracle(merged: dict) -> int:
    sites = _single_size(merged)
    if merged["policy"] is PointerPolicy.CLASSICAL:
        table: dict = oracle.classical_recurrence_map(sites)
        quantum = False
    else:
        table = {
            str(RingConfig(bits=bits, n=sites)): oracle.quantum_expected_recurrence(
                RingConfig(bits=bits, n=sites)
            )
            for bits in range(1 << sites)
        }
        quantum = True
    path = _output_path(merged)
    io.write_oracle_csv(path, table, quantum=quantum)
    print(f"wrote {path} ({len(table)} configs)")
    return 0


_DISPATCH = {
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "hist": _cmd_hist,
    "entropy-dist": _cmd_entropy_dist,
    "trajectories": _cmd_trajectories,
    "fit": _cmd_fit,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    """Parse arguments, dispatch, and return the process exit code."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        merged = _resolve(_merge_config(args))
        return _DISPATCH[merged["subcommand"]](merged)
    except (CliError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
