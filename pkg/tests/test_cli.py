import pytest

from kacring.cli import main


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimulate:
    def test_hand_vector_recurs_at_two(self, tmp_path, capsys):
        out = tmp_path / "traj.csv"
        code, stdout, _ = run(
            ["simulate", "--mode", "classical", "--sites", "3", "--initial", "WBW",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        assert "recurrence at t=2" in stdout
        lines = out.read_text().splitlines()
        assert lines[0] == "t,entropy,imbalance"
        assert lines[-1] == "2,0,-1"

    def test_cap_hit_goes_to_stderr(self, tmp_path, capsys):
        code, _, stderr = run(
            ["simulate", "--sites", "4", "--initial", "BWBW", "--cap", "3",
             "--output", str(tmp_path / "t.csv")],
            capsys,
        )
        assert code == 0
        assert "hit the step cap" in stderr

    def test_plot_written(self, tmp_path, capsys):
        out = tmp_path / "t.csv"
        code, _, _ = run(
            ["simulate", "--sites", "5", "--initial", "all-black", "--plot",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        svg = out.with_suffix(".svg").read_text()
        assert svg.startswith("<svg")
        assert "polyline" in svg


class TestSweepAndFit:
    def test_sweep_then_linear_fit(self, tmp_path, capsys):
        sweep_csv = tmp_path / "sweep.csv"
        code, _, _ = run(
            ["sweep", "--sites", "2..8", "--runs", "150", "--seed", "7",
             "--output", str(sweep_csv)],
            capsys,
        )
        assert code == 0
        lines = sweep_csv.read_text().splitlines()
        assert lines[0] == "n,runs,mean_recurrence,stderr,overflow"
        assert len(lines) == 8
        # power-of-2 sizes recur at exactly 2n for every sampled config
        assert lines[3].startswith("4,150,8.0,0.0,")

        fit_csv = tmp_path / "fit.csv"
        code, stdout, _ = run(
            ["fit", "--family", "linear", "--input", str(sweep_csv),
             "--x-column", "0", "--y-column", "2", "--output", str(fit_csv)],
            capsys,
        )
        assert code == 0
        assert "slope = " in stdout
        assert fit_csv.read_text().startswith("param,value\n")
        assert (tmp_path / "fit_curve.csv").read_text().startswith("x,y_fit\n")

    def test_fit_requires_input(self, capsys):
        code, _, stderr = run(["fit", "--family", "linear"], capsys)
        assert code == 1
        assert "input CSV path" in stderr

    def test_fit_unreadable_csv(self, tmp_path, capsys):
        code, _, stderr = run(
            ["fit", "--family", "linear", "--input", str(tmp_path / "nope.csv")],
            capsys,
        )
        assert code == 1
        assert "error: cannot read CSV file" in stderr

    def test_cauchy_fit_needs_sites(self, tmp_path, capsys):
        data = tmp_path / "d.csv"
        data.write_text("x,y\n0,0.1\n1,0.2\n2,0.3\n3,0.2\n")
        code, _, stderr = run(
            ["fit", "--family", "cauchy-like", "--input", str(data)], capsys
        )
        assert code == 1
        assert "--sites is required" in stderr


class TestHistAndDistributions:
    def test_hist_counts(self, tmp_path, capsys):
        out = tmp_path / "h.csv"
        code, _, _ = run(
            ["hist", "--sites", "5", "--runs", "200", "--seed", "3",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "recurrence_time,count"
        assert sum(int(line.split(",")[1]) for line in lines[1:]) == 200

    def test_overflow_reported_not_dropped(self, tmp_path, capsys):
        out = tmp_path / "h.csv"
        code, _, stderr = run(
            ["hist", "--sites", "6", "--runs", "50", "--cap", "1",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        assert "50 of 50 runs hit the step cap" in stderr

    def test_entropy_dist_fractions(self, tmp_path, capsys):
        out = tmp_path / "e.csv"
        code, _, _ = run(
            ["entropy-dist", "--sites", "4", "--runs", "120", "--seed", "2",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "entropy,mean_fraction,stderr"
        total = sum(float(line.split(",")[1]) for line in lines[1:])
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_trajectories_endpoints(self, tmp_path, capsys):
        out = tmp_path / "b.csv"
        code, stdout, _ = run(
            ["trajectories", "--sites", "4", "--runs", "6", "--seed", "9",
             "--output", str(out)],
            capsys,
        )
        assert code == 0
        assert "6 recurred runs" in stdout
        lines = out.read_text().splitlines()
        assert lines[0] == "run,t,normalized_t,entropy"
        assert lines[1] == "0,0,0.0,0"
        assert lines[-1].split(",")[2:] == ["1.0", "0"]

    def test_single_size_commands_reject_ranges(self, capsys):
        code, _, stderr = run(["hist", "--sites", "3..5", "--runs", "5"], capsys)
        assert code == 1
        assert "single site count" in stderr


class TestOracleCommand:
    def test_classical_four_sites(self, tmp_path, capsys):
        out = tmp_path / "o.csv"
        code, _, _ = run(["oracle", "--sites", "4", "--output", str(out)], capsys)
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "config,recurrence_time"
        assert len(lines) == 17
        assert all(line.endswith(",8") for line in lines[1:])

    def test_quantum_two_sites(self, tmp_path, capsys):
        out = tmp_path / "oq.csv"
        code, _, _ = run(
            ["oracle", "--sites", "2", "--mode", "quantum", "--output", str(out)],
            capsys,
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "config,expected_recurrence"
        assert len(lines) == 5
        for line in lines[1:]:
            assert float(line.split(",")[1]) == pytest.approx(4.0, rel=1e-9)


class TestErrorsAndGuards:
    def test_invalid_config_string(self, capsys):
        code, _, stderr = run(["simulate", "--sites", "3", "--initial", "WXB"], capsys)
        assert code == 1
        assert "invalid configuration string" in stderr

    def test_length_mismatch(self, capsys):
        code, _, stderr = run(["simulate", "--sites", "5", "--initial", "WBW"], capsys)
        assert code == 1
        assert "configuration length 3 does not match sites 5" in stderr

    def test_quantum_size_guard(self, capsys):
        code, _, stderr = run(
            ["hist", "--mode", "quantum", "--sites", "21", "--runs", "1"], capsys
        )
        assert code == 1
        assert "--force" in stderr

    def test_force_overrides_guard(self, tmp_path, capsys):
        code, _, _ = run(
            ["hist", "--mode", "quantum", "--sites", "21", "--runs", "1",
             "--cap", "4", "--force", "--output", str(tmp_path / "h.csv")],
            capsys,
        )
        assert code == 0

    def test_missing_sites(self, capsys):
        code, _, stderr = run(["hist", "--runs", "5"], capsys)
        assert code == 1
        assert "--sites is required" in stderr

    def test_bad_site_range(self, capsys):
        code, _, stderr = run(["sweep", "--sites", "9..2", "--runs", "5"], capsys)
        assert code == 1
        assert "invalid site range" in stderr

    def test_unknown_flag_is_an_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--sites", "3", "--frobnicate"])
        assert exc.value.code != 0

    def test_help_lists_subcommands(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--help"])
        assert exc.value.code == 0
        stdout = capsys.readouterr().out
        for name in ["simulate", "sweep", "hist", "entropy-dist", "trajectories",
                     "fit", "oracle"]:
            assert name in stdout


class TestConfigFileAndEnvironment:
    def test_toml_supplies_defaults_flags_win(self, tmp_path, capsys):
        conf = tmp_path / "conf.toml"
        conf.write_text('sites = "4"\nruns = 30\nseed = 5\ninitial = "all-black"\n')
        out = tmp_path / "h.csv"
        code, _, _ = run(
            ["hist", "--config", str(conf), "--runs", "12", "--output", str(out)],
            capsys,
        )
        assert code == 0
        # sites/seed/initial from TOML, runs from the flag
        assert out.read_text().splitlines()[1] == "8,12"

    def test_toml_unknown_key(self, tmp_path, capsys):
        conf = tmp_path / "conf.toml"
        conf.write_text("gravity = 9.8\n")
        code, _, stderr = run(
            ["hist", "--config", str(conf), "--sites", "3"], capsys
        )
        assert code == 1
        assert "unknown key 'gravity'" in stderr

    def test_toml_unreadable(self, tmp_path, capsys):
        code, _, stderr = run(
            ["hist", "--config", str(tmp_path / "absent.toml"), "--sites", "3"],
            capsys,
        )
        assert code == 1
        assert "cannot read config file" in stderr

    def test_output_dir_env_var(self, tmp_path, capsys, monkeypatch):
        outdir = tmp_path / "results"
        monkeypatch.setenv("KACRING_OUTDIR", str(outdir))
        code, stdout, _ = run(["oracle", "--sites", "3"], capsys)
        assert code == 0
        assert (outdir / "oracle.csv").exists()


class TestDeterminism:
    def test_rerun_and_worker_count_are_byte_identical(self, tmp_path, capsys):
        args = ["trajectories", "--mode", "quantum", "--sites", "4", "--runs", "40",
                "--seed", "123"]
        paths = [tmp_path / name for name in ("a.csv", "b.csv", "c.csv")]
        run(args + ["--output", str(paths[0]), "--workers", "1"], capsys)
        run(args + ["--output", str(paths[1]), "--workers", "1"], capsys)
        run(args + ["--output", str(paths[2]), "--workers", "3"], capsys)
        first = paths[0].read_bytes()
        assert first == paths[1].read_bytes()
        assert first == paths[2].read_bytes()

    def test_svg_reruns_identical(self, tmp_path, capsys):
        args = ["entropy-dist", "--sites", "5", "--runs", "60", "--seed", "4",
                "--plot"]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(args + ["--output", str(a)], capsys)
        run(args + ["--output", str(b)], capsys)
        assert a.with_suffix(".svg").read_bytes() == b.with_suffix(".svg").read_bytes()
