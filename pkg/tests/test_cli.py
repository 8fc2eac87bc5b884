import csv
import io
import json

import pytest
import yaml
from click.testing import CliRunner

from recovery_cli import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_inspect_hollow_square(runner, hollow_square_path) -> None:
    result = runner.invoke(cli, ["inspect", hollow_square_path, "--no-boundary"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "beta0: 1" in lines
    assert "beta1: 1" in lines
    assert "edges: 4" in lines
    assert "triangles: 0" in lines


def test_inspect_json_with_boundary(runner, hollow_square_path) -> None:
    result = runner.invoke(cli, ["inspect", hollow_square_path, "--json"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["vertices"] == 20
    assert report["kind"] == "rips"
    assert 0 < report["coverage"] < 1


def test_inspect_empty_network_warns(runner, empty_network_path) -> None:
    result = runner.invoke(cli, ["inspect", empty_network_path, "--no-boundary"])
    assert result.exit_code == 0
    assert "beta0: 0" in result.stdout.splitlines()
    assert "Empty network" in result.stderr


def test_recover_grid(runner, empty_network_path) -> None:
    result = runner.invoke(cli, ["recover", empty_network_path, "--strategy", "grid"])
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["betti"] == [1, 0]
    assert len(data["kept"]) <= 9
    assert "trace" not in data


def test_recover_with_trace_is_reproducible(runner, hollow_square_path) -> None:
    args = ["recover", hollow_square_path, "--strategy", "dpp", "--seed", "4", "--trace"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["trace"]["seed"] == 4


def test_recover_greedy_prints_only_kept(runner, hollow_square_path) -> None:
    result = runner.invoke(cli, ["recover", hollow_square_path, "--strategy", "greedy"])
    assert result.exit_code == 0
    assert set(json.loads(result.stdout)) == {"kept"}


def test_recover_writes_output_file(runner, empty_network_path, tmp_path) -> None:
    out = tmp_path / "result.json"
    result = runner.invoke(cli, ["recover", empty_network_path, "-s", "grid", "--out", str(out)])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(out.read_text())["betti"] == [1, 0]


def test_recover_malformed_json(runner, write_network) -> None:
    result = runner.invoke(cli, ["recover", write_network("{broken")])
    assert result.exit_code == 2
    assert "<json>" in result.stderr


def test_recover_point_outside_domain(runner, write_network) -> None:
    result = runner.invoke(cli, ["recover", write_network({"existing": [[2, 0.5]]})])
    assert result.exit_code == 2
    assert "existing[0]" in result.stderr


def test_recover_side_override_revalidates(runner, write_network) -> None:
    path = write_network({"a": 2, "existing": [[1.5, 1.5]]})
    result = runner.invoke(cli, ["recover", path, "--side", "1"])
    assert result.exit_code == 2


def test_recover_missing_file(runner, tmp_path) -> None:
    result = runner.invoke(cli, ["recover", str(tmp_path / "absent.json")])
    assert result.exit_code == 2


def test_recover_loop_cap_is_algorithm_failure(runner, empty_network_path) -> None:
    result = runner.invoke(cli, ["recover", empty_network_path, "-s", "grid", "--max-iterations", "1"])
    assert result.exit_code == 3
    assert result.stdout == ""


def test_bench_prints_csv(runner) -> None:
    result = runner.invoke(cli, [
        "bench", "--scenarios", "20,60", "--strategies", "grid,greedy", "--reps", "2", "--seed", "3",
    ])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert rows[0] == ["scenario", "strategy", "reps", "mean_added", "mean_final", "stderr"]
    assert [row[:2] for row in rows[1:]] == [
        ["20%", "grid"], ["20%", "greedy"], ["60%", "grid"], ["60%", "greedy"],
    ]
    assert rows[1][3] == "9.00"


def test_bench_writes_all_outputs(runner, tmp_path) -> None:
    out = tmp_path / "bench.csv"
    result = runner.invoke(cli, [
        "bench", "--scenarios", "0.4", "--strategies", "grid", "--reps", "1",
        "--jitter", "0.01", "--jitter-trials", "2", "--out", str(out),
    ])
    assert result.exit_code == 0
    assert out.exists()
    assert (tmp_path / "bench_runs.json").exists()
    assert (tmp_path / "bench_robustness.csv").exists()
    assert (tmp_path / "plot_grid.dat").exists()


@pytest.mark.parametrize(
    "args",
    [
        ["--reps", "0"],
        ["--strategies", "grid,annealing"],
        ["--scenarios", "120"],
        ["--jitter", "0.01"],
    ],
)
def test_bench_rejects_bad_arguments(runner, args) -> None:
    result = runner.invoke(cli, ["bench", *args])
    assert result.exit_code == 2


def test_sample_zero_points(runner) -> None:
    result = runner.invoke(cli, ["sample", "0"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == []


def test_sample_is_reproducible(runner, hollow_square_path) -> None:
    args = ["sample", "5", "--seed", "8", "--condition", hollow_square_path]
    first = runner.invoke(cli, args)
    assert first.exit_code == 0
    points = json.loads(first.stdout)
    assert len(points) == 5
    assert all(0 <= x <= 1 and 0 <= y <= 1 for x, y in points)
    assert runner.invoke(cli, args).stdout == first.stdout


def test_show_config_prints_yaml(runner) -> None:
    result = runner.invoke(cli, ["show-config"])
    assert result.exit_code == 0
    data = yaml.safe_load(result.stdout)
    assert data["network"]["radius"] == 0.25


def test_config_option_overrides_defaults(runner, tmp_path, empty_network_path) -> None:
    config = tmp_path / "settings.yaml"
    config.write_text(yaml.safe_dump({"placement": {"strategy": "grid"}}))
    result = runner.invoke(cli, ["--config", str(config), "recover", empty_network_path, "--trace"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["trace"]["strategy"] == "grid"


def test_bad_config_file(runner, tmp_path) -> None:
    config = tmp_path / "bad.yaml"
    config.write_text("metrics: {}\n")
    result = runner.invoke(cli, ["--config", str(config), "show-config"])
    assert result.exit_code == 2


def test_bench_output_is_byte_identical_across_runs(runner) -> None:
    args = ["bench", "--scenarios", "40", "--strategies", "uniform,dpp,greedy", "--reps", "2", "--seed", "11"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout


def _write_config(tmp_path, data) -> str:
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.safe_dump(data))
    return str(path)


def test_recover_out_uses_configured_storage(runner, tmp_path, empty_network_path) -> None:
    config = _write_config(tmp_path, {"storage": {"type": "s3"}})
    out = tmp_path / "result.json"
    result = runner.invoke(cli, ["--config", config, "recover", empty_network_path, "-s", "grid", "--out", str(out)])
    assert result.exit_code == 2
    assert "storage type" in result.stderr
    assert not out.exists()


def test_bench_runs_configured_scenarios(runner, tmp_path) -> None:
    config = _write_config(tmp_path, {
        "bench": {"targets": [0.4, 0.6], "strategies": ["grid"], "replications": 1, "base_seed": 3},
    })
    result = runner.invoke(cli, ["--config", config, "bench"])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert [row[:3] for row in rows[1:]] == [["40%", "grid", "1"], ["60%", "grid", "1"]]


def test_bench_flags_override_configured_scenarios(runner, tmp_path) -> None:
    config = _write_config(tmp_path, {
        "bench": {"targets": [0.4, 0.6], "strategies": ["grid"], "replications": 3},
    })
    result = runner.invoke(cli, ["--config", config, "bench", "--scenarios", "20", "--reps", "1"])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.stdout)))
    assert [row[:3] for row in rows[1:]] == [["20%", "grid", "1"]]


def test_bench_out_uses_configured_storage(runner, tmp_path) -> None:
    config = _write_config(tmp_path, {"storage": {"type": "s3"}})
    result = runner.invoke(cli, [
        "--config", config, "bench", "--scenarios", "40", "--strategies", "grid", "--reps", "1",
        "--out", str(tmp_path / "bench.csv"),
    ])
    assert result.exit_code == 2
    assert not (tmp_path / "bench.csv").exists()


@pytest.mark.parametrize(
    ("settings", "args"),
    [
        ({"placement": {"strategy": "annealing"}}, ["recover", "{network}"]),
        ({"network": {"side_length": -1.0}}, ["sample", "3"]),
        ({"bench": {"greedy_added_factor": -1.0}}, ["bench", "--reps", "1"]),
        ({"bench": {"verify_kind": "alpha"}}, ["bench", "--reps", "1"]),
        ({"bench": {"verify_kind": "rips"}}, ["bench", "--reps", "1", "--complex", "cech"]),
        ({"bench": {"strategies": ["grid", "annealing"]}}, ["bench", "--reps", "1"]),
        ({"bench": {"replications": 0}}, ["bench"]),
    ],
)
def test_rejected_config_values_are_input_errors(runner, tmp_path, empty_network_path, settings, args) -> None:
    config = _write_config(tmp_path, settings)
    args = [arg.format(network=empty_network_path) for arg in args]
    result = runner.invoke(cli, ["--config", config, *args])
    assert result.exit_code == 2
    assert result.stdout == ""


def test_internal_value_error_is_not_an_input_error(runner, empty_network_path, monkeypatch) -> None:
    def broken(*args, **kwargs):
        raise ValueError("internal invariant broken")

    monkeypatch.setattr("recovery_cli.run_recovery", broken)
    result = runner.invoke(cli, ["recover", empty_network_path, "-s", "grid"])
    assert result.exit_code != 2
    assert isinstance(result.exception, ValueError)


def test_sample_writes_output_file(runner, tmp_path) -> None:
    out = tmp_path / "draws" / "points.json"
    result = runner.invoke(cli, ["sample", "4", "--seed", "2", "--out", str(out)])
    assert result.exit_code == 0
    assert result.stdout == ""
    points = json.loads(out.read_text())
    assert len(points) == 4
    assert points == json.loads(runner.invoke(cli, ["sample", "4", "--seed", "2"]).stdout)
