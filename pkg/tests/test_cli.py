import sys

import pytest
import yaml
from click.testing import CliRunner
from loguru import logger

from rotation_toolkit.cli import cli, run
from rotation_toolkit.config import ExperimentConfig
from rotation_toolkit.domain.types import Command


@pytest.fixture(autouse=True)
def restore_log_sink():
    yield
    # the CLI rebinds the sink to the runner's captured stderr
    logger.remove()
    logger.add(sys.stderr)


def _invoke(*args):
    return CliRunner().invoke(cli, ["--log-level", "ERROR", *args])


def _summary(output, label):
    return [line.split() for line in output.splitlines() if line.startswith(f"{label} ")]


def test_rho_on_example1(tmp_path):
    result = _invoke("rho", "--fixture", "example1", "--q", "0", "--alpha", "0", "--n", "4000", "--out", str(tmp_path / "rho.csv"))
    assert result.exit_code == 0
    [line] = _summary(result.output, "rho")
    assert line[1] == "0.0"
    assert line[3] == "4000"
    assert (tmp_path / "rho.csv").read_text().startswith("estimator,value,n,se_proxy,q,alpha,s0,seed\nrho,0,4000,")


def test_orbit_on_example1(tmp_path):
    result = _invoke("orbit", "--fixture", "example1", "--s0", "0.125", "--n", "4000", "--out", str(tmp_path / "orbit.csv"))
    assert result.exit_code == 0
    [line] = _summary(result.output, "orbit")
    assert float(line[1]) == 0.25


def test_identical_seed_gives_identical_csv(tmp_path):
    outputs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        result = _invoke("rho", "--fixture", "intro", "--n", "5000", "--seed", "42", "--out", str(path))
        assert result.exit_code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_sampling_ladder_csv(tmp_path):
    path = tmp_path / "ladder.csv"
    result = _invoke(
        "sampling", "--vf", "const:a=0.7,b=0.5", "--q", "0", "--alpha", "-0.5",
        "--dts", "0.2,0.1", "--n", "2000", "--seed", "1", "--out", str(path),
    )
    assert result.exit_code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "delta_t,rho_rescaled,se,crossing_diag"
    assert [line.split(",")[0] for line in lines[1:]] == ["0.2", "0.1"]


def test_sampling_hypothesis_violation_exits_3(tmp_path):
    result = _invoke(
        "sampling", "--vf", "const:a=0.7,b=0.5", "--q", "0", "--alpha", "0.3",
        "--dts", "0.1", "--n", "100", "--out", str(tmp_path / "x.csv"),
    )
    assert result.exit_code == 3
    assert "q - 1 < alpha < q" in result.output


def test_invalid_configuration_exits_2(tmp_path):
    assert _invoke("rho", "--fixture", "nope", "--out", str(tmp_path / "x.csv")).exit_code == 2
    assert _invoke("sampling", "--vf", "spiral", "--out", str(tmp_path / "x.csv")).exit_code == 2
    assert _invoke("ergodic-check", "--fixture", "example1", "--n", "10", "--out", str(tmp_path / "x.csv")).exit_code == 2


def test_numeric_failure_exits_4(tmp_path):
    system = tmp_path / "reflection.yaml"
    system.write_text(
        yaml.safe_dump({"model": {"kind": "finite_iid", "maps": [{"kind": "projective", "matrix": [[1.0, 0.0], [0.0, -1.0]]}], "probs": [1.0]}})
    )
    result = _invoke("rho", "--system", str(system), "--n", "10", "--out", str(tmp_path / "x.csv"))
    assert result.exit_code == 4


def test_counterexample_table(tmp_path):
    path = tmp_path / "ns.csv"
    result = _invoke("ns-counterexample", "--dt", "0.1", "--s0-list", "0,0.25,0.75", "--n", "10000", "--out", str(path))
    assert result.exit_code == 0
    rows = [line.split(",") for line in path.read_text().splitlines()[1:]]
    assert rows[0] == ["0", "0"]
    assert abs(float(rows[1][1]) - 1.0) <= 1e-3
    assert abs(float(rows[2][1])) <= 1e-3


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "experiment.yaml"
    config.write_text(yaml.safe_dump({"fixture": "example1", "s0": 0.0, "n": 100, "format": "json"}))
    path = tmp_path / "orbit.json"
    result = _invoke("orbit", "--config", str(config), "--s0", "0.125", "--out", str(path))
    assert result.exit_code == 0
    assert '"command": "orbit"' in path.read_text()
    [line] = _summary(result.output, "orbit")
    assert float(line[1]) == 0.25


def test_staircase_grid_option(tmp_path):
    path = tmp_path / "stairs.csv"
    result = _invoke("staircase", "--fixture", "perturbed", "--grid", "0:1:11", "--n", "500", "--threads", "2", "--out", str(path))
    assert result.exit_code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "grid_value,k,prob"
    assert len(lines) == 12


def test_descending_grid_exits_2(tmp_path):
    result = _invoke("staircase", "--fixture", "perturbed", "--grid", "1:0:5", "--n", "100", "--out", str(tmp_path / "x.csv"))
    assert result.exit_code == 2
    assert "strictly increasing" in result.output


def test_run_maps_value_errors_to_usage_exit(tmp_path):
    config = ExperimentConfig.model_construct(command=Command.ORBIT, fixture="example1", s0=1.5, n=10, out=tmp_path / "x.csv")
    assert run(config) == 2
    assert not (tmp_path / "x.csv").exists()
