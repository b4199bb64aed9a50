import csv

import numpy as np
import pytest

from hedgebench.adversary import apply_advantage, build_base, replicate
from hedgebench.cli import build_parser, cli_main

from reference import THEOREM1_T0


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# bound subcommand
# ---------------------------------------------------------------------------

def test_bound_prints_value(capsys):
    code, out, _ = run_cli(
        capsys,
        "bound", "--t", "0", "--N", "2", "--eps", "1", "--delta", "0.5",
    )
    assert code == 0
    assert float(out.strip()) == pytest.approx(THEOREM1_T0, rel=1e-6)


def test_bound_rejects_bad_delta(capsys):
    code, _, err = run_cli(
        capsys,
        "bound", "--t", "0", "--N", "126", "--eps", "0.02", "--delta", "0.9",
    )
    assert code == 2
    assert "configuration error" in err


def test_bound_rejects_bad_quantile(capsys):
    code, _, err = run_cli(
        capsys,
        "bound", "--t", "10", "--N", "126", "--eps", "0", "--delta", "0.3",
    )
    assert code == 2
    assert "configuration error" in err


# ---------------------------------------------------------------------------
# gen subcommand
# ---------------------------------------------------------------------------

def test_gen_writes_exact_matrix(capsys, tmp_path):
    out = tmp_path / "m.csv"
    code, _, _ = run_cli(
        capsys,
        "gen", "--d", "2", "--T", "8", "--k", "2",
        "--adv", "0.1", "--m", "1", "--out", str(out),
    )
    assert code == 0
    expected = apply_advantage(build_base(2, 8), 2, 0.1)
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["action"] + [f"t{t}" for t in range(1, 9)]
    got = np.array([[float(v) for v in row[1:]] for row in rows[1:]])
    assert [int(row[0]) for row in rows[1:]] == list(range(1, 7))
    assert np.array_equal(got, expected)


def test_gen_replicates(capsys, tmp_path):
    out = tmp_path / "m.csv"
    code, _, _ = run_cli(
        capsys,
        "gen", "--d", "1", "--T", "2", "--k", "1",
        "--adv", "0.5", "--m", "3", "--out", str(out),
    )
    assert code == 0
    expected = replicate(apply_advantage(build_base(1, 2), 1, 0.5), 3)
    with open(out, newline="") as fh:
        rows = list(csv.reader(fh))
    got = np.array([[float(v) for v in row[1:]] for row in rows[1:]])
    assert got.shape == (6, 2)
    assert np.array_equal(got, expected)


def test_gen_rejects_bad_args(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "gen", "--d", "0", "--T", "2", "--k", "1",
        "--adv", "0.1", "--m", "1", "--out", str(tmp_path / "x.csv"),
    )
    assert code == 2
    assert "configuration error" in err
    code, _, err = run_cli(
        capsys,
        "gen", "--d", "2", "--T", "7", "--k", "1",
        "--adv", "0.1", "--m", "1", "--out", str(tmp_path / "x.csv"),
    )
    assert code == 2


def test_gen_io_error_exits_1(capsys, tmp_path):
    code, _, err = run_cli(
        capsys,
        "gen", "--d", "1", "--T", "2", "--k", "1",
        "--adv", "0.1", "--m", "1", "--out", str(tmp_path / "no" / "dir.csv"),
    )
    assert code == 1
    assert "error" in err


# ---------------------------------------------------------------------------
# run subcommand
# ---------------------------------------------------------------------------

def write_config(tmp_path, out_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(
        "\n".join(
            [
                "n=6",
                "k=2",
                "advantage=0.1",
                "horizon=16",
                "learner=normalhedge",
                "learner=exp-time-adaptive",
                "replication=1",
                "quantile=0.5",
                f"output={out_path}",
            ]
        )
    )
    return cfg


def test_run_end_to_end(capsys, tmp_path):
    out = tmp_path / "results.csv"
    cfg = write_config(tmp_path, out)
    code, stdout, _ = run_cli(capsys, "run", "--config", str(cfg))
    assert code == 0
    assert str(out) in stdout
    lines = out.read_text().splitlines()
    assert lines[0] == "learner,replication,k,round,regret_best,q_0.5,scale,wall_ms"
    # two learners x five default checkpoints (1,2,4,8,16)
    assert len(lines) == 1 + 2 * 5


def test_run_missing_config_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "run", "--config", str(tmp_path / "nope.cfg"))
    assert code == 2
    assert "configuration error" in err


def test_run_unwritable_output(capsys, tmp_path):
    cfg = write_config(tmp_path, tmp_path / "no" / "such" / "dir.csv")
    code, _, err = run_cli(capsys, "run", "--config", str(cfg))
    assert code == 1
    assert "error" in err


# ---------------------------------------------------------------------------
# argparse plumbing
# ---------------------------------------------------------------------------

def test_missing_subcommand_exits_2(capsys):
    assert run_cli(capsys)[0] == 2


def test_unknown_subcommand_exits_2(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_unknown_flag_exits_2(capsys):
    assert run_cli(capsys, "bound", "--bogus", "1")[0] == 2


def test_run_requires_config_flag(capsys):
    assert run_cli(capsys, "run")[0] == 2


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_parser_prog_name():
    assert build_parser().prog == "hedgebench"
