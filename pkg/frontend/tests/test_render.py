import pytest

from hedgeplots.cli import cli_main
from hedgeplots.data import SchemaError
from hedgeplots.render import PlotSpec, render

HEADER = "learner,replication,k,round,regret_best,q_0.5,scale,wall_ms"


def sample_csv(tmp_path, ks=(2, 8)):
    lines = [HEADER]
    for k in ks:
        for learner, base in (("normalhedge", 2.0), ("poly", 1.0)):
            for factor in (1, 2, 4):
                lines.append(
                    f"{learner},{factor},{k},16,{base * factor},0.5,0.25,0"
                )
    path = tmp_path / "results.csv"
    path.write_text("\n".join(lines) + "\n")
    return path


def test_render_one_image_per_panel(tmp_path):
    csv_path = sample_csv(tmp_path)
    out_dir = tmp_path / "img"
    written = render(PlotSpec(csv_path, out_dir))
    assert written == [out_dir / "regret_k2.png", out_dir / "regret_k8.png"]
    for path in written:
        assert path.is_file() and path.stat().st_size > 0


def test_render_two_point_single_learner(tmp_path):
    path = tmp_path / "r.csv"
    path.write_text(
        "\n".join(
            [
                "learner,replication,k,round,regret_best,scale,wall_ms",
                "normalhedge,1,2,4,1.0,0.5,0",
                "normalhedge,2,2,4,1.1,0.5,0",
            ]
        )
        + "\n"
    )
    written = render(PlotSpec(path, tmp_path / "img"))
    assert [p.name for p in written] == ["regret_k2.png"]


def test_render_panel_subset_and_metric(tmp_path):
    csv_path = sample_csv(tmp_path)
    written = render(
        PlotSpec(csv_path, tmp_path / "img", panels=(8,), y_metric="q_0.5")
    )
    assert [p.name for p in written] == ["regret_k8.png"]


def test_render_unknown_panel(tmp_path):
    with pytest.raises(ValueError, match="k=3"):
        render(PlotSpec(sample_csv(tmp_path), tmp_path / "img", panels=(3,)))


def test_render_unknown_metric(tmp_path):
    with pytest.raises(SchemaError, match="'q_0.9'"):
        render(PlotSpec(sample_csv(tmp_path), tmp_path / "img", y_metric="q_0.9"))


def test_render_is_read_only_and_repeatable(tmp_path):
    csv_path = sample_csv(tmp_path)
    before = csv_path.read_bytes()
    spec = PlotSpec(csv_path, tmp_path / "img")
    first = render(spec)
    second = render(spec)
    assert first == second
    assert csv_path.read_bytes() == before


def test_render_empty_csv(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(SchemaError):
        render(PlotSpec(path, tmp_path / "img"))


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def test_cli_render(tmp_path, capsys):
    csv_path = sample_csv(tmp_path)
    out_dir = tmp_path / "img"
    code = cli_main(["render", "--csv", str(csv_path), "--out", str(out_dir)])
    out = capsys.readouterr().out
    assert code == 0
    assert (out_dir / "regret_k2.png").is_file()
    assert "regret_k8.png" in out


def test_cli_schema_error_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("a,b\n1,2\n")
    code = cli_main(["render", "--csv", str(path), "--out", str(tmp_path / "img")])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_cli_missing_file_exits_1(tmp_path, capsys):
    code = cli_main(
        ["render", "--csv", str(tmp_path / "nope.csv"), "--out", str(tmp_path)]
    )
    assert code == 1


def test_cli_usage_errors_exit_2(capsys):
    assert cli_main([]) == 2
    assert cli_main(["render"]) == 2
    assert cli_main(["frobnicate"]) == 2
