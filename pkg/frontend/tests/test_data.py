import pytest

from hedgeplots.data import ResultRow, SchemaError, extract_series, read_rows

HEADER = "learner,replication,k,round,regret_best,q_0.5,scale,wall_ms"

SAMPLE = "\n".join(
    [
        HEADER,
        "exp-time-adaptive,1,2,16,4.5,2.25,,0",
        "normalhedge,1,2,8,1.5,0.75,0.25,0",
        "normalhedge,1,2,16,2.5,1.25,0.5,0",
        "normalhedge,4,2,16,2.5000001,1.2,0.5,0",
        "normalhedge,1,8,16,3.5,1.75,0.5,0",
    ]
)


def write(tmp_path, text, name="r.csv"):
    path = tmp_path / name
    path.write_text(text + "\n")
    return path


# ---------------------------------------------------------------------------
# read_rows
# ---------------------------------------------------------------------------

def test_read_rows_parses_types(tmp_path):
    rows = read_rows(write(tmp_path, SAMPLE))
    assert len(rows) == 5
    assert rows[1] == ResultRow(
        learner="normalhedge",
        replication=1,
        k=2,
        round=8,
        metrics={"regret_best": 1.5, "q_0.5": 0.75},
    )


def test_read_rows_without_quantile_columns(tmp_path):
    text = "\n".join(
        [
            "learner,replication,k,round,regret_best,scale,wall_ms",
            "poly,1,2,4,0.5,,0",
        ]
    )
    rows = read_rows(write(tmp_path, text))
    assert rows[0].metrics == {"regret_best": 0.5}


def test_read_rows_missing_column(tmp_path):
    text = "\n".join(
        ["learner,replication,round,regret_best,scale,wall_ms", "poly,1,4,0.5,,0"]
    )
    with pytest.raises(SchemaError, match="'k'"):
        read_rows(write(tmp_path, text))


def test_read_rows_bad_value_names_column(tmp_path):
    text = "\n".join([HEADER, "normalhedge,1,2,16,not-a-number,1.0,,0"])
    with pytest.raises(SchemaError, match="'regret_best'"):
        read_rows(write(tmp_path, text))
    text = "\n".join([HEADER, "normalhedge,one,2,16,1.0,1.0,,0"])
    with pytest.raises(SchemaError, match="'replication'"):
        read_rows(write(tmp_path, text))


def test_read_rows_short_row(tmp_path):
    text = "\n".join([HEADER, "normalhedge,1,2"])
    with pytest.raises(SchemaError, match="missing value"):
        read_rows(write(tmp_path, text))


def test_read_rows_empty_file(tmp_path):
    path = tmp_path / "empty.csv"
    path.write_text("")
    with pytest.raises(SchemaError, match="no header"):
        read_rows(path)


def test_read_rows_header_only(tmp_path):
    with pytest.raises(SchemaError, match="no data rows"):
        read_rows(write(tmp_path, HEADER))


def test_read_rows_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_rows(tmp_path / "nope.csv")


# ---------------------------------------------------------------------------
# extract_series
# ---------------------------------------------------------------------------

def test_extract_series_takes_final_round(tmp_path):
    series = extract_series(read_rows(write(tmp_path, SAMPLE)))
    # the round-8 row for (k=2, normalhedge, m=1) is superseded by round 16
    assert series[2]["normalhedge"] == [(1, 2.5), (4, 2.5000001)]
    assert series[2]["exp-time-adaptive"] == [(1, 4.5)]
    assert series[8]["normalhedge"] == [(1, 3.5)]
    assert sorted(series) == [2, 8]


def test_extract_series_sorts_by_factor(tmp_path):
    text = "\n".join(
        [
            HEADER,
            "poly,16,2,4,3.0,1.0,,0",
            "poly,1,2,4,1.0,1.0,,0",
            "poly,4,2,4,2.0,1.0,,0",
        ]
    )
    series = extract_series(read_rows(write(tmp_path, text)))
    assert series[2]["poly"] == [(1, 1.0), (4, 2.0), (16, 3.0)]


def test_extract_series_quantile_metric(tmp_path):
    series = extract_series(read_rows(write(tmp_path, SAMPLE)), metric="q_0.5")
    assert series[2]["normalhedge"] == [(1, 1.25), (4, 1.2)]


def test_extract_series_unknown_metric(tmp_path):
    rows = read_rows(write(tmp_path, SAMPLE))
    with pytest.raises(SchemaError, match="'q_0.1'"):
        extract_series(rows, metric="q_0.1")


def test_extract_series_no_rows():
    with pytest.raises(SchemaError):
        extract_series([])
