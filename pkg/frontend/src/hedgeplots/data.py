"""Ingestion of benchmark result CSVs.

The expected schema is the one the benchmark harness emits: columns
``learner,replication,k,round,regret_best[,q_<value>...],scale,wall_ms``.
Reading is strict: a missing or malformed column raises a SchemaError naming
the column, and an empty file is an error.  Extraction reduces the rows to
final-round series of (replication factor, metric value) points, grouped by
k panel and learner.
"""

import csv
from dataclasses import dataclass

REQUIRED_COLUMNS = (
    "learner",
    "replication",
    "k",
    "round",
    "regret_best",
    "scale",
    "wall_ms",
)


class SchemaError(ValueError):
    """The results CSV does not match the harness schema; the message names
    the offending column."""


@dataclass(frozen=True)
class ResultRow:
    """One CSV row: identity fields plus every metric column parsed to float.

    ``metrics`` maps column name to value for ``regret_best`` and any
    ``q_<value>`` quantile column present in the file.
    """

    learner: str
    replication: int
    k: int
    round: int
    metrics: dict


def _parse(row, column, convert, kind, lineno):
    raw = row.get(column)
    if raw is None or raw == "":
        raise SchemaError(f"row {lineno}: missing value in column {column!r}")
    try:
        return convert(raw)
    except ValueError:
        raise SchemaError(
            f"row {lineno}: column {column!r} expected {kind}, got {raw!r}"
        ) from None


def read_rows(path):
    """Parse a results CSV into a list of ResultRow.

    Raises SchemaError when the file is empty, a required column is missing,
    or a value fails to parse; the message names the offending column.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SchemaError("empty CSV: no header row")
        for column in REQUIRED_COLUMNS:
            if column not in reader.fieldnames:
                raise SchemaError(f"missing column {column!r}")
        metric_columns = ["regret_best"] + [
            c for c in reader.fieldnames if c.startswith("q_")
        ]
        rows = []
        for lineno, row in enumerate(reader, start=2):
            rows.append(
                ResultRow(
                    learner=_parse(row, "learner", str, "text", lineno),
                    replication=_parse(row, "replication", int, "integer", lineno),
                    k=_parse(row, "k", int, "integer", lineno),
                    round=_parse(row, "round", int, "integer", lineno),
                    metrics={
                        c: _parse(row, c, float, "number", lineno)
                        for c in metric_columns
                    },
                )
            )
    if not rows:
        raise SchemaError("empty CSV: no data rows")
    return rows


def extract_series(rows, metric="regret_best"):
    """Reduce rows to final-round series, keyed by k panel and learner.

    Returns {k: {learner: [(replication factor, value), ...]}} where each
    series is sorted by factor and the value comes from the row with the
    largest round for that (k, learner, factor) group.  ``metric`` selects
    the y column: ``regret_best`` or any ``q_<value>`` column in the file.
    """
    if not rows:
        raise SchemaError("no rows to extract from")
    if metric not in rows[0].metrics:
        available = ", ".join(sorted(rows[0].metrics))
        raise SchemaError(f"no column {metric!r} in the CSV (have: {available})")
    final = {}
    for row in rows:
        key = (row.k, row.learner, row.replication)
        if key not in final or row.round > final[key][0]:
            final[key] = (row.round, row.metrics[metric])
    out = {}
    for (k, learner, factor), (_, value) in final.items():
        out.setdefault(k, {}).setdefault(learner, []).append((factor, value))
    for panels in out.values():
        for series in panels.values():
            series.sort()
    return out
