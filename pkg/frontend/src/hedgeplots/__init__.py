"""Offline charts for hedging benchmark results.

Reads the harness's results CSV and renders final-round regret versus
replication factor, one image per k panel, one series per learner.
"""

from hedgeplots.data import (
    REQUIRED_COLUMNS,
    ResultRow,
    SchemaError,
    extract_series,
    read_rows,
)
from hedgeplots.render import PlotSpec, render

__version__ = "0.1.0"

__all__ = [
    "REQUIRED_COLUMNS",
    "ResultRow",
    "SchemaError",
    "extract_series",
    "read_rows",
    "PlotSpec",
    "render",
    "__version__",
]
