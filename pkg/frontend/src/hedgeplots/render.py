"""Chart rendering: final-round regret versus replication factor.

One image per k panel, one series per learner, log-scale x axis.  Rendering
is read-only over the input CSV; image bytes depend on the matplotlib
toolchain and are deliberately not pinned anywhere.
"""

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from hedgeplots.data import extract_series, read_rows


@dataclass(frozen=True)
class PlotSpec:
    """What to render.

    ``panels`` of None means one panel per k value found in the CSV;
    ``y_metric`` names the column supplying y values (``regret_best`` or any
    ``q_<value>`` quantile column).
    """

    input_csv: Path
    output_dir: Path
    panels: tuple | None = None
    y_metric: str = "regret_best"


def render(spec):
    """Render the charts; returns the written image paths in panel order.

    One file ``regret_k<k>.png`` per panel.  Raises SchemaError for CSV
    problems and ValueError when a requested panel has no rows.
    """
    rows = read_rows(spec.input_csv)
    series_by_k = extract_series(rows, spec.y_metric)
    if spec.panels is None:
        panels = sorted(series_by_k)
    else:
        panels = list(spec.panels)
        missing = [k for k in panels if k not in series_by_k]
        if missing:
            raise ValueError(f"no rows with k={missing[0]}")
    out_dir = Path(spec.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for k in panels:
        fig, ax = plt.subplots(figsize=(5.0, 4.0))
        for learner in sorted(series_by_k[k]):
            points = series_by_k[k][learner]
            ax.plot(
                [factor for factor, _ in points],
                [value for _, value in points],
                marker="o",
                label=learner,
            )
        ax.set_xscale("log", base=2)
        ax.set_xlabel("replication factor")
        ax.set_ylabel(spec.y_metric)
        ax.set_title(f"k = {k}")
        ax.grid(True, alpha=0.3)
        ax.legend()
        path = out_dir / f"regret_k{k}.png"
        fig.savefig(path, dpi=120, bbox_inches="tight")
        plt.close(fig)
        written.append(path)
    return written
