"""Experiment harness: adversarial loss stream -> learners -> regret records.

Each (learner, replication factor) pair is one cell.  A cell streams loss
columns one round at a time (never materializing the N x T matrix), advances
its learner, and snapshots regrets at checkpoint rounds.  Records sort
deterministically and floats print with 9 significant digits, so two runs of
the same spec produce byte-identical CSV files; for that reason RunRecord's
wall_ms field is fixed at 0 and real per-cell timings go to the log instead.
"""

import csv
import enum
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from hedgebench.adversary import AdversaryConfig, LossColumnSource
from hedgebench.analytics import RegretTracker
from hedgebench.baselines import ExpConfig, PolyConfig, exp_advance, poly_advance
from hedgebench.errors import ConfigError
from hedgebench.normalhedge import advance, init_state

log = logging.getLogger(__name__)


class Learner(enum.Enum):
    NORMAL_HEDGE = "normalhedge"
    EXP_TIME_ADAPTIVE = "exp-time-adaptive"
    POLY_WEIGHTS = "poly"


def default_checkpoints(horizon):
    """Powers of two up to the horizon, plus the horizon itself."""
    points = []
    p = 1
    while p <= horizon:
        points.append(p)
        p *= 2
    if points[-1] != horizon:
        points.append(horizon)
    return points


@dataclass(frozen=True)
class ExperimentSpec:
    """One benchmark sweep.

    ``adversary`` is the unreplicated base configuration (total == effective
    actions); each replication factor m runs the same block replicated to
    N = m * n actions.  ``checkpoint_rounds`` of None means powers of two up
    to the horizon plus the horizon.
    """

    adversary: AdversaryConfig
    learners: tuple
    quantiles: tuple
    replication_factors: tuple
    output_path: Path
    checkpoint_rounds: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "learners", tuple(self.learners))
        object.__setattr__(self, "quantiles", tuple(self.quantiles))
        object.__setattr__(
            self, "replication_factors", tuple(self.replication_factors)
        )
        object.__setattr__(self, "output_path", Path(self.output_path))
        if self.checkpoint_rounds is not None:
            object.__setattr__(
                self, "checkpoint_rounds", tuple(self.checkpoint_rounds)
            )
        if self.adversary.total_actions != self.adversary.effective_actions:
            raise ConfigError(
                "adversary: base config must be unreplicated "
                "(replication_factors set the total action count)"
            )
        if not self.learners:
            raise ConfigError("learners: need at least one learner")
        for lrn in self.learners:
            if not isinstance(lrn, Learner):
                raise ConfigError(f"learners: {lrn!r} is not a known learner")
        if not self.replication_factors:
            raise ConfigError("replication_factors: need at least one factor")
        for m in self.replication_factors:
            if m < 1:
                raise ConfigError(f"replication_factors: factor {m} is < 1")
        for q in self.quantiles:
            if not 0.0 < q <= 1.0:
                raise ConfigError(f"quantiles: {q} outside (0, 1]")
        if self.checkpoint_rounds is not None:
            for cp in self.checkpoint_rounds:
                if not 1 <= cp <= self.adversary.horizon:
                    raise ConfigError(
                        f"checkpoint_rounds: {cp} outside [1, {self.adversary.horizon}]"
                    )

    @property
    def checkpoints(self):
        if self.checkpoint_rounds is None:
            return tuple(default_checkpoints(self.adversary.horizon))
        return tuple(sorted(set(self.checkpoint_rounds)))


@dataclass(frozen=True)
class RunRecord:
    """Regret snapshot of one cell at one checkpoint round."""

    learner: Learner
    replication: int
    k: int
    round: int
    regret_best: float
    regret_quantiles: tuple
    scale: float | None
    wall_ms: int


def _run_cell(learner, factor, base, quantiles, checkpoints):
    """Run one (learner, replication factor) cell; returns its records."""
    cfg = replace(
        base, total_actions=base.effective_actions * int(factor)
    )
    source = LossColumnSource(cfg)
    n_total = cfg.total_actions
    state = init_state(n_total)
    if learner is Learner.EXP_TIME_ADAPTIVE:
        econf = ExpConfig(n_total)

        def step(s, col):
            return exp_advance(s, col, econf)

    elif learner is Learner.POLY_WEIGHTS:
        pconf = PolyConfig(n_total)

        def step(s, col):
            return poly_advance(s, col, pconf)

    else:

        def step(s, col):
            return advance(s, col)

    tracker = RegretTracker(n_total)
    checkpoint_set = set(checkpoints)
    records = []
    started = time.perf_counter()
    for t in range(1, cfg.horizon + 1):
        col = source.column(t)
        state, outcome = step(state, col)
        tracker.observe(col, outcome.learner_loss, scale=state.scale)
        if t in checkpoint_set:
            records.append(
                RunRecord(
                    learner=learner,
                    replication=factor,
                    k=cfg.good_actions,
                    round=t,
                    regret_best=tracker.regret_best(),
                    regret_quantiles=tuple(
                        tracker.regret_quantile(q) for q in quantiles
                    ),
                    scale=state.scale,
                    wall_ms=0,
                )
            )
    log.info(
        "cell learner=%s m=%d N=%d T=%d: %.0f ms",
        learner.value,
        factor,
        n_total,
        cfg.horizon,
        1e3 * (time.perf_counter() - started),
    )
    return records


def _sort_key(record):
    return (record.learner.value, record.replication, record.round, record.k)


def run_experiment(spec, workers=1):
    """Execute every (learner, replication) cell of the spec.

    Returns records sorted by (learner, replication, round, k).  ``workers``
    greater than 1 fans independent cells out to worker processes; the result
    is identical either way.  ``workers=None`` uses the CPU count.
    """
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ConfigError(f"workers must be >= 1 (got {workers})")
    cells = [
        (lrn, m) for lrn in spec.learners for m in spec.replication_factors
    ]
    checkpoints = spec.checkpoints
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(cells))) as pool:
            futures = [
                pool.submit(
                    _run_cell, lrn, m, spec.adversary, spec.quantiles, checkpoints
                )
                for lrn, m in cells
            ]
            groups = [f.result() for f in futures]
    else:
        groups = [
            _run_cell(lrn, m, spec.adversary, spec.quantiles, checkpoints)
            for lrn, m in cells
        ]
    records = [record for group in groups for record in group]
    records.sort(key=_sort_key)
    return records


def _fmt(value):
    return f"{value:.9g}"


def emit_csv(records, path, quantiles=None):
    """Write records as a UTF-8 CSV.

    Header: learner,replication,k,round,regret_best,<q_... columns>,scale,wall_ms.
    ``quantiles`` supplies the q_<value> column labels and must match the
    number of quantile regrets carried by the records; it may be omitted only
    when the records carry none.  Rows are sorted by (learner, replication,
    round, k); floats print with 9 significant digits; an unset scale prints
    as an empty cell.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to write")
    nq = len(records[0].regret_quantiles)
    if any(len(r.regret_quantiles) != nq for r in records):
        raise ConfigError("records disagree on the number of quantile regrets")
    if quantiles is None:
        quantiles = ()
    quantiles = tuple(quantiles)
    if len(quantiles) != nq:
        raise ConfigError(
            f"{nq} quantile regrets per record but {len(quantiles)} quantile labels"
        )
    records.sort(key=_sort_key)
    header = (
        ["learner", "replication", "k", "round", "regret_best"]
        + [f"q_{q}" for q in quantiles]
        + ["scale", "wall_ms"]
    )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for r in records:
            writer.writerow(
                [r.learner.value, r.replication, r.k, r.round, _fmt(r.regret_best)]
                + [_fmt(v) for v in r.regret_quantiles]
                + ["" if r.scale is None else _fmt(r.scale), r.wall_ms]
            )


_SCALAR_KEYS = {"n", "k", "advantage", "horizon", "output"}
_LIST_KEYS = {"learner", "replication", "quantile", "checkpoint"}
_REQUIRED_KEYS = {"n", "k", "advantage", "horizon", "output", "learner", "replication"}


def parse_config_text(text):
    """Parse flat ``key=value`` lines into {key: [values]}.

    Repeated keys build lists; blank lines and lines starting with ``#`` are
    skipped; scalar keys may not repeat.  Unknown keys are an error.
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw!r}")
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if key not in _SCALAR_KEYS | _LIST_KEYS:
            raise ConfigError(f"line {lineno}: unknown config key {key!r}")
        if key in _SCALAR_KEYS and key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        values.setdefault(key, []).append(val)
    return values


def _parse_one(values, key, convert, kind):
    out = []
    for v in values.get(key, []):
        try:
            out.append(convert(v))
        except ValueError:
            raise ConfigError(
                f"config key {key!r}: expected {kind}, got {v!r}"
            ) from None
    return out


def load_experiment_spec(path):
    """Build an ExperimentSpec from a flat key=value config file.

    Required keys: n, k, advantage, horizon, output, learner (repeatable),
    replication (repeatable).  Optional: quantile (repeatable), checkpoint
    (repeatable; default is powers of two up to the horizon plus the horizon).
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    raw = parse_config_text(text)
    missing = sorted(_REQUIRED_KEYS - raw.keys())
    if missing:
        raise ConfigError(f"missing required config keys: {', '.join(missing)}")

    n = _parse_one(raw, "n", int, "integer")[0]
    k = _parse_one(raw, "k", int, "integer")[0]
    advantage = _parse_one(raw, "advantage", float, "number")[0]
    horizon = _parse_one(raw, "horizon", int, "integer")[0]
    learners = []
    for label in raw["learner"]:
        try:
            learners.append(Learner(label))
        except ValueError:
            valid = ", ".join(l.value for l in Learner)
            raise ConfigError(
                f"config key 'learner': unknown learner {label!r} (valid: {valid})"
            ) from None
    factors = _parse_one(raw, "replication", int, "integer")
    quantiles = _parse_one(raw, "quantile", float, "number")
    checkpoints = _parse_one(raw, "checkpoint", int, "integer") or None
    adversary = AdversaryConfig(
        effective_actions=n,
        total_actions=n,
        good_actions=k,
        advantage=advantage,
        horizon=horizon,
    )
    return ExperimentSpec(
        adversary=adversary,
        learners=tuple(learners),
        quantiles=tuple(quantiles),
        replication_factors=tuple(factors),
        output_path=Path(raw["output"][0]),
        checkpoint_rounds=tuple(checkpoints) if checkpoints else None,
    )
