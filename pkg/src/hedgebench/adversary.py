"""Deterministic benchmark loss matrices.

The base block is derived from a Sylvester Hadamard matrix: drop the constant
row, stack the negated remainder on top of the remainder, tile horizontally to
the horizon, and halve the first column of the full matrix.  Rows then come in
exact +/- pairs and every row sums to zero over each full period, so on
average no action beats any other.  A per-round advantage is subtracted from
the first k rows to create "good" actions, and the whole block can be
replicated vertically to inflate the action count without changing the
effective problem.

All entries are dyadic rationals optionally shifted by the advantage, hence
exactly representable in binary floating point: replicated rows are
bit-for-bit equal to their originals and experiments are reproducible.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from hedgebench.errors import ConfigError


@dataclass(frozen=True)
class AdversaryConfig:
    """Parameters of the benchmark construction.

    effective_actions n must equal 2^(d+1) - 2 for some depth d >= 1;
    total_actions N must be a positive multiple of n (the replication factor
    is N/n); the horizon must be a multiple of the period 2^d.
    """

    effective_actions: int
    total_actions: int
    good_actions: int
    advantage: float
    horizon: int

    def __post_init__(self):
        n = self.effective_actions
        if n < 2 or (n + 2) & (n + 1) != 0:
            raise ConfigError(
                "effective_actions must be 2^(d+1) - 2 for some d >= 1 "
                f"(got {n})"
            )
        if self.total_actions < n or self.total_actions % n != 0:
            raise ConfigError(
                f"total_actions must be a positive multiple of {n} "
                f"(got {self.total_actions})"
            )
        if not 1 <= self.good_actions <= n:
            raise ConfigError(
                f"good_actions must lie in [1, {n}] (got {self.good_actions})"
            )
        if not (math.isfinite(self.advantage) and self.advantage > 0):
            raise ConfigError(f"advantage must be positive (got {self.advantage})")
        if self.horizon < 1 or self.horizon % self.period != 0:
            raise ConfigError(
                f"horizon must be a positive multiple of {self.period} "
                f"(got {self.horizon})"
            )

    @property
    def depth(self):
        """d such that effective_actions = 2^(d+1) - 2."""
        return (self.effective_actions + 2).bit_length() - 2

    @property
    def period(self):
        """Number of columns before the loss pattern repeats: 2^d."""
        return 2 ** self.depth

    @property
    def replication(self):
        return self.total_actions // self.effective_actions


@dataclass(frozen=True)
class LossMatrix:
    """A fully materialized N x T loss matrix plus the config it came from."""

    entries: np.ndarray
    provenance: AdversaryConfig


def hadamard(d):
    """2^d x 2^d Sylvester matrix: H_1 = [1], H_{2m} = [[H, H], [H, -H]].

    First row and first column are all +1; rows are mutually orthogonal.
    """
    if d < 0:
        raise ConfigError("d must be >= 0")
    h = np.ones((1, 1), dtype=np.int64)
    for _ in range(d):
        h = np.block([[h, h], [h, -h]])
    return h


def build_base(d, horizon):
    """Base loss block of shape (2^(d+1) - 2, horizon).

    Constructed from the 2^d Sylvester matrix by (1) deleting the constant
    first row, (2) stacking the negated remaining rows on top of the remaining
    rows, (3) tiling horizontally horizon / 2^d times, and (4) halving the
    first column of the full matrix.  Entries lie in {+-1, +-1/2}.
    """
    if d < 1:
        raise ConfigError("d must be >= 1")
    period = 2 ** d
    if horizon < 1 or horizon % period != 0:
        raise ConfigError(
            f"horizon must be a positive multiple of {period} (got {horizon})"
        )
    rows = hadamard(d)[1:].astype(np.float64)
    block = np.vstack((-rows, rows))
    out = np.tile(block, (1, horizon // period))
    out[:, 0] *= 0.5
    return out


def apply_advantage(base, k, advantage):
    """Subtract ``advantage`` from every entry of the first k rows (a copy)."""
    base = np.asarray(base, dtype=np.float64)
    if base.ndim != 2:
        raise ConfigError("base must be a 2-d matrix")
    if not 1 <= k <= base.shape[0]:
        raise ConfigError(f"k must lie in [1, {base.shape[0]}] (got {k})")
    if advantage < 0:
        raise ConfigError(f"advantage must be nonnegative (got {advantage})")
    out = base.copy()
    out[:k] -= advantage
    return out


def replicate(base, factor):
    """Stack ``factor`` vertical copies of the matrix."""
    if factor < 1:
        raise ConfigError(f"replication factor must be >= 1 (got {factor})")
    return np.tile(np.asarray(base), (int(factor), 1))


def build_loss_matrix(config):
    """Materialize the full N x T matrix for a config (small runs/inspection;
    the benchmark harness streams columns instead)."""
    base = build_base(config.depth, config.horizon)
    shifted = apply_advantage(base, config.good_actions, config.advantage)
    return LossMatrix(replicate(shifted, config.replication), config)


class LossColumnSource:
    """O(N)-per-round generator of the same columns build_loss_matrix yields.

    Holds only the (n x 2^d) +-1 pattern block; each requested column applies
    the first-round halving, the good-action advantage, and the replication
    on the fly.  Verified bitwise against the materialized matrix in tests.
    """

    def __init__(self, config):
        self.config = config
        rows = hadamard(config.depth)[1:].astype(np.float64)
        self._block = np.vstack((-rows, rows))

    def column(self, t):
        """Loss vector over all N actions for 1-indexed round t."""
        cfg = self.config
        if not 1 <= t <= cfg.horizon:
            raise ConfigError(f"round must lie in [1, {cfg.horizon}] (got {t})")
        col = self._block[:, (t - 1) % cfg.period].copy()
        if t == 1:
            col *= 0.5
        col[: cfg.good_actions] -= cfg.advantage
        if cfg.replication > 1:
            col = np.tile(col, cfg.replication)
        return col

    def columns(self):
        """Yield (t, column) for every round in order."""
        for t in range(1, self.config.horizon + 1):
            yield t, self.column(t)


def write_matrix_csv(matrix, path):
    """Export a loss matrix as CSV: header ``action,t1,...,tT``, one row per
    action (1-indexed), entries printed with the shortest round-tripping
    decimal so a parse recovers them exactly."""
    m = np.asarray(matrix)
    if m.ndim != 2:
        raise ConfigError("matrix must be 2-d")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["action"] + [f"t{j}" for j in range(1, m.shape[1] + 1)])
        for i, row in enumerate(m, start=1):
            writer.writerow([i] + [repr(float(v)) for v in row])
