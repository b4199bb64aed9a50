"""Regret accounting and closed-form bound evaluation.

quantile_regret compares the learner's cumulative loss against the
floor(eps*N)-th smallest cumulative action loss (1-indexed, clamped to the
minimum), so eps = 1/N is regret to the single best action.  The bound
functions evaluate the learner's theoretical guarantees as plain formulas so
runs can be checked against them; RegretTracker does the streaming per-round
bookkeeping for the benchmark harness.
"""

import math
from dataclasses import dataclass

import numpy as np

from hedgebench.errors import ConfigError

# A round whose losses span more than an interval of length 1 (plus float
# slack) violates the premise of the bound formulas; reports carry a flag
# instead of rejecting the run, because the benchmark adversary itself uses
# spread-2 columns on purpose.
_SPREAD_LIMIT = 1.0 + 1e-12


def quantile_regret(per_action_cumloss, learner_cumloss, quantile, num_actions):
    """Learner's cumulative loss minus the top-quantile cumulative loss.

    The target is the j-th smallest cumulative action loss with
    j = max(floor(quantile * num_actions), 1), 1-indexed; quantile = 1/N gives
    regret to the best action.  Ascending stable sort; only the value at the
    index is used, so tie order cannot matter.
    """
    if not 0.0 < quantile <= 1.0:
        raise ConfigError(f"quantile must lie in (0, 1] (got {quantile})")
    losses = np.asarray(per_action_cumloss, dtype=np.float64)
    if losses.ndim != 1 or losses.shape[0] != num_actions:
        raise ConfigError(
            f"expected {num_actions} cumulative losses, got shape {losses.shape}"
        )
    j = max(math.floor(quantile * num_actions), 1)
    target = np.sort(losses, kind="stable")[j - 1]
    return float(learner_cumloss - target)


@dataclass(frozen=True)
class BoundParams:
    """Inputs to theorem1_bound: rounds t, actions N, quantile eps, slack delta."""

    t: int
    num_actions: int
    quantile: float
    delta: float

    def __post_init__(self):
        if self.t < 0:
            raise ConfigError(f"t must be >= 0 (got {self.t})")
        if self.num_actions < 2:
            raise ConfigError("num_actions must be >= 2")
        if not 0.0 < self.quantile <= 1.0:
            raise ConfigError(f"quantile must lie in (0, 1] (got {self.quantile})")
        if not 0.0 < self.delta <= 0.5:
            raise ConfigError(f"delta must lie in (0, 1/2] (got {self.delta})")


def theorem1_bound(params):
    """Anytime bound on the regret to the top quantile of actions:

        sqrt((1 + ln(1/eps)) * (3(1 + 50 delta) t
                                + (16 ln^2 N / delta)(10.2 / delta^2 + ln N)))

    Valid for unit-length loss ranges; monotone nondecreasing in t and
    nonincreasing in eps.
    """
    p = params
    ln_n = math.log(p.num_actions)
    inner = 3.0 * (1.0 + 50.0 * p.delta) * p.t + (
        16.0 * ln_n**2 / p.delta
    ) * (10.2 / p.delta**2 + ln_n)
    return math.sqrt((1.0 + math.log(1.0 / p.quantile)) * inner)


def lemma1_bound(scale, num_actions, quantile=None):
    """Regret ceiling sqrt(2 c (ln(1/eps) + 1)) implied by the current scale.

    With the default eps = 1/num_actions this bounds the regret to the best
    action: sqrt(2 c (ln N + 1)).
    """
    if not scale > 0:
        raise ValueError(f"scale must be positive (got {scale})")
    if quantile is None:
        quantile = 1.0 / num_actions
    if not 0.0 < quantile <= 1.0:
        raise ConfigError(f"quantile must lie in (0, 1] (got {quantile})")
    return math.sqrt(2.0 * scale * (math.log(1.0 / quantile) + 1.0))


def asymptotic_bound(t, quantile):
    """Leading growth term sqrt(3 t (1 + ln(1/eps))), for plotting alongside
    empirical regret curves."""
    if t < 0:
        raise ConfigError(f"t must be >= 0 (got {t})")
    if not 0.0 < quantile <= 1.0:
        raise ConfigError(f"quantile must lie in (0, 1] (got {quantile})")
    return math.sqrt(3.0 * t * (1.0 + math.log(1.0 / quantile)))


@dataclass
class RegretReport:
    """Per-round traces of one run.

    ``scale_trace`` holds NaN for rounds where the learner's scale was unset;
    ``assumption_violated`` is True when any round's loss spread exceeded 1,
    in which case the bound formulas' premises did not hold for the run.
    ``per_action_cumloss`` is the final cumulative loss vector.
    """

    rounds: int
    learner_cumloss: np.ndarray
    per_action_cumloss: np.ndarray
    regret_best: np.ndarray
    regret_quantile: dict
    scale_trace: np.ndarray
    assumption_violated: bool


class RegretTracker:
    """Streaming per-round regret accounting for one learner run.

    Feed each round's loss column and the realized learner loss via
    ``observe``; query ``regret_best`` / ``regret_quantile`` at any time or
    collect the full traces with ``report``.  Memory is O(N) for the
    cumulative statistics plus O(rounds) floats per trace.
    """

    def __init__(self, num_actions, quantiles=()):
        if num_actions < 2:
            raise ConfigError("num_actions must be >= 2")
        for q in quantiles:
            if not 0.0 < q <= 1.0:
                raise ConfigError(f"quantile must lie in (0, 1] (got {q})")
        self.num_actions = int(num_actions)
        self.quantiles = tuple(quantiles)
        self.action_cumloss = np.zeros(self.num_actions)
        self.learner_cumloss = 0.0
        self.rounds = 0
        self.assumption_violated = False
        self._learner_trace = []
        self._best_trace = []
        self._scale_trace = []
        self._quantile_traces = {q: [] for q in self.quantiles}

    def observe(self, losses, learner_loss, scale=None):
        """Record one round: the loss column, the learner's realized loss, and
        (optionally) the learner's scale after the round."""
        ell = np.asarray(losses, dtype=np.float64)
        if ell.ndim != 1 or ell.shape[0] != self.num_actions:
            raise ConfigError(
                f"expected {self.num_actions} losses, got shape {ell.shape}"
            )
        if float(ell.max() - ell.min()) > _SPREAD_LIMIT:
            self.assumption_violated = True
        self.action_cumloss += ell
        self.learner_cumloss += float(learner_loss)
        self.rounds += 1
        self._learner_trace.append(self.learner_cumloss)
        self._best_trace.append(self.regret_best())
        self._scale_trace.append(math.nan if scale is None else float(scale))
        for q in self.quantiles:
            self._quantile_traces[q].append(self.regret_quantile(q))

    def regret_best(self):
        """Current cumulative regret to the best action."""
        return float(self.learner_cumloss - self.action_cumloss.min())

    def regret_quantile(self, quantile):
        """Current cumulative regret to the top ``quantile`` of actions."""
        return quantile_regret(
            self.action_cumloss, self.learner_cumloss, quantile, self.num_actions
        )

    def report(self):
        """Snapshot all traces into a RegretReport."""
        return RegretReport(
            rounds=self.rounds,
            learner_cumloss=np.asarray(self._learner_trace),
            per_action_cumloss=self.action_cumloss.copy(),
            regret_best=np.asarray(self._best_trace),
            regret_quantile={
                q: np.asarray(tr) for q, tr in self._quantile_traces.items()
            },
            scale_trace=np.asarray(self._scale_trace),
            assumption_violated=self.assumption_violated,
        )
