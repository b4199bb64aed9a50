"""Two classical comparison learners sharing the round-advance interface.

Exp: exponential weights with the time-decaying rate eta_t = sqrt(8 ln(N)/t).
Poly: weights proportional to ([R_i]_+)^(p-1) with p = 2 ln(N) by default.

Both tie their parameters to the total number of actions N, which is exactly
what the replicated-actions benchmark exploits: duplicating every action
inflates N, changes eta_t and p, and degrades these learners while leaving the
parameter-free learner untouched.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from hedgebench.errors import ConfigError
from hedgebench.normalhedge import LearnerState, RoundOutcome, regret_update


class LearningRateRule(enum.Enum):
    TIME_ADAPTIVE = "time-adaptive"


@dataclass(frozen=True)
class ExpConfig:
    num_actions: int
    learning_rate_rule: LearningRateRule = LearningRateRule.TIME_ADAPTIVE

    def __post_init__(self):
        if self.num_actions < 2:
            raise ConfigError("num_actions must be >= 2")


@dataclass(frozen=True)
class PolyConfig:
    num_actions: int
    exponent: float | None = None  # defaults to 2 ln(N)

    def __post_init__(self):
        if self.num_actions < 2:
            raise ConfigError("num_actions must be >= 2")
        if self.exponent is None:
            object.__setattr__(self, "exponent", 2.0 * math.log(self.num_actions))
        if not self.exponent > 1.0:
            raise ConfigError("exponent must be > 1")


def time_adaptive_rate(round_index, num_actions):
    """eta_t = sqrt(8 ln(N) / t); strictly decreasing in t for t >= 1."""
    if round_index < 1:
        raise ConfigError("round_index must be >= 1")
    return math.sqrt(8.0 * math.log(num_actions) / round_index)


def exp_weights(regrets, eta):
    """Weights proportional to exp(eta * R_i), max-shifted for stability.

    Invariant to adding a common constant to all regrets.
    """
    z = eta * np.asarray(regrets, dtype=np.float64)
    w = np.exp(z - z.max())
    return w / w.sum()


def poly_weights(regrets, exponent):
    """Weights proportional to ([R_i]_+)^(exponent - 1); uniform fallback when
    no regret is positive (the formula is then identically zero)."""
    rp = np.maximum(regrets, 0.0)
    if not rp.any():
        return np.full(rp.shape[0], 1.0 / rp.shape[0])
    w = rp ** (exponent - 1.0)
    return w / w.sum()


def _check_cfg(state, cfg):
    if cfg.num_actions != state.num_actions:
        raise ConfigError(
            f"config is for {cfg.num_actions} actions, state has {state.num_actions}"
        )


def exp_advance(state, losses, cfg):
    """One exponential-weights round.

    Regrets update exactly as in the core learner; the next round's weights
    are exp_weights(R, eta_{t+1}) where t is the round just played.  The scale
    field is not part of this learner and is carried through unchanged.
    """
    _check_cfg(state, cfg)
    learner_loss, inst, regrets = regret_update(state, losses)
    new_round = state.round + 1
    eta = time_adaptive_rate(new_round + 1, cfg.num_actions)
    new_state = LearnerState(
        regrets=regrets,
        scale=state.scale,
        weights=exp_weights(regrets, eta),
        round=new_round,
        num_actions=state.num_actions,
    )
    return new_state, RoundOutcome(learner_loss, inst, state.scale)


def poly_advance(state, losses, cfg):
    """One polynomial-weights round; same regret bookkeeping as the core."""
    _check_cfg(state, cfg)
    learner_loss, inst, regrets = regret_update(state, losses)
    new_state = LearnerState(
        regrets=regrets,
        scale=state.scale,
        weights=poly_weights(regrets, cfg.exponent),
        round=state.round + 1,
        num_actions=state.num_actions,
    )
    return new_state, RoundOutcome(learner_loss, inst, state.scale)
