"""Parameter-free hedging over N actions.

The learner keeps one cumulative regret R_i per action and turns regrets into
weights through the potential

    phi(x, c) = exp(([x]_+)^2 / (2c)),        [x]_+ = max(x, 0),

where c > 0 is a scale parameter re-solved after every round so that the
average potential over all actions equals e.  Weights for the next round are
proportional to the derivative of phi at each action's cumulative regret,

    w_i  ~  ([R_i]_+ / c) * exp(([R_i]_+)^2 / (2c)),

so actions with non-positive regret get exactly zero weight.  There is no
learning rate to tune and no horizon to know in advance.
"""

import math
from dataclasses import dataclass

import numpy as np

from hedgebench.errors import ConfigError, InputError

# Bisection stops once the mean-potential residual drops below this fraction
# of e.  Tighter than the 1e-10 the public contract promises so that runs over
# replicated action sets (whose mean is summed in a different order) stay
# aligned round by round.
SCALE_RESIDUAL_RTOL = 1e-13
SCALE_MAX_ITERS = 200
# Exponents are clamped here before exponentiation.  Clamping can only occur
# for bracketing guesses far below the root; at the root the average equals e,
# so every exponent is at most ln(N*e).
MAX_EXPONENT = 700.0


@dataclass
class LearnerState:
    """Complete learner state after ``round`` rounds.

    ``weights`` is the distribution the learner plays next round; ``regrets``
    and ``scale`` summarize the rounds seen so far.  ``scale`` is None until
    the first round that leaves some action with positive regret, and never
    decreases once set.  Treat instances as values: ``advance`` returns a new
    state and never mutates its argument.
    """

    regrets: np.ndarray
    scale: float | None
    weights: np.ndarray
    round: int
    num_actions: int


@dataclass
class RoundOutcome:
    """What one round did: the realized (expected) learner loss, the per-action
    regret increments, and the scale in force after the update (None while no
    action has positive regret)."""

    learner_loss: float
    instantaneous_regrets: np.ndarray
    new_scale: float | None


def potential(x, c):
    """Evaluate phi(x, c) = exp(([x]_+)^2 / (2c)).

    Parameters
    ----------
    x : float or array
        Cumulative regret(s); negative values clip to zero.
    c : float
        Scale, strictly positive.

    Returns
    -------
    float or array (broadcasts over ``x``); always >= 1, and == 1 iff x <= 0.
    """
    if c <= 0:
        raise ValueError("scale c must be positive")
    xp = np.maximum(x, 0.0)
    out = np.exp(xp * xp / (2.0 * c))
    return float(out) if np.ndim(x) == 0 else out


def potential_derivative(x, c):
    """d/dx phi(x, c) = ([x]_+ / c) * exp(([x]_+)^2 / (2c)); zero for x <= 0."""
    if c <= 0:
        raise ValueError("scale c must be positive")
    xp = np.maximum(x, 0.0)
    out = (xp / c) * np.exp(xp * xp / (2.0 * c))
    return float(out) if np.ndim(x) == 0 else out


def solve_scale(regrets, num_actions):
    """Solve (1/N) * sum_i exp(([R_i]_+)^2 / (2c)) = e for c > 0.

    The left-hand side is strictly decreasing in c whenever some regret is
    positive, so the root is unique.  Bracketing starts at
    c0 = max_i ([R_i]_+)^2 / 2, which is always an upper bracket (every
    exponent is then <= 1, so the mean is <= e); the lower bracket is found by
    halving.  Bisection then runs until the relative residual on the left-hand
    side is below SCALE_RESIDUAL_RTOL or SCALE_MAX_ITERS iterations pass.

    Parameters
    ----------
    regrets : array of shape (num_actions,)
    num_actions : int, >= 2

    Returns
    -------
    float
        The scale c, or None when no regret is positive (the equation then has
        no solution: the left-hand side is identically 1).
    """
    if num_actions < 2:
        raise ConfigError("num_actions must be >= 2")
    r = np.asarray(regrets, dtype=np.float64)
    if r.ndim != 1 or r.shape[0] != num_actions:
        raise ConfigError(
            f"expected {num_actions} regrets, got shape {r.shape}"
        )

    rp = r[r > 0.0]
    if rp.size == 0:
        return None
    q = rp * rp  # squared positive regrets
    n_rest = num_actions - q.size  # actions contributing exp(0) = 1 each

    def mean_potential(c):
        expo = np.minimum(q / (2.0 * c), MAX_EXPONENT)
        return (float(np.exp(expo).sum()) + n_rest) / num_actions

    target = math.e
    tol = SCALE_RESIDUAL_RTOL * target

    hi = float(q.max()) / 2.0
    f = mean_potential(hi)
    if abs(f - target) <= tol:
        return hi
    while f > target:  # defensive: cannot trigger from the c0 start
        hi *= 2.0
        f = mean_potential(hi)
        if abs(f - target) <= tol:
            return hi
    lo = hi
    while True:
        lo *= 0.5
        f = mean_potential(lo)
        if abs(f - target) <= tol:
            return lo
        if f > target:
            break

    # Root lies in (lo, 2*lo]; bisect.
    hi = 2.0 * lo
    c = 0.5 * (lo + hi)
    for _ in range(SCALE_MAX_ITERS):
        f = mean_potential(c)
        if abs(f - target) <= tol:
            break
        if f > target:
            lo = c
        else:
            hi = c
        c = 0.5 * (lo + hi)
    return c


def init_state(num_actions):
    """Fresh state: zero regrets, uniform weights, scale unset, round 0."""
    if num_actions < 2:
        raise ConfigError("num_actions must be >= 2")
    n = int(num_actions)
    return LearnerState(
        regrets=np.zeros(n),
        scale=None,
        weights=np.full(n, 1.0 / n),
        round=0,
        num_actions=n,
    )


def regret_update(state, losses):
    """Shared first half of a round for every learner in the package.

    Returns (learner_loss, instantaneous_regrets, new_cumulative_regrets)
    where learner_loss = <weights, losses> and the instantaneous regret of
    action i is learner_loss - losses[i].
    """
    ell = np.asarray(losses, dtype=np.float64)
    if ell.ndim != 1 or ell.shape[0] != state.num_actions:
        raise ConfigError(
            f"expected {state.num_actions} losses, got shape {ell.shape}"
        )
    if not np.all(np.isfinite(ell)):
        raise InputError("losses must all be finite")
    learner_loss = float(state.weights @ ell)
    inst = learner_loss - ell
    return learner_loss, inst, state.regrets + inst


def _weights_from_regrets(regrets, c):
    # Proportional to potential_derivative(R_i, c); the common 1/c factor
    # cancels in normalization, and the largest exponent is shifted out before
    # exponentiation so nothing overflows.  [R]_+ = 0 gives weight exactly 0.
    rp = np.maximum(regrets, 0.0)
    expo = rp * rp / (2.0 * c)
    w = rp * np.exp(expo - expo.max())
    return w / w.sum()


def advance(state, losses):
    """Play one round: consume the loss vector, return (new_state, outcome).

    Steps: realize learner_loss = <weights, losses>; add the instantaneous
    regrets; re-solve the scale; set next-round weights proportional to the
    potential derivative.  When no regret is positive the scale is carried
    over unchanged (possibly still unset) and the next weights are uniform.
    """
    learner_loss, inst, regrets = regret_update(state, losses)
    c = solve_scale(regrets, state.num_actions)
    if c is None:
        scale = state.scale
        weights = np.full(state.num_actions, 1.0 / state.num_actions)
    else:
        scale = c
        weights = _weights_from_regrets(regrets, c)
    new_state = LearnerState(
        regrets=regrets,
        scale=scale,
        weights=weights,
        round=state.round + 1,
        num_actions=state.num_actions,
    )
    return new_state, RoundOutcome(learner_loss, inst, scale)
