"""Decision-theoretic online learning over expert advice.

A parameter-free hedging learner (potential-derivative weights with a
self-tuning scale), two classical baselines (time-adaptive exponential weights
and clipped polynomial weights), a deterministic Hadamard-replication
adversary, regret/bound analytics, and a CSV-emitting benchmark harness.
"""

from hedgebench.adversary import (
    AdversaryConfig,
    LossColumnSource,
    LossMatrix,
    apply_advantage,
    build_base,
    build_loss_matrix,
    hadamard,
    replicate,
    write_matrix_csv,
)
from hedgebench.analytics import (
    BoundParams,
    RegretReport,
    RegretTracker,
    asymptotic_bound,
    lemma1_bound,
    quantile_regret,
    theorem1_bound,
)
from hedgebench.baselines import (
    ExpConfig,
    LearningRateRule,
    PolyConfig,
    exp_advance,
    exp_weights,
    poly_advance,
    poly_weights,
    time_adaptive_rate,
)
from hedgebench.bench import (
    ExperimentSpec,
    Learner,
    RunRecord,
    default_checkpoints,
    emit_csv,
    load_experiment_spec,
    run_experiment,
)
from hedgebench.cli import cli_main
from hedgebench.errors import ConfigError, InputError
from hedgebench.normalhedge import (
    LearnerState,
    RoundOutcome,
    advance,
    init_state,
    potential,
    potential_derivative,
    regret_update,
    solve_scale,
)

__version__ = "0.1.0"

__all__ = [
    "AdversaryConfig",
    "BoundParams",
    "ConfigError",
    "ExpConfig",
    "ExperimentSpec",
    "InputError",
    "Learner",
    "LearnerState",
    "LearningRateRule",
    "LossColumnSource",
    "LossMatrix",
    "PolyConfig",
    "RegretReport",
    "RegretTracker",
    "RoundOutcome",
    "RunRecord",
    "advance",
    "apply_advantage",
    "asymptotic_bound",
    "build_base",
    "build_loss_matrix",
    "cli_main",
    "default_checkpoints",
    "emit_csv",
    "exp_advance",
    "exp_weights",
    "hadamard",
    "init_state",
    "lemma1_bound",
    "load_experiment_spec",
    "poly_advance",
    "poly_weights",
    "potential",
    "potential_derivative",
    "quantile_regret",
    "regret_update",
    "replicate",
    "run_experiment",
    "solve_scale",
    "theorem1_bound",
    "time_adaptive_rate",
    "write_matrix_csv",
]
