"""Decision engine for the St. Petersburg doubling game.

Exact payoff tables and bounded-utility transforms, reference-point net
utility evaluation with a dynamic reference, additive-utility plan
truncation, resource tie-breaking, and seeded Monte Carlo verification.
"""

from petersburg.evaluation import (
    EvaluationTrace,
    ReferencePoint,
    TerminationCriterion,
    break_tie,
    canonical_expected_utility,
    format_trace,
    incremental_evaluate,
    net_utility_vs_reference,
    relative_net_utility_table,
)
from petersburg.game import (
    GamePosition,
    GameSpec,
    UtilityTransform,
    format_payoff_table,
    is_break_even,
    minimum_win,
    named_transform,
    parse_payoff_table,
    payoff_table,
    position,
    transformed_expected_utility,
)
from petersburg.plans import (
    Plan,
    PlanAction,
    Preference,
    StateUtility,
    TruncationResult,
    load_plan,
    net_utility_of_action,
    polarity,
    prefer_by_net_utility,
    prefer_by_outcome,
    truncate,
    truncate_oracle,
)
from petersburg.simulation import (
    ConstantCoin,
    FairCoin,
    SimulationReport,
    backend,
    divergence_profile,
    simulate_position_frequency,
    simulate_truncated_game,
    stopping_histogram,
)

__version__ = "0.1.0"

__all__ = [
    "EvaluationTrace",
    "ReferencePoint",
    "TerminationCriterion",
    "break_tie",
    "canonical_expected_utility",
    "format_trace",
    "incremental_evaluate",
    "net_utility_vs_reference",
    "relative_net_utility_table",
    "GamePosition",
    "GameSpec",
    "UtilityTransform",
    "format_payoff_table",
    "is_break_even",
    "minimum_win",
    "named_transform",
    "parse_payoff_table",
    "payoff_table",
    "position",
    "transformed_expected_utility",
    "Plan",
    "PlanAction",
    "Preference",
    "StateUtility",
    "TruncationResult",
    "load_plan",
    "net_utility_of_action",
    "polarity",
    "prefer_by_net_utility",
    "prefer_by_outcome",
    "truncate",
    "truncate_oracle",
    "ConstantCoin",
    "FairCoin",
    "SimulationReport",
    "backend",
    "divergence_profile",
    "simulate_position_frequency",
    "simulate_truncated_game",
    "stopping_histogram",
    "__version__",
]
