"""Exact analysis of Penney's game and its variants.

Core objects: words over {H, T}, their correlation vectors and Conway
leading numbers, exact absorbing-chain solving, per-variant evaluators,
whole-table analysis, and a seeded Monte Carlo cross-check.
"""

from .chains import (
    AbsorbingChain,
    OutcomeDistribution,
    PrefixAutomaton,
    absorption_probabilities,
    build_prefix_automaton,
    expected_absorption_time,
    product_chain,
    single_word_chain,
)
from .errors import (
    ChainError,
    DomainError,
    LengthMismatchError,
    PenneyError,
    TableSizeError,
    UnknownVariantError,
    WordError,
)
from .montecarlo import SimulationReport, simulate
from .timing import (
    FirstTimerSequence,
    RecurrenceSpec,
    expected_wait_time,
    first_occurrence_probability,
    first_timer_sequence,
    generating_function_at,
    generating_function_coefficients,
    recurrence_for,
    verify_recurrence,
)
from .variants import (
    GameVariant,
    NoFlippancyResult,
    best_response,
    blended_probabilities,
    classic_odds,
    classic_probabilities,
    evaluate,
    head_start_probabilities,
    kth_occurrence_probabilities,
    no_flippancy_play,
    post_a_bobalyptic_probabilities,
    two_coin_probabilities,
)
from .words import (
    CorrelationVector,
    Word,
    all_words,
    autocorrelation,
    conway_leading_number,
    correlation,
    correlation_polynomial_eval,
    is_self_overlapping,
)

__version__ = "0.1.0"

__all__ = [
    "AbsorbingChain",
    "ChainError",
    "CorrelationVector",
    "DomainError",
    "FirstTimerSequence",
    "GameVariant",
    "LengthMismatchError",
    "NoFlippancyResult",
    "OutcomeDistribution",
    "PenneyError",
    "PrefixAutomaton",
    "RecurrenceSpec",
    "SimulationReport",
    "TableSizeError",
    "UnknownVariantError",
    "Word",
    "WordError",
    "absorption_probabilities",
    "all_words",
    "autocorrelation",
    "best_response",
    "blended_probabilities",
    "build_prefix_automaton",
    "classic_odds",
    "classic_probabilities",
    "conway_leading_number",
    "correlation",
    "correlation_polynomial_eval",
    "evaluate",
    "expected_absorption_time",
    "expected_wait_time",
    "first_occurrence_probability",
    "first_timer_sequence",
    "generating_function_at",
    "generating_function_coefficients",
    "head_start_probabilities",
    "is_self_overlapping",
    "kth_occurrence_probabilities",
    "no_flippancy_play",
    "post_a_bobalyptic_probabilities",
    "product_chain",
    "recurrence_for",
    "simulate",
    "single_word_chain",
    "two_coin_probabilities",
    "verify_recurrence",
]
