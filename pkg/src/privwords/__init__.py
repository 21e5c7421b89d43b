"""Privileged words, correlation polynomials and prefix-synchronized code counts."""

from .asymptotics import (
    AsymptoticEstimate,
    BoundReport,
    RootResult,
    choose_p,
    decompose,
    dominant_root,
    expansions,
    gp_asymptotic,
    lemma5_ratio,
    ln_r_q_constant,
    ln_rho_expansion,
    ln_rq_expansion,
    lower_bound_sum,
    lower_bound_sweep,
    r_q_constant,
)
from .enumeration import CountCache, CountRecord, count_privileged, list_privileged
from .errors import BudgetExceeded, DegenerateRQ, NoDominantRoot, NumericDegeneracy
from .synccode import (
    GpRecord,
    PatternAutomaton,
    brute_force_gp,
    build_automaton,
    exact_gp,
    gp_sequence,
    list_codewords,
)
from .words import (
    AutocorrelationVector,
    CorrelationPolynomial,
    Word,
    autocorrelation,
    border_lengths,
    correlation_polynomial,
    count_occurrences,
    failure_function,
    is_privileged,
    privileged_witness,
)

__version__ = "0.1.0"
