"""Minimum-discrepancy de Bruijn sequences.

Streaming generation in O(n) memory and O(n) time per symbol, discrepancy
measurement with an exact quadratic oracle, de Bruijn validation, and an
exhaustive decision procedure for the exact minimum at small parameters.
"""

from .analysis import (
    CyclicSequence,
    DeBruijnValidation,
    DiscrepancyReport,
    discrepancy,
    discrepancy_naive,
    is_de_bruijn,
    validate_de_bruijn,
)
from .core import (
    DifferenceArray,
    Histogram,
    SymbolString,
    diff_array,
    hist_difference,
    hist_normalize,
    hist_partial_sum,
    histogram,
    icr,
    icr_inverse,
    is_minimal_rotation,
)
from .generator import (
    GeneratorState,
    TransitionKind,
    correct_difference_array,
    generate,
    is_rep,
    is_valid_arc,
    transition,
)
from .search import (
    Answer,
    ExistenceResult,
    MinDiscrepancyResult,
    Outcome,
    SearchBudget,
    exists_debruijn_with_discrepancy,
    min_discrepancy,
)

__version__ = "0.1.0"

__all__ = [
    "SymbolString",
    "Histogram",
    "DifferenceArray",
    "icr",
    "icr_inverse",
    "histogram",
    "hist_difference",
    "hist_partial_sum",
    "hist_normalize",
    "diff_array",
    "is_minimal_rotation",
    "TransitionKind",
    "GeneratorState",
    "correct_difference_array",
    "is_rep",
    "transition",
    "generate",
    "is_valid_arc",
    "CyclicSequence",
    "DiscrepancyReport",
    "DeBruijnValidation",
    "discrepancy",
    "discrepancy_naive",
    "is_de_bruijn",
    "validate_de_bruijn",
    "SearchBudget",
    "Answer",
    "ExistenceResult",
    "Outcome",
    "MinDiscrepancyResult",
    "exists_debruijn_with_discrepancy",
    "min_discrepancy",
]
