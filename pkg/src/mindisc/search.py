"""Exact decision procedure for the minimum discrepancy attainable by a
de Bruijn sequence at small (k, n).

Existence of a sequence with discrepancy <= D is decided by depth-first
search over Hamiltonian extensions in the de Bruijn graph, anchored at the
all-zeros node (sound for the decision: the discrepancy and the de Bruijn
property are rotation-invariant, and every de Bruijn cycle passes through
the all-zeros node). The minimum itself needs only the single test D = n:
a NO settles the minimum at n+1 because the streaming generator attains
n+1 constructively.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass

from . import _dfs
from .analysis import CyclicSequence, discrepancy, is_de_bruijn
from .core import check_alphabet
from .generator import generate

__all__ = [
    "SearchBudget",
    "Answer",
    "ExistenceResult",
    "Outcome",
    "MinDiscrepancyResult",
    "exists_debruijn_with_discrepancy",
    "min_discrepancy",
    "MAX_SEARCH_SIZE",
]

# visited-window bitset cap
MAX_SEARCH_SIZE = 1 << 24

_UNLIMITED_NODES = 1 << 62


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for a search. Exceeding either limit yields an
    INDETERMINATE outcome, never a wrong answer."""

    time_limit: float | None = None
    node_limit: int | None = None

    def __post_init__(self) -> None:
        if self.time_limit is not None and self.time_limit < 0:
            raise ValueError("time limit must be non-negative")
        if self.node_limit is not None and self.node_limit < 0:
            raise ValueError("node limit must be non-negative")


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class ExistenceResult:
    answer: Answer
    witness: CyclicSequence | None
    nodes_expanded: int


class Outcome(enum.Enum):
    EXACT = "exact"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class MinDiscrepancyResult:
    outcome: Outcome
    value: int | None
    witness: CyclicSequence | None
    nodes_expanded: int


def _run_dfs(k: int, n: int, max_disc: int, budget: SearchBudget | None,
             use_compiled: bool | None):
    node_limit = _UNLIMITED_NODES
    deadline = math.inf
    if budget is not None:
        if budget.node_limit is not None:
            node_limit = budget.node_limit
        if budget.time_limit is not None:
            deadline = time.monotonic() + budget.time_limit
    if use_compiled is None:
        use_compiled = _dfs.dfs_search_compiled is not None
    if use_compiled:
        if _dfs.dfs_search_compiled is None:
            raise RuntimeError("compiled search kernel unavailable")
        return _dfs.dfs_search_compiled(k, n, max_disc, node_limit, deadline)
    return _dfs.dfs_search(k, n, max_disc, node_limit, deadline)


def exists_debruijn_with_discrepancy(
    k: int,
    n: int,
    max_disc: int,
    budget: SearchBudget | None = None,
    use_compiled: bool | None = None,
) -> ExistenceResult:
    """Decide whether some de Bruijn sequence of order n over k symbols has
    discrepancy at most `max_disc`.

    YES answers carry a witness that has been re-validated against the
    analysis module. The expansion order is fixed (symbol 0..k-1), so
    identical parameters and budgets reproduce identical outcomes and
    witnesses. `use_compiled` forces the numba kernel on/off; by default
    the compiled kernel is used when available.
    """
    check_alphabet(k)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if max_disc < 0:
        raise ValueError(f"discrepancy bound must be >= 0, got {max_disc}")
    if k ** n > MAX_SEARCH_SIZE:
        raise ValueError(f"k**n = {k ** n} exceeds search cap {MAX_SEARCH_SIZE}")

    status, w, nodes = _run_dfs(k, n, max_disc, budget, use_compiled)
    nodes = int(nodes)
    if status == _dfs.STATUS_YES:
        witness = CyclicSequence(w, k)
        # independent re-check of what the kernel claims
        if not is_de_bruijn(witness, n):
            raise RuntimeError("search produced a non-de-Bruijn witness")
        if discrepancy(witness).value > max_disc:
            raise RuntimeError("search produced a witness above the bound")
        return ExistenceResult(Answer.YES, witness, nodes)
    if status == _dfs.STATUS_NO:
        return ExistenceResult(Answer.NO, None, nodes)
    return ExistenceResult(Answer.INDETERMINATE, None, nodes)


def min_discrepancy(
    k: int,
    n: int,
    budget: SearchBudget | None = None,
    use_compiled: bool | None = None,
) -> MinDiscrepancyResult:
    """Exact minimum discrepancy over all de Bruijn sequences of order n on
    k symbols, or INDETERMINATE under an exhausted budget.

    Only D = n is searched: the trivial lower bound is n, and when no
    sequence attains it the streaming generator's output settles the
    minimum at n+1.
    """
    res = exists_debruijn_with_discrepancy(k, n, n, budget, use_compiled)
    if res.answer is Answer.YES:
        return MinDiscrepancyResult(Outcome.EXACT, n, res.witness, res.nodes_expanded)
    if res.answer is Answer.NO:
        witness = CyclicSequence(list(generate(k, n)), k)
        value = discrepancy(witness).value
        if value != n + 1:
            raise RuntimeError(
                f"expected the generator to attain n+1 = {n + 1}, got {value}"
            )
        return MinDiscrepancyResult(Outcome.EXACT, n + 1, witness, res.nodes_expanded)
    return MinDiscrepancyResult(Outcome.INDETERMINATE, None, None, res.nodes_expanded)
