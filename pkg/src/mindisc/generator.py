"""Streaming generator of minimum-discrepancy de Bruijn sequences.

A single walk of the de Bruijn graph is produced by a three-way successor
rule built from the ICR rules: descend into a child orbit when ICR_0 lands
on that orbit's representative, climb back to the parent via ICR_2 when
ICR_1 would land on a representative, and otherwise stay on the current
orbit via ICR_1. Representative testing needs only the difference array of
the candidate plus a depth counter, so the whole generator state is one
length-n string and one integer: O(n) memory, O(n) work per symbol.

The resulting cyclic sequence has discrepancy exactly n over a binary
alphabet and at most n+1 otherwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .core import (
    SymbolString,
    _diff_kernel,
    check_alphabet,
    icr,
    is_minimal_rotation,
)

__all__ = [
    "TransitionKind",
    "GeneratorState",
    "correct_difference_array",
    "is_rep",
    "transition",
    "generate",
    "is_valid_arc",
]


class TransitionKind(enum.Enum):
    """Which branch of the successor rule fired."""

    ENTER_CHILD = "enter-child"
    RETURN_TO_PARENT = "return-to-parent"
    STAY = "stay"


@dataclass(frozen=True)
class GeneratorState:
    """Full generator state: current graph node plus the tree-depth counter
    of its orbit. The counter is an unbounded signed integer; it is only
    ever compared mod k."""

    s: SymbolString
    depth: int


def _correct_diff(d: list[int]) -> bool:
    # d must be positioned so that its lexicographically minimal rotation
    # ends its first run of zeros at the last element; that positioning is
    # what lets the ICR_0-preimage land in the parent orbit.
    n = len(d)
    if d[n - 1] == 0:
        return False
    i = n - 1
    while i > 0 and d[i - 1] == 0:
        i -= 1
    if i == 0:
        # single non-zero entry at the end: the root orbit, which has no
        # representative
        return False
    return is_minimal_rotation(d[i:] + d[:i])


def correct_difference_array(s: SymbolString) -> bool:
    """True iff the difference array of s has the exact rotational position
    required of an orbit representative."""
    return _correct_diff(_diff_kernel(s.symbols, s.k))


def is_rep(s: SymbolString, depth: int) -> bool:
    """True iff s is the representative of its orbit, assuming the orbit
    sits at tree depth `depth`. Checks the difference-array position and
    that the last symbol matches the depth mod k."""
    return (depth - s.symbols[-1]) % s.k == 0 and correct_difference_array(s)


def transition(state: GeneratorState) -> tuple[GeneratorState, TransitionKind]:
    """One step of the successor rule. Exactly one branch applies; the
    branches are tried in their defining order. The returned node always
    overlaps the current one in n-1 symbols (a de Bruijn graph arc)."""
    s, depth = state.s, state.depth
    a = icr(s, 0)
    if is_rep(a, depth + 1):
        return GeneratorState(a, depth + 1), TransitionKind.ENTER_CHILD
    b = icr(s, 1)
    if is_rep(b, depth):
        return GeneratorState(icr(s, 2), depth - 1), TransitionKind.RETURN_TO_PARENT
    return GeneratorState(b, depth), TransitionKind.STAY


def generate(k: int, n: int) -> Iterator[int]:
    """Stream a minimum-discrepancy de Bruijn sequence of order n over the
    alphabet {0, ..., k-1}.

    Starts at the all-zeros node with depth 0 and emits the last symbol of
    each successor state until the walk returns to all-zeros, for exactly
    k**n symbols. Working memory stays O(n) no matter how long the
    sequence is.
    """
    check_alphabet(k)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return _stream(k, n)


def _stream(k: int, n: int) -> Iterator[int]:
    # Same rule as transition(), on raw lists. The candidate difference
    # arrays are recomputed from scratch each step: O(n) per symbol.
    s = [0] * n
    depth = 0
    zero = s[:]
    diff = _diff_kernel
    ok = _correct_diff
    while True:
        first = s[0]
        a = s[1:]
        a.append(first)  # ICR_0(s)
        if (depth + 1 - first) % k == 0 and ok(diff(a, k)):
            s = a
            depth += 1
        else:
            blast = first + 1 if first + 1 < k else first + 1 - k
            b = a[:]
            b[-1] = blast  # ICR_1(s)
            if (depth - blast) % k == 0 and ok(diff(b, k)):
                c = a
                c[-1] = (first + 2) % k  # ICR_2(s)
                s = c
                depth -= 1
            else:
                s = b
        yield s[-1]
        if s == zero:
            return


def is_valid_arc(s: SymbolString, t: SymbolString, ds: int, dt: int) -> bool:
    """Validity test for a de Bruijn graph arc (s, t) under depth labels
    ds (for s) and dt (for t), everything mod k.

    The arc is valid when, with b the first symbol of s and c the last
    symbol of t, either b+1 = c with ds = dt, or b+1 = dt with c = ds.
    Raises ValueError if (s, t) is not an arc at all.
    """
    if s.k != t.k:
        raise ValueError("endpoints use different alphabets")
    if len(s) != len(t):
        raise ValueError("endpoints have different lengths")
    if s.symbols[1:] != t.symbols[:-1]:
        raise ValueError("(s, t) is not a de Bruijn graph arc")
    k = s.k
    b = s.symbols[0]
    c = t.symbols[-1]
    if (b + 1 - c) % k == 0 and (ds - dt) % k == 0:
        return True
    return (b + 1 - dt) % k == 0 and (c - ds) % k == 0
