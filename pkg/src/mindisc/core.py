"""Primitives for words over the alphabet {0, ..., k-1}.

Symbol strings, histograms with their difference/partial-sum calculus,
the incremented-cycle-register (ICR) rules, difference arrays, and
minimal-rotation testing. Everything here is an immutable value; all
symbol arithmetic is reduced mod k with non-negative results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

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
]


def check_alphabet(k: int) -> int:
    """Validate an alphabet size (at least two symbols)."""
    if k < 2:
        raise ValueError(f"alphabet size must be >= 2, got {k}")
    return k


@dataclass(frozen=True)
class SymbolString:
    """Fixed-length word over the alphabet {0, ..., k-1}."""

    symbols: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        check_alphabet(self.k)
        syms = tuple(self.symbols)
        if len(syms) < 1:
            raise ValueError("symbol string must be non-empty")
        for c in syms:
            if not 0 <= c < self.k:
                raise ValueError(f"symbol {c} out of range [0, {self.k})")
        object.__setattr__(self, "symbols", syms)

    @classmethod
    def zeros(cls, k: int, n: int) -> "SymbolString":
        return cls((0,) * n, k)

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> int:
        return self.symbols[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)


@dataclass(frozen=True)
class Histogram:
    """Per-symbol integer counts. Entries may be negative: histograms
    form a group under entrywise addition."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        if len(counts) < 1:
            raise ValueError("histogram must have at least one entry")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def ones(cls, k: int) -> "Histogram":
        """The constant-one histogram (the generator of the quotient)."""
        return cls((1,) * k)

    @classmethod
    def indicator(cls, k: int, b: int) -> "Histogram":
        """The indicator histogram e_b."""
        if not 0 <= b < k:
            raise ValueError(f"symbol {b} out of range [0, {k})")
        return cls(tuple(1 if i == b else 0 for i in range(k)))

    def _require_same_size(self, other: "Histogram") -> None:
        if len(self.counts) != len(other.counts):
            raise ValueError("histogram sizes differ")

    def __add__(self, other: "Histogram") -> "Histogram":
        self._require_same_size(other)
        return Histogram(tuple(a + b for a, b in zip(self.counts, other.counts)))

    def __sub__(self, other: "Histogram") -> "Histogram":
        self._require_same_size(other)
        return Histogram(tuple(a - b for a, b in zip(self.counts, other.counts)))

    def __neg__(self) -> "Histogram":
        return Histogram(tuple(-a for a in self.counts))

    def __len__(self) -> int:
        return len(self.counts)


@dataclass(frozen=True)
class DifferenceArray:
    """Cyclic difference array of a symbol string.

    Entry 0 carries an extra -1, which makes the total sum congruent to
    -1 mod k; construction rejects arrays violating that identity.
    """

    entries: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        check_alphabet(self.k)
        entries = tuple(self.entries)
        if len(entries) < 1:
            raise ValueError("difference array must be non-empty")
        for c in entries:
            if not 0 <= c < self.k:
                raise ValueError(f"entry {c} out of range [0, {self.k})")
        if sum(entries) % self.k != self.k - 1:
            raise ValueError("difference array entries must sum to -1 mod k")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def icr(s: SymbolString, inc: int) -> SymbolString:
    """Incremented cycle register: rotate left, adding `inc` mod k to the
    symbol that wraps around."""
    syms = s.symbols
    return SymbolString(syms[1:] + ((syms[0] + inc) % s.k,), s.k)


def icr_inverse(s: SymbolString, inc: int) -> SymbolString:
    """Inverse of ``icr``: rotate right, subtracting `inc` mod k from the
    symbol that wraps back to the front."""
    syms = s.symbols
    return SymbolString(((syms[-1] - inc) % s.k,) + syms[:-1], s.k)


def histogram(s: SymbolString) -> Histogram:
    counts = [0] * s.k
    for c in s.symbols:
        counts[c] += 1
    return Histogram(tuple(counts))


def hist_difference(h: Histogram) -> int:
    """Largest count minus smallest count; non-negative."""
    return max(h.counts) - min(h.counts)


def hist_partial_sum(h: Histogram) -> Histogram:
    out = []
    acc = 0
    for c in h.counts:
        acc += c
        out.append(acc)
    return Histogram(tuple(out))


def hist_normalize(h: Histogram) -> Histogram:
    """Canonical representative modulo the all-ones histogram: subtract a
    constant so entry 0 becomes zero. Two histograms are equivalent mod
    the all-ones histogram iff their normalizations are equal."""
    base = h.counts[0]
    return Histogram(tuple(c - base for c in h.counts))


def _diff_kernel(symbols: Sequence[int], k: int) -> list[int]:
    # d[i] = s[i-1] - s[i] mod k, with the convention s[-1] = s[n-1] - 1;
    # the extra -1 makes ICR_1 act on d as a plain left rotation.
    n = len(symbols)
    out = [0] * n
    prev = symbols[n - 1] - 1
    for i in range(n):
        c = symbols[i]
        out[i] = (prev - c) % k
        prev = c
    return out


def diff_array(s: SymbolString) -> DifferenceArray:
    """Difference array of s: entry i is s[i-1] - s[i] mod k, where the
    symbol before position 0 is taken to be s[n-1] - 1."""
    return DifferenceArray(tuple(_diff_kernel(s.symbols, s.k)), s.k)


def is_minimal_rotation(a: Sequence[int]) -> bool:
    """True iff no rotation of `a` is lexicographically strictly smaller.

    Periodic arrays tie with some of their rotations; ties count as
    minimal. Single O(n) scan over the doubled array (modified Duval).
    """
    n = len(a)
    if n == 0:
        raise ValueError("empty array has no rotations")
    aa = list(a)
    aa += aa
    i = 0
    for j in range(1, 2 * n):
        x = aa[i]
        y = aa[j]
        if y < x:
            return False
        if x < y:
            i = 0
        else:
            i += 1
    return True
