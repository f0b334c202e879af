"""Discrepancy measurement and de Bruijn validation for cyclic sequences.

The discrepancy of a cyclic sequence is the largest count imbalance
between any two symbols over any circular substring. The fast path runs
in O(k^2 N) time and O(N) memory by reducing each ordered symbol pair to
a maximum window sum over prefix sums of a +1/-1 map; a quadratic
enumeration is kept alongside as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .core import check_alphabet

__all__ = [
    "CyclicSequence",
    "DiscrepancyReport",
    "DeBruijnValidation",
    "discrepancy",
    "discrepancy_naive",
    "is_de_bruijn",
    "validate_de_bruijn",
]

NAIVE_LENGTH_CAP = 1 << 14

# window-to-integer encoding is used while codes fit comfortably in int64
_CODE_LIMIT = 1 << 60


class CyclicSequence:
    """Fixed sequence of symbols in [0, k), interpreted circularly.

    Indexing wraps around; the underlying storage is a read-only numpy
    array shared with callers.
    """

    __slots__ = ("_symbols", "k")

    def __init__(self, symbols: Iterable[int] | np.ndarray, k: int):
        check_alphabet(k)
        arr = np.array(symbols, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("symbols must be one-dimensional")
        if arr.size < 1:
            raise ValueError("cyclic sequence must be non-empty")
        lo, hi = int(arr.min()), int(arr.max())
        if lo < 0 or hi >= k:
            raise ValueError(f"symbols must lie in [0, {k}), found range [{lo}, {hi}]")
        arr.setflags(write=False)
        self._symbols = arr
        self.k = k

    @classmethod
    def from_digits(cls, text: str, k: int) -> "CyclicSequence":
        """Parse a contiguous digit string (one digit per symbol, k <= 10)."""
        if k > 10:
            raise ValueError("digit form is ambiguous for alphabets larger than 10")
        return cls([int(ch) for ch in text.strip()], k)

    @property
    def symbols(self) -> np.ndarray:
        return self._symbols

    def window(self, start: int, length: int) -> list[int]:
        """The circular substring of `length` symbols starting at `start`."""
        n = self._symbols.size
        return [int(self._symbols[(start + j) % n]) for j in range(length)]

    def __len__(self) -> int:
        return int(self._symbols.size)

    def __getitem__(self, i: int) -> int:
        return int(self._symbols[i % self._symbols.size])

    def __iter__(self) -> Iterator[int]:
        return (int(x) for x in self._symbols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicSequence):
            return NotImplemented
        return self.k == other.k and np.array_equal(self._symbols, other._symbols)

    def __hash__(self) -> int:
        return hash((self.k, self._symbols.tobytes()))

    def __repr__(self) -> str:
        n = self._symbols.size
        head = ",".join(str(int(x)) for x in self._symbols[:16])
        tail = ",..." if n > 16 else ""
        return f"CyclicSequence([{head}{tail}], k={self.k}, len={n})"


@dataclass(frozen=True)
class DiscrepancyReport:
    """Discrepancy value plus one maximizing circular substring.

    The witness substring, recounted, has `value` more occurrences of
    `symbol_max` than of `symbol_min`. Ties are broken by smallest start,
    then smallest length.
    """

    value: int
    start: int
    length: int
    symbol_max: int
    symbol_min: int


def _sliding_window_max(a: np.ndarray, width: int) -> np.ndarray:
    """out[i] = max(a[i : i + width]) for every full window, O(len) total."""
    m = a.size
    pad = (-m) % width
    if pad:
        a = np.concatenate([a, np.full(pad, np.iinfo(a.dtype).min, a.dtype)])
    blocks = a.reshape(-1, width)
    pre = np.maximum.accumulate(blocks, axis=1).ravel()
    suf = np.maximum.accumulate(blocks[:, ::-1], axis=1)[:, ::-1].ravel()
    return np.maximum(suf[: m - width + 1], pre[width - 1 : m])


def _pair_prefix(arr: np.ndarray, a: int, c: int) -> np.ndarray:
    """Prefix sums of the +1/-1/0 map of the pair (a, c) over the doubled
    sequence; entry 0 is 0, length 2N+1."""
    f = (arr == a).astype(np.int64) - (arr == c).astype(np.int64)
    out = np.zeros(2 * arr.size + 1, np.int64)
    np.cumsum(np.concatenate([f, f]), out=out[1:])
    return out


def _pair_best_per_start(prefix: np.ndarray, n: int) -> np.ndarray:
    """For each start position, the best window sum over lengths 1..N."""
    # window (start, len) sums to prefix[start+len] - prefix[start]
    wmax = _sliding_window_max(prefix[1:], n)
    return wmax[:n] - prefix[:n]


def discrepancy(w: CyclicSequence) -> DiscrepancyReport:
    """Exact discrepancy of `w` with a deterministic maximizing witness.

    Each ordered symbol pair (a, c) is mapped to +1/-1 and the best window
    sum over circular windows of length 1..N is taken via prefix sums and
    a sliding-window maximum; the discrepancy is the maximum over pairs.
    O(k^2 N) time, O(N) memory.
    """
    arr = w.symbols
    n = arr.size
    k = w.k
    value = 0
    for a in range(k):
        for c in range(k):
            if a == c:
                continue
            best = _pair_best_per_start(_pair_prefix(arr, a, c), n)
            value = max(value, int(best.max()))
    # second pass: first (start, length) achieving the value, pairs in
    # (a, c) order breaking exact ties
    chosen = None
    for a in range(k):
        for c in range(k):
            if a == c:
                continue
            prefix = _pair_prefix(arr, a, c)
            best = _pair_best_per_start(prefix, n)
            hits = np.nonzero(best == value)[0]
            if hits.size == 0:
                continue
            start = int(hits[0])
            seg = prefix[start + 1 : start + 1 + n]
            length = int(np.argmax(seg == prefix[start] + value)) + 1
            if chosen is None or (start, length) < chosen[:2]:
                chosen = (start, length, a, c)
    start, length, a, c = chosen
    return DiscrepancyReport(value=value, start=start, length=length,
                             symbol_max=a, symbol_min=c)


def discrepancy_naive(w: CyclicSequence) -> int:
    """Quadratic oracle: enumerate all N^2 circular substrings, counting
    symbols via per-symbol prefix counts. Rejects sequences longer than
    NAIVE_LENGTH_CAP."""
    arr = w.symbols
    n = arr.size
    if n > NAIVE_LENGTH_CAP:
        raise ValueError(f"naive discrepancy is quadratic; length {n} exceeds cap {NAIVE_LENGTH_CAP}")
    k = w.k
    doubled = np.concatenate([arr, arr])
    counts = np.zeros((k, 2 * n + 1), np.int64)
    for a in range(k):
        np.cumsum(doubled == a, out=counts[a, 1:])
    best = 0
    for start in range(n):
        seg = counts[:, start + 1 : start + n + 1] - counts[:, start : start + 1]
        diffs = seg.max(axis=0) - seg.min(axis=0)
        best = max(best, int(diffs.max()))
    return best


@dataclass(frozen=True)
class DeBruijnValidation:
    """Outcome of a de Bruijn property check.

    On a duplicate-window failure, `duplicate_positions` holds the two
    (first, second) window positions and `duplicate_window` the repeated
    window itself; on a length failure only `reason` is set.
    """

    ok: bool
    reason: str | None = None
    duplicate_positions: tuple[int, int] | None = None
    duplicate_window: tuple[int, ...] | None = None


def _window_codes(arr: np.ndarray, k: int, n: int) -> np.ndarray:
    doubled = np.concatenate([arr, arr[: n - 1]]) if n > 1 else arr
    codes = np.zeros(arr.size, np.int64)
    for j in range(n):
        codes *= k
        codes += doubled[j : j + arr.size]
    return codes


def _first_duplicate(arr: np.ndarray, k: int, n: int, force_sort: bool = False) -> tuple[int, int] | None:
    """Positions (i, j), i < j, of the duplicated window whose second
    occurrence comes first; None if all windows are distinct."""
    size = arr.size
    if not force_sort and k ** n <= _CODE_LIMIT:
        codes = _window_codes(arr, k, n)
        order = np.argsort(codes, kind="stable")
        ordered = codes[order]
        dup = np.nonzero(ordered[1:] == ordered[:-1])[0]
        if dup.size == 0:
            return None
        seconds = order[dup + 1]
        pick = int(np.argmin(seconds))
        return int(order[dup[pick]]), int(seconds[pick])
    # windows too wide for integer codes: sort window tuples directly
    doubled = np.concatenate([arr, arr[: n - 1]]) if n > 1 else arr
    windows = [tuple(int(x) for x in doubled[i : i + n]) for i in range(size)]
    order = sorted(range(size), key=lambda i: windows[i])
    best = None
    for prev, cur in zip(order, order[1:]):
        if windows[prev] == windows[cur]:
            i, j = min(prev, cur), max(prev, cur)
            if best is None or j < best[1]:
                best = (i, j)
    return best


def validate_de_bruijn(w: CyclicSequence, n: int) -> DeBruijnValidation:
    """Check that every length-n word over the alphabet occurs exactly once
    as a circular window of `w`, reporting what failed if not."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    expected = w.k ** n
    if len(w) != expected:
        return DeBruijnValidation(
            ok=False,
            reason=f"length {len(w)} != {w.k}^{n} = {expected}",
        )
    dup = _first_duplicate(w.symbols, w.k, n)
    if dup is None:
        return DeBruijnValidation(ok=True)
    i, j = dup
    window = tuple(w.window(i, n))
    return DeBruijnValidation(
        ok=False,
        reason=f"window {''.join(map(str, window)) if w.k <= 10 else window} "
               f"occurs at positions {i} and {j}",
        duplicate_positions=(i, j),
        duplicate_window=window,
    )


def is_de_bruijn(w: CyclicSequence, n: int) -> bool:
    """True iff `w` is a de Bruijn sequence of order n over its alphabet."""
    return validate_de_bruijn(w, n).ok
