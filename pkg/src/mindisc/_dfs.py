"""Depth-first search core for the minimum-discrepancy decision procedure.

One implementation, two entry points: ``dfs_search`` runs as plain Python;
``dfs_search_compiled`` is the same function compiled by numba when numba
is importable (and None otherwise). Keeping a single source guarantees the
two paths explore the identical tree in the identical order.

The search walks Hamiltonian extensions of the de Bruijn graph anchored at
the all-zeros node, i.e. it fixes the first n symbols to 0 and chooses the
rest in symbol order 0..k-1. Window uniqueness is tracked with a rolling
base-k window code and a visited bitset. A branch is cut when

  * a window code repeats,
  * some symbol exceeds its exact final count k**(n-1), or
  * for some ordered symbol pair, the running prefix-sum extrema spread
    beyond the allowed discrepancy. Any completed cycle balances every
    pair back to zero, so the pair's circular discrepancy equals its
    prefix max minus prefix min; the extrema over a partial word only
    grow, which makes the cut sound for circular (wrapping) substrings
    as well as linear ones.

A completed cycle is accepted only after its wrap windows are checked and
its full circular discrepancy is recomputed from scratch.
"""

from __future__ import annotations

import time

import numpy as np

try:
    from numba import njit, objmode

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

STATUS_NO = 0
STATUS_YES = 1
STATUS_INDETERMINATE = 2

# wallclock is consulted once per this many loop steps
_CLOCK_MASK = 65535

if HAVE_NUMBA:

    @njit(cache=True)
    def _clock() -> float:
        with objmode(t="float64"):
            t = time.monotonic()
        return t

else:  # pragma: no cover

    def _clock() -> float:
        return time.monotonic()


def dfs_search(k, n, max_disc, node_limit, deadline):
    """Decide whether a de Bruijn sequence of order n over k symbols with
    discrepancy <= max_disc exists.

    Returns (status, w, nodes) where status is STATUS_YES / STATUS_NO /
    STATUS_INDETERMINATE, w holds the witness symbols when status is YES,
    and nodes counts DFS expansions. ``node_limit`` gates each expansion;
    ``deadline`` is an absolute time.monotonic() value (pass inf for none).
    """
    L = 1
    for _ in range(n):
        L *= k
    kn1 = L // k
    cap = kn1
    D = max_disc

    npair = k * k
    S = np.zeros(npair, np.int64)
    MN = np.zeros(npair, np.int64)
    MX = np.zeros(npair, np.int64)
    counts = np.zeros(k, np.int64)
    visited = np.zeros(L, np.uint8)
    w = np.zeros(L, np.int64)
    undo = np.zeros((L, 2 * (k - 1)), np.int32)
    next_sym = np.zeros(L + 1, np.int64)
    codes = np.zeros(L + 1, np.int64)
    wrapbuf = np.zeros(n, np.int64)

    nodes = 0
    steps = 0
    status = STATUS_NO

    # Anchored prefix: n zeros. Only pair state accumulates here; the one
    # complete window (all zeros, code 0) is marked below. The count cap
    # cannot trip (k**(n-1) >= n), but the pair extrema can when
    # max_disc < n, which correctly yields NO.
    for m in range(n):
        ok = True
        for o in range(1, k):
            p = o  # pair (0, o)
            if S[p] + 1 > MX[p] and S[p] + 1 - MN[p] > D:
                ok = False
                break
            q = o * k  # pair (o, 0)
            if S[q] - 1 < MN[q] and MX[q] - (S[q] - 1) > D:
                ok = False
                break
        if not ok:
            return STATUS_NO, w, nodes
        ui = 0
        for o in range(1, k):
            p = o
            undo[m, ui] = MX[p]
            ui += 1
            S[p] += 1
            if S[p] > MX[p]:
                MX[p] = S[p]
            q = o * k
            undo[m, ui] = MN[q]
            ui += 1
            S[q] -= 1
            if S[q] < MN[q]:
                MN[q] = S[q]
        counts[0] += 1
        w[m] = 0

    visited[0] = 1
    codes[n] = 0
    next_sym[n] = 0
    depth = n

    while True:
        steps += 1
        if (steps & _CLOCK_MASK) == 0 and _clock() > deadline:
            status = STATUS_INDETERMINATE
            break
        x = next_sym[depth]
        if x >= k:
            if depth == n:
                status = STATUS_NO
                break
            # backtrack: remove symbol w[depth-1]
            depth -= 1
            xx = w[depth]
            counts[xx] -= 1
            visited[codes[depth + 1]] = 0
            ui = 0
            for o in range(k):
                if o == xx:
                    continue
                p = xx * k + o
                S[p] -= 1
                MX[p] = undo[depth, ui]
                ui += 1
                q = o * k + xx
                S[q] += 1
                MN[q] = undo[depth, ui]
                ui += 1
            continue
        next_sym[depth] = x + 1
        nc = (codes[depth] % kn1) * k + x
        if visited[nc] == 1:
            continue
        if counts[x] >= cap:
            continue
        ok = True
        for o in range(k):
            if o == x:
                continue
            p = x * k + o
            if S[p] + 1 > MX[p] and S[p] + 1 - MN[p] > D:
                ok = False
                break
            q = o * k + x
            if S[q] - 1 < MN[q] and MX[q] - (S[q] - 1) > D:
                ok = False
                break
        if not ok:
            continue
        if nodes >= node_limit:
            status = STATUS_INDETERMINATE
            break
        # expand
        ui = 0
        for o in range(k):
            if o == x:
                continue
            p = x * k + o
            undo[depth, ui] = MX[p]
            ui += 1
            S[p] += 1
            if S[p] > MX[p]:
                MX[p] = S[p]
            q = o * k + x
            undo[depth, ui] = MN[q]
            ui += 1
            S[q] -= 1
            if S[q] < MN[q]:
                MN[q] = S[q]
        counts[x] += 1
        w[depth] = x
        visited[nc] = 1
        codes[depth + 1] = nc
        nodes += 1

        if depth + 1 == L:
            # check the n-1 windows that wrap into the zero prefix
            okwrap = True
            nmark = 0
            cw = nc
            for j in range(n - 1):
                cw = (cw % kn1) * k + w[j]
                if visited[cw] == 1:
                    okwrap = False
                    break
                visited[cw] = 1
                wrapbuf[nmark] = cw
                nmark += 1
            for j in range(nmark):
                visited[wrapbuf[j]] = 0
            if okwrap:
                # full circular discrepancy of the completed cycle: every
                # pair's totals cancel, so its circular value is the spread
                # of fresh prefix sums
                good = True
                for a in range(k):
                    if not good:
                        break
                    for c in range(k):
                        if a == c:
                            continue
                        s = 0
                        mn = 0
                        mx = 0
                        for i in range(L):
                            sym = w[i]
                            if sym == a:
                                s += 1
                            elif sym == c:
                                s -= 1
                            if s > mx:
                                mx = s
                            elif s < mn:
                                mn = s
                        if mx - mn > D:
                            good = False
                            break
                if good:
                    status = STATUS_YES
                    break
            # completion rejected: remove the just-placed symbol
            counts[x] -= 1
            visited[nc] = 0
            ui = 0
            for o in range(k):
                if o == x:
                    continue
                p = x * k + o
                S[p] -= 1
                MX[p] = undo[depth, ui]
                ui += 1
                q = o * k + x
                S[q] += 1
                MN[q] = undo[depth, ui]
                ui += 1
            continue
        depth += 1
        next_sym[depth] = 0

    return status, w, nodes


if HAVE_NUMBA:
    dfs_search_compiled = njit(cache=True)(dfs_search)
else:  # pragma: no cover
    dfs_search_compiled = None
