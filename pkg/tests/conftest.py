"""Shared oracles and enumeration helpers.

Everything here is deliberately naive: tuple arithmetic, all-rotations
comparisons, and breadth-first tree construction, so the package's fast
paths are checked against independent computations.
"""

from __future__ import annotations

import itertools
from collections import deque

import pytest

from mindisc import SymbolString, generate


def all_strings(k, n):
    """Every length-n tuple over {0..k-1}."""
    return itertools.product(range(k), repeat=n)


def rot1(t, k):
    """ICR_1 on a plain tuple."""
    return t[1:] + ((t[0] + 1) % k,)


def rot0_inverse(t, k):
    """ICR_0 inverse on a plain tuple: last symbol moves to the front."""
    return (t[-1],) + t[:-1]


def naive_delta(t, k):
    """Difference array by direct formula evaluation."""
    n = len(t)
    out = []
    for i in range(n):
        if i == 0:
            out.append((t[n - 1] - t[0] - 1) % k)
        else:
            out.append((t[i - 1] - t[i]) % k)
    return tuple(out)


def naive_min_rotation(a):
    """All-rotations comparison: is `a` lexicographically no larger than
    every rotation of itself?"""
    a = tuple(a)
    n = len(a)
    return all(a <= a[i:] + a[:i] for i in range(n))


def min_rotation_of(a):
    a = tuple(a)
    n = len(a)
    return min(a[i:] + a[:i] for i in range(n))


def orbit_partition(k, n):
    """Decompose all strings into ICR_1 orbits.

    Returns (orbits, orbit_of) where orbits is a list of tuples-of-strings
    and orbit_of maps each string to its orbit index.
    """
    orbit_of = {}
    orbits = []
    for s in all_strings(k, n):
        if s in orbit_of:
            continue
        members = []
        t = s
        while t not in orbit_of:
            orbit_of[t] = len(orbits)
            members.append(t)
            t = rot1(t, k)
        orbits.append(tuple(members))
    return orbits, orbit_of


def explicit_tree(k, n):
    """Build the orbit tree from the difference-array decrement rule.

    Returns (orbits, orbit_of, parent, depth) with parent/depth indexed by
    orbit id; the root orbit (all-zeros string) has parent None, depth 0.
    """
    orbits, orbit_of = orbit_partition(k, n)
    canon_to_orbit = {}
    canon = []
    for oid, members in enumerate(orbits):
        key = min_rotation_of(naive_delta(members[0], k))
        assert key not in canon_to_orbit, "difference array must identify the orbit"
        canon_to_orbit[key] = oid
        canon.append(key)
    root = orbit_of[(0,) * n]
    parent = [None] * len(orbits)
    for oid, key in enumerate(canon):
        if oid == root:
            continue
        i = next(idx for idx, v in enumerate(key) if v != 0)
        a = list(key)
        a[i] = (a[i] - 1) % k
        a[i + 1] = (a[i + 1] + 1) % k
        parent[oid] = canon_to_orbit[min_rotation_of(a)]
    children = [[] for _ in orbits]
    for oid, p in enumerate(parent):
        if p is not None:
            children[p].append(oid)
    depth = [None] * len(orbits)
    depth[root] = 0
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in children[u]:
            depth[v] = depth[u] + 1
            queue.append(v)
    assert all(d is not None for d in depth), "tree must span every orbit"
    return orbits, orbit_of, parent, depth


def string_depths(k, n):
    """Map every string to the tree depth of its orbit."""
    orbits, orbit_of, _, depth = explicit_tree(k, n)
    return {s: depth[orbit_of[s]] for s in orbit_of}


def naive_circular_discrepancy(seq, k):
    """Triple loop over every circular substring, recounting from scratch."""
    n = len(seq)
    best = 0
    for start in range(n):
        for length in range(1, n + 1):
            counts = [0] * k
            for j in range(length):
                counts[seq[(start + j) % n]] += 1
            best = max(best, max(counts) - min(counts))
    return best


def naive_linear_discrepancy(seq, k):
    """Same, but windows may not wrap."""
    n = len(seq)
    best = 0
    for start in range(n):
        counts = [0] * k
        for end in range(start, n):
            counts[seq[end]] += 1
            best = max(best, max(counts) - min(counts))
    return best


def materialize(k, n):
    """The full generator output as a list."""
    return list(generate(k, n))


@pytest.fixture
def sstr():
    def make(symbols, k):
        return SymbolString(tuple(symbols), k)

    return make
