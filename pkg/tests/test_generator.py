"""Generator: representative testing, the transition rule, streaming output,
and the orbit-tree structure exercised by exhaustive small-parameter runs."""

import itertools

import pytest

from mindisc import (
    GeneratorState,
    SymbolString,
    TransitionKind,
    correct_difference_array,
    generate,
    icr,
    icr_inverse,
    is_de_bruijn,
    is_rep,
    is_valid_arc,
    transition,
    CyclicSequence,
)

from conftest import (
    all_strings,
    explicit_tree,
    materialize,
    rot0_inverse,
    string_depths,
)

REFERENCE_SEQUENCES = {
    (2, 2): "1100",
    (2, 3): "11101000",
    (2, 4): "1111001011010000",
    (2, 5): "11111000101011001001101110100000",
    (2, 6): "1111110001001100111011000010110101001010111001000110111101000000",
    (3, 2): "112102200",
    (3, 3): "111212020101221002110222000",
    (4, 2): "1121320310223300",
    (4, 3): "1112123230201312023130301012213320021132203310321003110222333000",
}


# ------------------------------------------------- representative testing

@pytest.mark.parametrize(
    "symbols,k,expected",
    [
        ((1, 0, 1), 2, True),
        ((1, 1, 0), 2, False),  # zero run reaches the front
        ((0, 0, 0), 2, False),  # root orbit
    ],
)
def test_correct_difference_array_examples(symbols, k, expected):
    assert correct_difference_array(SymbolString(symbols, k)) is expected


@pytest.mark.parametrize(
    "symbols,depth,k,expected",
    [
        ((1, 0, 1), 1, 2, True),
        ((0, 1, 0), 1, 2, False),  # last symbol off by one from the depth
        ((0, 0, 0), 1, 2, False),  # the root orbit never has a representative
    ],
)
def test_is_rep_examples(symbols, depth, k, expected):
    assert is_rep(SymbolString(symbols, k), depth) is expected


def test_is_rep_compares_depth_mod_k():
    s = SymbolString((1, 0, 1), 2)
    for depth in (-3, -1, 1, 3, 11):
        assert is_rep(s, depth)
    for depth in (-2, 0, 2, 10):
        assert not is_rep(s, depth)


def test_at_most_one_representative_per_orbit():
    # exactly one per non-root orbit, none for the root; k=3,4 with n=6
    # cover periodic difference arrays
    cases = [(k, n) for k in (2, 3, 4) for n in (1, 2, 3, 4)]
    cases += [(3, 6), (4, 6)]
    for k, n in cases:
        orbits, orbit_of, parent, depth = explicit_tree(k, n)
        root = orbit_of[(0,) * n]
        for oid, members in enumerate(orbits):
            reps = [t for t in members if is_rep(SymbolString(t, k), depth[oid])]
            if oid == root:
                assert reps == [], (k, n, members)
            else:
                assert len(reps) == 1, (k, n, members, reps)


def test_representative_preimage_lies_in_parent_orbit():
    for k in (2, 3):
        for n in (2, 3, 4):
            orbits, orbit_of, parent, depth = explicit_tree(k, n)
            for oid, members in enumerate(orbits):
                for t in members:
                    if is_rep(SymbolString(t, k), depth[oid]):
                        pre = icr_inverse(SymbolString(t, k), 0)
                        assert orbit_of[pre.symbols] == parent[oid]


def test_explicit_tree_well_formed():
    # acyclic, rooted at the all-zeros orbit, and every parent arc realized
    # by an ICR_0 arc of the underlying graph
    for k in (2, 3, 4):
        for n in (1, 2, 3, 4):
            orbits, orbit_of, parent, depth = explicit_tree(k, n)
            root = orbit_of[(0,) * n]
            assert parent[root] is None and depth[root] == 0
            for oid in range(len(orbits)):
                if oid == root:
                    continue
                assert depth[oid] == depth[parent[oid]] + 1
                hops = 0
                cur = oid
                while cur != root:
                    cur = parent[cur]
                    hops += 1
                    assert hops <= len(orbits)
                realized = any(
                    orbit_of[rot0_inverse(t, k)] == parent[oid]
                    for t in orbits[oid]
                )
                assert realized, (k, n, orbits[oid])


# --------------------------------------------------------- transition rule

@pytest.mark.parametrize(
    "symbols,depth,expected_symbols,expected_depth,kind",
    [
        ((1, 1, 0), 0, (1, 0, 1), 1, TransitionKind.ENTER_CHILD),
        ((1, 0, 1), 1, (0, 1, 0), 1, TransitionKind.STAY),
        ((0, 1, 0), 1, (1, 0, 0), 0, TransitionKind.RETURN_TO_PARENT),
    ],
)
def test_transition_examples(symbols, depth, expected_symbols, expected_depth, kind):
    state, got_kind = transition(GeneratorState(SymbolString(symbols, 2), depth))
    assert state.s.symbols == expected_symbols
    assert state.depth == expected_depth
    assert got_kind is kind


def test_transition_steps_along_debruijn_arcs():
    for k in (2, 3):
        for n in (2, 3):
            depths = string_depths(k, n)
            for t in all_strings(k, n):
                state = GeneratorState(SymbolString(t, k), depths[t])
                nxt, _ = transition(state)
                assert state.s.symbols[1:] == nxt.s.symbols[:-1]


def test_transition_is_a_bijection_with_true_depths():
    for k in (2, 3, 4):
        for n in (1, 2, 3, 4):
            depths = string_depths(k, n)
            successors = set()
            for t in all_strings(k, n):
                nxt, _ = transition(GeneratorState(SymbolString(t, k), depths[t]))
                # successor depth stays consistent with the tree
                assert nxt.depth == depths[nxt.s.symbols], (k, n, t)
                successors.add(nxt.s.symbols)
            assert len(successors) == k ** n, (k, n)


def test_transition_depth_changes_by_at_most_one():
    for k in (2, 3):
        for n in (2, 3, 4):
            depths = string_depths(k, n)
            for t in all_strings(k, n):
                state = GeneratorState(SymbolString(t, k), depths[t])
                nxt, kind = transition(state)
                delta = nxt.depth - state.depth
                assert delta in (-1, 0, 1)
                assert (kind is TransitionKind.ENTER_CHILD) == (delta == 1)
                assert (kind is TransitionKind.RETURN_TO_PARENT) == (delta == -1)


# ------------------------------------------------------------- generation

@pytest.mark.parametrize(
    "k,n,expected",
    [(2, 3, "11101000"), (3, 2, "112102200"), (2, 1, "10")],
)
def test_generate_examples(k, n, expected):
    assert "".join(map(str, generate(k, n))) == expected


@pytest.mark.parametrize("k,n", sorted(REFERENCE_SEQUENCES))
def test_generate_reference_sequences(k, n):
    assert "".join(map(str, generate(k, n))) == REFERENCE_SEQUENCES[(k, n)]


def test_generate_rejects_bad_parameters():
    with pytest.raises(ValueError):
        generate(1, 3)
    with pytest.raises(ValueError):
        generate(2, 0)


def test_generate_order_one_cycles_through_alphabet():
    # no orbit has a representative at n=1, so every step is a plain
    # incremented rotation
    for k in (2, 3, 5):
        assert materialize(k, 1) == list(range(1, k)) + [0]


def test_stream_matches_repeated_transition():
    for k in (2, 3, 4):
        for n in (1, 2, 3, 4):
            state = GeneratorState(SymbolString.zeros(k, n), 0)
            expected = []
            for _ in range(k ** n):
                state, _kind = transition(state)
                expected.append(state.s.symbols[-1])
            assert state.s.symbols == (0,) * n
            assert materialize(k, n) == expected


def test_generate_emits_exactly_k_to_the_n_and_validates():
    for k in (2, 3, 4):
        for n in (1, 2, 3, 4):
            seq = materialize(k, n)
            assert len(seq) == k ** n
            assert is_de_bruijn(CyclicSequence(seq, k), n)
    for n in range(1, 17):
        seq = materialize(2, n)
        assert len(seq) == 2 ** n
        assert is_de_bruijn(CyclicSequence(seq, 2), n)


def test_generation_walk_stays_in_valid_subgraph():
    # every arc taken satisfies the valid-arc conditions under the
    # depth-plus-one assignment
    for k in (2, 3, 4):
        for n in (1, 2, 3, 4):
            depths = string_depths(k, n)
            state = GeneratorState(SymbolString.zeros(k, n), 0)
            assert depths[state.s.symbols] == 0
            enters = returns = 0
            for _ in range(k ** n):
                nxt, kind = transition(state)
                assert nxt.depth == depths[nxt.s.symbols]
                ds = (state.depth + 1) % k
                dt = (nxt.depth + 1) % k
                assert is_valid_arc(state.s, nxt.s, ds, dt), (k, n, state)
                if kind is TransitionKind.ENTER_CHILD:
                    enters += 1
                elif kind is TransitionKind.RETURN_TO_PARENT:
                    returns += 1
                state = nxt
            # the walk returns to the root: descents and ascents balance
            assert enters == returns
            assert state.depth == 0


# -------------------------------------------------------------- valid arcs

@pytest.mark.parametrize(
    "s,t,ds,dt,expected",
    [
        ((0, 0, 1), (0, 1, 1), 1, 1, True),   # ICR_1 arc, equal depths
        ((1, 1, 0), (1, 0, 1), 1, 2, True),   # descend into a child orbit
        ((0, 0, 1), (0, 1, 0), 1, 2, False),  # fails both clauses
    ],
)
def test_is_valid_arc_examples(s, t, ds, dt, expected):
    assert is_valid_arc(SymbolString(s, 2), SymbolString(t, 2), ds, dt) is expected


def test_is_valid_arc_icr1_always_valid_with_equal_depths():
    for k in (2, 3):
        for t in all_strings(k, 3):
            s = SymbolString(t, k)
            for d in range(k):
                assert is_valid_arc(s, icr(s, 1), d, d)


def test_is_valid_arc_rejects_non_arcs():
    with pytest.raises(ValueError):
        is_valid_arc(SymbolString((0, 0, 1), 2), SymbolString((1, 1, 1), 2), 0, 0)
    with pytest.raises(ValueError):
        is_valid_arc(SymbolString((0, 1), 2), SymbolString((1, 1), 3), 0, 0)
    with pytest.raises(ValueError):
        is_valid_arc(SymbolString((0, 1), 2), SymbolString((1, 1, 0), 2), 0, 0)


def test_is_valid_arc_brute_force_against_definition():
    # compare against a direct evaluation of the two clauses over all arcs
    k, n = 3, 2
    for t in all_strings(k, n):
        s = SymbolString(t, k)
        for x in range(k):
            u = SymbolString(t[1:] + (x,), k)
            for ds, dt in itertools.product(range(k), repeat=2):
                b, c = t[0], x
                expected = ((b + 1) % k == c % k and ds % k == dt % k) or (
                    (b + 1) % k == dt % k and c % k == ds % k
                )
                assert is_valid_arc(s, u, ds, dt) == expected
