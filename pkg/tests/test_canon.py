"""Canonical forms: label invariance, rooted variants, and a brute-force
cross-check of the isomorphism decision."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chroma import CapExceeded, ColorfulGraph
from chroma.canon import canonical_key, canonicalize, isomorphic
from chroma.core import complete_bipartite, cycle_graph, path_graph


def brute_isomorphic(a, b):
    """Try every vertex bijection."""
    if a.q != b.q or a.n != b.n or a.m != b.m:
        return False
    ea = set(a.edges)
    for perm in itertools.permutations(range(a.n)):
        if all(a.palettes[v] == b.palettes[perm[v]] for v in range(a.n)) and all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in set(b.edges)
            for u, v in ea
        ) and a.m == b.m:
            return True
    return False


graphs5 = st.builds(
    lambda n, q, bits, pals: ColorfulGraph(
        q,
        tuple(p & ((1 << q) - 1) for p in pals[:n]),
        tuple(
            pair
            for i, pair in enumerate(itertools.combinations(range(n), 2))
            if bits >> i & 1
        ),
    ),
    st.integers(0, 5),
    st.integers(0, 2),
    st.integers(0, 1 << 10),
    st.lists(st.integers(0, 3), min_size=5, max_size=5),
)


@given(graphs5, st.randoms(use_true_random=False))
def test_key_is_label_invariant(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    h = g.relabel({i: order[i] for i in range(g.n)})
    assert canonical_key(g) == canonical_key(h)


@given(graphs5)
def test_canonicalize_fixed_point(g):
    c, _ = canonicalize(g)
    assert canonical_key(c) == canonical_key(g)
    c2, _ = canonicalize(c)
    assert c2 == c


@settings(max_examples=60)
@given(graphs5, graphs5)
def test_isomorphic_matches_brute_force(a, b):
    assert isomorphic(a, b) == brute_isomorphic(a, b)


def test_palettes_break_symmetry():
    plain = path_graph(3)
    end = ColorfulGraph.build(1, 3, [(0, 1), (1, 2)], {0: [1]})
    mid = ColorfulGraph.build(1, 3, [(0, 1), (1, 2)], {1: [1]})
    assert not isomorphic(end, mid)
    assert isomorphic(end, end.relabel({0: 2, 1: 1, 2: 0}))
    # q is part of identity: an uncolored graph at q=0 and q=1 differ
    assert not isomorphic(plain, plain.with_q(1))


def test_roots_respected():
    g = path_graph(3)
    # rooting at an end vs the middle distinguishes otherwise equal graphs
    assert canonical_key(g, (0,)) == canonical_key(g, (2,))
    assert canonical_key(g, (0,)) != canonical_key(g, (1,))
    assert isomorphic(g, g, (0,), (2,))
    assert not isomorphic(g, g, (0,), (1,))


def test_root_order_matters():
    g = path_graph(2)
    assert isomorphic(g, g, (0, 1), (1, 0))  # swap is an automorphism here
    h = ColorfulGraph.build(1, 2, [(0, 1)], {0: [1]})
    assert not isomorphic(h, h, (0, 1), (1, 0))


def test_rooted_canonicalize_reports_root_positions():
    g = cycle_graph(5)
    c, pos = canonicalize(g, (3,))
    assert len(pos) == 1
    assert canonical_key(c, pos) == canonical_key(g, (3,))


def test_known_nonisomorphic_pairs():
    assert not isomorphic(cycle_graph(6), complete_bipartite(3, 3))
    assert not isomorphic(path_graph(4), path_graph(5))
    a = ColorfulGraph.build(0, 6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    b = ColorfulGraph.build(0, 6, [(0, 1), (1, 2), (2, 3), (4, 5)])
    assert not isomorphic(a, b)


def test_root_validation_and_cap():
    with pytest.raises(ValueError):
        canonical_key(path_graph(2), (5,))
    big = ColorfulGraph.build(0, 40)
    with pytest.raises(CapExceeded):
        canonical_key(big)
