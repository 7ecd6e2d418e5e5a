"""Minor containment engine: plain, colored, rooted, folios, connectors."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chroma import (
    CapExceeded,
    Caps,
    ColorfulGraph,
    compute_d_folio,
    find_colorful_minor,
    find_rooted_minor,
    has_colorful_minor,
    model_violations,
    solve_wcdp,
    verify_model,
)
from chroma.core import (
    all_single_edits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from chroma.minor import (
    MinorModel,
    folios_equal,
    folios_equal_up_to_root_order,
    is_sigma_connector,
)


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


# ------------------------------------------------------------ plain minors

def test_classic_containments():
    assert has_colorful_minor(complete_graph(5), complete_graph(4))
    assert has_colorful_minor(complete_bipartite(3, 3), cycle_graph(6))
    assert has_colorful_minor(cycle_graph(6), cycle_graph(3))
    assert not has_colorful_minor(path_graph(10), cycle_graph(3))
    assert not has_colorful_minor(cycle_graph(6), complete_graph(4))
    # planar hosts exclude K5 and K3,3
    from chroma import make_grid

    assert not has_colorful_minor(make_grid(3, 3), complete_graph(5))
    assert not has_colorful_minor(make_grid(3, 3), complete_bipartite(3, 3))


def test_empty_pattern_always_fits():
    empty = ColorfulGraph.build(0, 0)
    assert has_colorful_minor(ColorfulGraph.build(0, 0), empty)
    assert has_colorful_minor(path_graph(3), empty)


def test_found_model_verifies():
    model = find_colorful_minor(complete_graph(6), complete_bipartite(3, 3))
    assert model is not None
    assert model_violations(complete_graph(6), complete_bipartite(3, 3), model) == []
    assert verify_model(complete_graph(6), complete_bipartite(3, 3), model)


def test_model_violations_catch_defects():
    host = path_graph(4)
    pat = path_graph(2)
    overlap = MinorModel((frozenset({0, 1}), frozenset({1, 2})))
    assert any("branch sets 0 and 1" in v
               for v in model_violations(host, pat, overlap))
    disconnected = MinorModel((frozenset({0, 2}), frozenset({3,})))
    assert model_violations(host, pat, disconnected)
    no_edge = MinorModel((frozenset({0}), frozenset({2})))
    assert model_violations(host, pat, no_edge)
    good = MinorModel((frozenset({0}), frozenset({1})))
    assert model_violations(host, pat, good) == []


# ------------------------------------------------------------ colors

def test_colors_constrain_containment():
    # pattern wants a vertex carrying color 1; host has none on the cycle
    pat = ColorfulGraph.build(1, 1, [], {0: [1]})
    host_plain = cycle_graph(4).with_q(1)
    assert not has_colorful_minor(host_plain, pat)
    host_colored = ColorfulGraph.build(1, 4, cycle_graph(4).edges, {2: [1]})
    assert has_colorful_minor(host_colored, pat)


def test_branch_set_collects_colors():
    # both colors demanded on one pattern vertex; host spreads them over
    # an edge, so only a contracted branch set can satisfy the palette
    pat = ColorfulGraph.build(2, 1, [], {0: [1, 2]})
    host = ColorfulGraph.build(2, 2, [(0, 1)], {0: [1], 1: [2]})
    model = find_colorful_minor(host, pat)
    assert model is not None and model.branch_sets[0] == frozenset({0, 1})
    apart = ColorfulGraph.build(2, 2, [], {0: [1], 1: [2]})
    assert not has_colorful_minor(apart, pat)


def test_q_mismatch_rejected():
    with pytest.raises(ValueError):
        has_colorful_minor(path_graph(2).with_q(1), path_graph(2).with_q(2))


def test_extra_host_colors_are_harmless():
    pat = ColorfulGraph.build(2, 2, [(0, 1)], {0: [1]})
    host = ColorfulGraph.build(2, 3, [(0, 1), (1, 2)], {0: [1, 2], 1: [2], 2: [1]})
    assert has_colorful_minor(host, pat)


@given(graphs5)
@settings(max_examples=80)
def test_every_single_edit_is_a_minor(g):
    for kind, h in all_single_edits(g):
        assert has_colorful_minor(g, h), (kind, g, h)


@given(graphs5)
def test_self_containment(g):
    assert has_colorful_minor(g, g)


# ------------------------------------------------------------ rooted

def test_rooted_minor_pins_vertices():
    host = ColorfulGraph.build(0, 4, [(0, 1), (2, 3)])
    pat = path_graph(2)
    assert find_rooted_minor(host, pat, (0, 2), (0, 1)) is None
    model = find_rooted_minor(host, pat, (0, 1), (0, 1))
    assert model is not None
    assert 0 in model.branch_sets[0] and 1 in model.branch_sets[1]


def test_rooted_model_verifies_with_roots():
    host = cycle_graph(5)
    pat = cycle_graph(3)
    model = find_rooted_minor(host, pat, (0, 2), (0, 1))
    assert model is not None
    assert model_violations(host, pat, model, (0, 2), (0, 1)) == []
    # the same model checked against a pin it does not satisfy
    free = sorted(set(range(5)) - model.branch_sets[0])[0]
    assert model_violations(host, pat, model, (free,), (0,))


def test_rooted_root_validation():
    with pytest.raises(ValueError):
        find_rooted_minor(path_graph(2), path_graph(2), (0,), (0, 1))
    with pytest.raises(ValueError):
        find_rooted_minor(path_graph(2), path_graph(2), (5,), (0,))


def test_two_roots_same_pattern_vertex():
    # both host roots must sit inside one branch set: needs a connection
    host = path_graph(3)
    pat = ColorfulGraph.build(0, 1)
    assert find_rooted_minor(host, pat, (0, 2), (0, 0)) is not None
    split = ColorfulGraph.build(0, 3, [(0, 1)])
    assert find_rooted_minor(split, pat, (0, 2), (0, 0)) is None


# ------------------------------------------------------------ folios

def test_folio_detail_one_is_coarse():
    f_path = compute_d_folio(path_graph(3), (0,), 1)
    f_cycle = compute_d_folio(cycle_graph(3), (0,), 1)
    assert len(f_path.members) == 3
    assert folios_equal(f_path, f_cycle)  # one edge of detail can't see the cycle


def test_folio_detail_two_separates():
    f_path = compute_d_folio(path_graph(3), (0,), 2)
    f_cycle = compute_d_folio(cycle_graph(3), (0,), 2)
    assert len(f_path.members) == 7
    assert len(f_cycle.members) == 8
    assert not folios_equal(f_path, f_cycle)


def test_folio_is_label_invariant():
    f = compute_d_folio(path_graph(3), (0,), 2)
    g = path_graph(3).relabel({0: 2, 1: 1, 2: 0})
    assert folios_equal(f, compute_d_folio(g, (2,), 2))


def test_folio_root_order_utility():
    g = ColorfulGraph.build(1, 2, [(0, 1)], {0: [1]})
    h = g.relabel({0: 1, 1: 0})
    fa = compute_d_folio(g, (0, 1), 1)
    fb = compute_d_folio(h, (0, 1), 1)
    assert not folios_equal(fa, fb)
    assert folios_equal_up_to_root_order(fa, fb)
    fc = compute_d_folio(path_graph(2), (0, 1), 1)
    assert not folios_equal_up_to_root_order(fa, fc)


def test_folio_caps():
    with pytest.raises(CapExceeded):
        compute_d_folio(path_graph(13), (0,), 1)
    with pytest.raises(CapExceeded):
        compute_d_folio(path_graph(3), (0,), 4)
    with pytest.raises(CapExceeded):
        compute_d_folio(complete_graph(6), (0, 1, 2, 3, 4), 1)


# ------------------------------------------------------------ connectors

def test_sigma_connector_collects_colors():
    h = ColorfulGraph.build(2, 5, [(i, i + 1) for i in range(4)], {2: [1]})
    spine = [(i, i + 1) for i in range(4)]
    assert is_sigma_connector(h, spine, 0, 4, [frozenset({1})])
    assert not is_sigma_connector(h, spine, 0, 4, [frozenset({2})])
    assert is_sigma_connector(h, spine, 0, 4, [])


def test_sigma_connector_needs_leaf_endpoints():
    star = ColorfulGraph.build(0, 4, [(0, 1), (1, 2), (1, 3)])
    assert not is_sigma_connector(star, star.edges, 1, 2, [])


def test_sigma_connector_rejects_non_tree():
    h = path_graph(4)
    with pytest.raises(ValueError):
        is_sigma_connector(h, [(0, 1), (2, 3)], 0, 3, [])


def test_sigma_connector_subtree_off_path():
    # colors sit on a branch hanging off the s-t path, not on it
    h = ColorfulGraph.build(1, 5,
                            [(0, 1), (1, 2), (2, 3), (1, 4)], {4: [1]})
    tree = [(0, 1), (1, 2), (2, 3), (1, 4)]
    assert is_sigma_connector(h, tree, 0, 3, [frozenset({1})])


# ------------------------------------------------------------ wcdp

def test_wcdp_disjoint_trees():
    sol = solve_wcdp(complete_graph(4), [(0, 1), (2, 3)], [[], []])
    assert sol == [((0, 1),), ((2, 3),)]


def test_wcdp_infeasible_on_path():
    # two s-t connectors through the same cut vertex cannot be disjoint
    assert solve_wcdp(path_graph(3), [(0, 2), (0, 2)], [[], []]) is None


def test_wcdp_signature_forces_colors():
    h = ColorfulGraph.build(1, 5, [(i, i + 1) for i in range(4)], {2: [1]})
    sol = solve_wcdp(h, [(0, 4)], [[frozenset({1})]])
    assert sol == [((0, 1), (1, 2), (2, 3), (3, 4))]
    assert solve_wcdp(path_graph(5).with_q(1), [(0, 4)],
                      [[frozenset({1})]]) is None


def test_wcdp_solution_trees_are_sigma_connectors():
    h = ColorfulGraph.build(2, 6,
                            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)],
                            {1: [1], 4: [2]})
    pairs = [(0, 3)]
    sigmas = [[frozenset({1})]]
    sol = solve_wcdp(h, pairs, sigmas)
    assert sol is not None
    assert is_sigma_connector(h, sol[0], 0, 3, sigmas[0])


def test_wcdp_validation_and_caps():
    with pytest.raises(ValueError):
        solve_wcdp(path_graph(3), [(0, 0)], [[]])
    with pytest.raises(ValueError):
        solve_wcdp(path_graph(3), [(0, 2)], [[], []])
    with pytest.raises(CapExceeded):
        solve_wcdp(path_graph(15), [(0, 1)], [[]])
    with pytest.raises(CapExceeded):
        solve_wcdp(path_graph(5), [(0, 1), (1, 2), (2, 3)],
                   [[frozenset({1})] * 2, [], []])
    assert solve_wcdp(path_graph(3), [], []) == []


# ------------------------------------------------------------ caps

def test_engine_caps():
    big = path_graph(25)
    with pytest.raises(CapExceeded):
        has_colorful_minor(big, complete_graph(5))
    # small patterns unlock the larger host bound
    assert has_colorful_minor(big, path_graph(3))
    tight = Caps(host_vertices=4, host_vertices_small_pattern=4)
    with pytest.raises(CapExceeded):
        has_colorful_minor(path_graph(5), path_graph(2), caps=tight)
