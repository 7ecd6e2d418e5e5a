"""Graph container basics: construction, edits, recolorings, enumeration."""

import itertools

import pytest
from hypothesis import given, strategies as st

from chroma import ColorfulGraph, CapExceeded, Caps, DEFAULT_CAPS
from chroma.core import (
    all_single_edits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    enumerate_colorful_graphs,
    mask_colors,
    palette_mask,
    path_graph,
)


def colored_path(n, colors):
    """Path on n vertices; colors maps vertex -> iterable of colors."""
    q = max((c for cs in colors.values() for c in cs), default=0)
    return ColorfulGraph.build(q, n, [(i, i + 1) for i in range(n - 1)], colors)


# ---------------------------------------------------------------- strategies

small_graphs = st.builds(
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
    st.integers(0, 3),
    st.integers(0, 1 << 10),
    st.lists(st.integers(0, 7), min_size=5, max_size=5),
)


# ---------------------------------------------------------------- palettes

def test_palette_mask_round_trip():
    assert palette_mask([1, 3], 3) == 0b101
    assert mask_colors(0b101) == (1, 3)
    assert palette_mask([], 5) == 0
    assert mask_colors(0) == ()


def test_palette_mask_rejects_out_of_range():
    with pytest.raises(ValueError):
        palette_mask([0], 2)
    with pytest.raises(ValueError):
        palette_mask([3], 2)


def test_build_and_accessors():
    g = ColorfulGraph.build(2, 3, [(2, 1), (0, 1)], {0: [1], 2: [1, 2]})
    assert g.n == 3
    assert g.m == 2
    assert g.edges == ((0, 1), (1, 2))  # normalized and sorted
    assert g.colors_of(0) == (1,)
    assert g.colors_of(1) == ()
    assert g.colors_of(2) == (1, 2)
    assert g.degree(1) == 2
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)


def test_build_rejects_bad_input():
    with pytest.raises(ValueError):
        ColorfulGraph.build(0, 2, [(0, 0)])  # loop
    with pytest.raises(ValueError):
        ColorfulGraph.build(0, 2, [(0, 5)])  # endpoint out of range
    with pytest.raises(ValueError):
        ColorfulGraph.build(1, 2, colors={3: [1]})  # colored vertex missing
    with pytest.raises(ValueError):
        ColorfulGraph.build(1, 2, colors={0: [2]})  # color beyond q


def test_duplicate_edges_collapse():
    g = ColorfulGraph.build(0, 2, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


# ---------------------------------------------------------------- predicates

def test_is_restricted():
    # restricted = some color of the shared palette space never appears
    g = colored_path(2, {0: [1]})
    assert g.with_q(2).is_restricted()
    assert not g.is_restricted()  # q=1, color 1 present
    assert not ColorfulGraph.build(0, 3).is_restricted()  # q=0 has no colors to miss


def test_is_rainbow():
    from chroma.families import rainbow

    g = rainbow(2, path_graph(3))
    assert g.is_rainbow()
    assert not g.remove_color(1, 2).is_rainbow()


def test_components_and_connectivity():
    g = ColorfulGraph.build(0, 5, [(0, 1), (3, 4)])
    assert g.components() == [(0, 1), (2,), (3, 4)]
    assert not g.is_connected()
    assert path_graph(4).is_connected()
    assert ColorfulGraph.build(0, 0).is_connected()
    assert ColorfulGraph.build(0, 1).is_connected()


# ---------------------------------------------------------------- edits

def test_delete_vertex_renumbers():
    g = colored_path(4, {0: [1], 3: [1]})
    h = g.delete_vertex(1)
    assert h.n == 3
    assert h.edges == ((1, 2),)
    assert h.colors_of(0) == (1,) and h.colors_of(2) == (1,)


def test_delete_edge():
    g = cycle_graph(4)
    h = g.delete_edge(0, 3)
    assert h.m == 3
    assert h.is_connected()
    with pytest.raises(ValueError):
        h.delete_edge(0, 3)


def test_remove_color():
    g = colored_path(2, {0: [1, 2], 1: [2]})
    h = g.remove_color(0, 2)
    assert h.colors_of(0) == (1,)
    assert h.colors_of(1) == (2,)
    with pytest.raises(ValueError):
        h.remove_color(1, 1)  # not present


def test_contract_merges_palettes():
    g = ColorfulGraph.build(3, 3, [(0, 1), (1, 2)], {0: [1], 1: [2], 2: [3]})
    h = g.contract(0, 1)
    assert h.n == 2
    assert h.colors_of(0) == (1, 2)
    assert h.colors_of(1) == (3,)
    assert h.edges == ((0, 1),)


def test_contract_drops_parallel_edges():
    g = cycle_graph(3)
    h = g.contract(0, 1)
    assert h.n == 2 and h.m == 1


def test_contract_requires_edge():
    with pytest.raises(ValueError):
        path_graph(3).contract(0, 2)


# ---------------------------------------------------------------- recolorings

def test_fusion():
    g = ColorfulGraph.build(3, 3, [(0, 1)], {0: [2, 3], 2: [1]})
    f = g.fusion()
    assert f.q == 1
    assert [f.palettes[v] for v in range(3)] == [1, 0, 1]
    assert f.edges == g.edges


def test_uncolored_and_with_q():
    g = colored_path(3, {1: [1]})
    u = g.uncolored()
    assert u.q == 0 and all(p == 0 for p in u.palettes)
    assert g.with_q(4).q == 4
    assert g.with_q(4).palettes == g.palettes


def test_relabel_is_bijective_requirement():
    g = path_graph(3)
    h = g.relabel({0: 2, 1: 1, 2: 0})
    assert h.edges == ((0, 1), (1, 2))
    with pytest.raises(ValueError):
        g.relabel({0: 0, 1: 0, 2: 2})


def test_disjoint_union():
    a = colored_path(2, {0: [1]})
    b = cycle_graph(3).with_q(1)
    u = a.disjoint_union(b)
    assert u.n == 5 and u.m == 4
    assert u.colors_of(0) == (1,)
    assert u.has_edge(2, 3) and u.has_edge(2, 4)


def test_subgraph_induced():
    g = complete_graph(4)
    h = g.subgraph([0, 2, 3])
    assert h.n == 3 and h.m == 3


# ---------------------------------------------------------------- edit streams

def test_all_single_edits_counts():
    g = ColorfulGraph.build(2, 3, [(0, 1), (1, 2)], {0: [1], 1: [1, 2]})
    kinds = [k for k, _ in all_single_edits(g)]
    assert kinds.count("delete_vertex") == 3
    assert kinds.count("delete_edge") == 2
    assert kinds.count("remove_color") == 3
    assert kinds.count("contract") == 2


@given(small_graphs)
def test_all_single_edits_shrink(g):
    """Every edit strictly decreases n + m + total colors."""
    weight = g.n + g.m + sum(bin(p).count("1") for p in g.palettes)
    for kind, h in all_single_edits(g):
        w = h.n + h.m + sum(bin(p).count("1") for p in h.palettes)
        assert w < weight, (kind, g, h)


@given(small_graphs)
def test_contract_commutes_with_fusion(g):
    for u, v in g.edges:
        assert g.contract(u, v).fusion() == g.fusion().contract(u, v)


@given(small_graphs, st.randoms(use_true_random=False))
def test_relabel_preserves_shape(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    h = g.relabel({i: order[i] for i in range(g.n)})
    assert h.n == g.n and h.m == g.m
    assert sorted(h.palettes) == sorted(g.palettes)


# ---------------------------------------------------------------- enumeration

def test_enumeration_is_exhaustive_labeled():
    # per n the count is 2^C(n,2) edge choices times (2^q)^n palettes
    for q in (0, 1, 2):
        want = sum(
            2 ** (n * (n - 1) // 2) * (2 ** q) ** n for n in range(4)
        )
        got = sum(1 for _ in enumerate_colorful_graphs(3, q))
        assert got == want


def test_enumeration_connected_filter_agrees():
    full = [g for g in enumerate_colorful_graphs(3, 1) if g.is_connected()]
    conn = list(enumerate_colorful_graphs(3, 1, connected_only=True))
    assert full == conn


# ---------------------------------------------------------------- named graphs

def test_named_graphs():
    assert complete_graph(5).m == 10
    assert complete_bipartite(3, 3).m == 9
    assert path_graph(1).m == 0
    assert cycle_graph(3).m == 3
    with pytest.raises(ValueError):
        cycle_graph(2)


# ---------------------------------------------------------------- caps

def test_caps_check_host():
    caps = Caps(host_vertices=4, host_vertices_small_pattern=8, small_pattern=2)
    caps.check_host(4, 3)
    caps.check_host(8, 2)  # small pattern unlocks the larger bound
    with pytest.raises(CapExceeded):
        caps.check_host(5, 3)
    with pytest.raises(CapExceeded):
        caps.check_host(9, 2)


def test_default_caps_are_sane():
    assert DEFAULT_CAPS.host_vertices <= DEFAULT_CAPS.host_vertices_small_pattern
    assert DEFAULT_CAPS.small_pattern >= 1
