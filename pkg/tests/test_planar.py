"""Planarity via forbidden minors, cross-checked against networkx."""

import random

import networkx as nx

from chroma import ColorfulGraph, is_planar, make_grid, make_wall
from chroma.core import complete_bipartite, complete_graph, cycle_graph, path_graph


def nx_planar(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h)
    return ok


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return ColorfulGraph.build(0, 10, outer + spokes + inner)


# ------------------------------------------------------------ fixed cases

def test_small_graphs_are_planar():
    for g in (path_graph(6), cycle_graph(7), complete_graph(4),
              complete_bipartite(2, 5), make_grid(4, 5), make_wall(3, 4)):
        assert is_planar(g)


def test_forbidden_minors_detected():
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(petersen())
    assert not is_planar(complete_graph(6))


def test_subdivision_of_k5_is_nonplanar():
    # split every K5 edge with a fresh vertex
    k5 = complete_graph(5)
    edges = []
    nxt = 5
    for u, v in k5.edges:
        edges += [(u, nxt), (min(nxt, v), max(nxt, v))]
        nxt += 1
    assert not is_planar(ColorfulGraph.build(0, nxt, edges))


def test_k5_minus_an_edge_is_planar():
    g = complete_graph(5).delete_edge(0, 1)
    assert is_planar(g)


def test_disconnected_pieces_judged_independently():
    a = complete_graph(5)
    b = cycle_graph(4)
    assert not is_planar(a.disjoint_union(b))
    assert is_planar(b.disjoint_union(b))


def test_raw_edge_list_accepted():
    assert is_planar((4, ((0, 1), (1, 2), (2, 3))))
    assert not is_planar((6, tuple(
        (i, j) for i in range(6) for j in range(i + 1, 6))))


def test_colors_are_ignored():
    g = ColorfulGraph.build(2, 5, [(i, j) for i in range(5) for j in range(i + 1, 5)],
                            {0: [1], 1: [2]})
    assert not is_planar(g)


# ------------------------------------------------------------ random sweep

def test_random_graphs_agree_with_networkx():
    rng = random.Random(4242)
    for trial in range(300):
        n = rng.randint(1, 9)
        p = rng.choice([0.2, 0.35, 0.5, 0.7])
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < p]
        g = ColorfulGraph.build(0, n, edges)
        assert is_planar(g) == nx_planar(g), (n, edges)


def test_dense_random_graphs_agree_with_networkx():
    rng = random.Random(77)
    for trial in range(60):
        n = rng.randint(5, 8)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.85]
        g = ColorfulGraph.build(0, n, edges)
        assert is_planar(g) == nx_planar(g)
