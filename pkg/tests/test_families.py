"""Generators: grids, walls, colorings, segregated grids, crossing paths."""

import pytest

from chroma import (
    ColorfulGraph,
    crossing_paths,
    crossing_pattern,
    disk_multiplication,
    has_colorful_minor,
    is_planar,
    make_grid,
    make_wall,
    rainbow,
    segregated_grid,
    universal_family,
)
from chroma.core import cycle_graph, path_graph
from chroma.families import SegregatedSpec, grid_vertex, two_block


# ------------------------------------------------------------ grids and walls

def test_grid_shape():
    g = make_grid(3, 4)
    assert g.n == 12
    assert g.m == 3 * 3 + 2 * 4  # horizontal + vertical
    degs = sorted(g.degree(v) for v in range(g.n))
    assert degs[0] == 2 and degs[-1] == 4


def test_grid_vertex_indexing():
    # 1-based row/column coordinates
    assert grid_vertex(3, 4, 1, 1) == 0
    assert grid_vertex(3, 4, 3, 4) == 11
    g = make_grid(3, 4)
    assert g.has_edge(grid_vertex(3, 4, 1, 1), grid_vertex(3, 4, 1, 2))
    assert g.has_edge(grid_vertex(3, 4, 1, 1), grid_vertex(3, 4, 2, 1))
    assert not g.has_edge(grid_vertex(3, 4, 1, 1), grid_vertex(3, 4, 2, 2))


def test_grid_degenerate_sizes():
    assert make_grid(1, 1).n == 1
    assert make_grid(1, 5).m == 4  # a path


def test_wall_is_planar_subcubic():
    for n, m in [(2, 2), (3, 4), (4, 3)]:
        w = make_wall(n, m)
        assert is_planar(w)
        assert max(w.degree(v) for v in range(w.n)) <= 3
        assert w.is_connected()


def test_wall_contains_smaller_grid():
    assert has_colorful_minor(make_wall(3, 3), make_grid(2, 2))


def test_grid_monotone_in_size():
    assert has_colorful_minor(make_grid(3, 3), make_grid(2, 3))
    assert not has_colorful_minor(make_grid(2, 4), make_grid(3, 3))


# ------------------------------------------------------------ colorings

def test_rainbow_gives_every_vertex_every_color():
    g = rainbow(3, cycle_graph(4))
    assert g.q == 3
    assert all(g.colors_of(v) == (1, 2, 3) for v in range(4))
    assert rainbow(0, path_graph(2)) == path_graph(2)


def test_two_block_column_coloring():
    g = two_block(2, 3, 2, q=3)
    side = 4
    assert g.q == 3 and g.n == side * side
    first_col = [g.colors_of(grid_vertex(side, side, i, 1)) for i in range(1, side + 1)]
    assert first_col == [(2,), (2,), (3,), (3,)]
    # everything off the first column is uncolored
    assert all(
        g.colors_of(grid_vertex(side, side, i, j)) == ()
        for i in range(1, side + 1) for j in range(2, side + 1)
    )


# ------------------------------------------------------------ segregated

def test_segregated_grid_blocks():
    g = segregated_grid(2, 2)
    assert g.n == 16
    col = [g.colors_of(grid_vertex(4, 4, i, 1)) for i in range(1, 5)]
    assert col == [(1,), (1,), (2,), (2,)]


def test_segregated_grid_permutation():
    g = segregated_grid(2, 2, pi=(2, 1))
    col = [g.colors_of(grid_vertex(4, 4, i, 1)) for i in range(1, 5)]
    assert col == [(2,), (2,), (1,), (1,)]


def test_segregated_spec_validation():
    with pytest.raises(ValueError):
        SegregatedSpec(2, 1, (1, 1))
    with pytest.raises(ValueError):
        SegregatedSpec(0, 1, ())
    with pytest.raises(ValueError):
        segregated_grid(2)  # k missing


def test_segregated_contains_smaller_k():
    big = segregated_grid(1, 3)
    small = segregated_grid(1, 2)
    assert has_colorful_minor(big, small)


# ------------------------------------------------------------ universal family

def test_universal_family_shapes():
    # one grid at q = 0, one segregated grid at q = 1, one two-color
    # member at q = 2 (the two block orders coincide), q members beyond
    assert [(g.n, g.q) for g in universal_family(0, 2)] == [(4, 0)]
    assert len(universal_family(1, 2)) == 1
    assert len(universal_family(2, 2)) == 1
    assert len(universal_family(3, 2)) == 3
    for g in universal_family(3, 2):
        assert g.q == 3 and g.color_union() == 0b111
    assert universal_family(2, 0)[0].n == 0


def test_universal_family_swallows_restricted_graphs():
    (member,) = universal_family(2, 2)
    # a small graph missing color 2 entirely must embed
    g = ColorfulGraph.build(2, 2, [(0, 1)], {0: [1], 1: [1]})
    assert has_colorful_minor(member, g)


# ------------------------------------------------------------ crossing paths

def test_crossing_paths_structure():
    k = 3
    g = crossing_paths(k)
    assert g.q == 4
    # endpoint colors: k paths of each kind
    ends = [g.colors_of(v) for v in range(g.n) if g.colors_of(v)]
    assert sorted(ends).count((1,)) == k
    assert sorted(ends).count((2,)) == k
    assert sorted(ends).count((3,)) == k
    assert sorted(ends).count((4,)) == k
    # crossings are uncolored degree-4 vertices, one per i != j pair
    deg4 = [v for v in range(g.n) if g.degree(v) == 4]
    assert len(deg4) == k * (k - 1)
    assert all(g.colors_of(v) == () for v in deg4)
    assert is_planar(g)


def test_crossing_pattern_is_a_path_pair():
    # two branch sets, no edge: one whole path of each kind
    p = crossing_pattern()
    assert p.q == 4
    assert p.n == 2 and p.m == 0
    assert p.colors_of(0) == (1, 3) and p.colors_of(1) == (2, 4)


def test_crossing_paths_contains_a_disjoint_pair():
    assert has_colorful_minor(crossing_paths(2), crossing_pattern())
    assert has_colorful_minor(crossing_paths(1), crossing_pattern())


# ------------------------------------------------------------ disk multiplication

def path_disk_certificate():
    # a colored path drawn on a line: one face, every vertex on it
    return {
        "rotation": {0: [1], 1: [0, 2], 2: [1]},
        "outer_face": [0, 1, 2],
    }


def test_disk_multiplication_multiplies():
    g = ColorfulGraph.build(1, 3, [(0, 1), (1, 2)], {0: [1]})
    out = disk_multiplication(g, 3, path_disk_certificate())
    assert out.n == g.n * 3 and out.m == g.m * 3
    assert len(out.components()) == 3


def test_disk_multiplication_validates_certificate():
    g = ColorfulGraph.build(1, 3, [(0, 1), (1, 2)], {2: [1]})
    with pytest.raises(ValueError, match="certificate invalid"):
        disk_multiplication(g, 2, {"rotation": {0: [1], 1: [0, 2], 2: [1]},
                                   "outer_face": [0, 1]})  # colored 2 missing
    with pytest.raises(ValueError, match="certificate invalid"):
        disk_multiplication(g, 2, {"outer_face": [0, 1, 2]})
    with pytest.raises(ValueError, match="certificate invalid"):
        disk_multiplication(g, 2, {"rotation": {0: [1], 1: [2, 2], 2: [1]},
                                   "outer_face": [0, 1, 2]})
