"""The finite obstruction catalog for crucial q-colorful graphs.

Five schema families, each a small graph with a color-placement rule:

* O0   — K5 and K33, uncolored.
* O1t  — K5 minus an edge (its two degree-3 vertices colored), K4 (every
         vertex one color), K33 minus an edge (its two degree-2 vertices
         colored), K23 (its three degree-2 vertices colored); keeping only
         members with at most two colors total, and discarding the K4
         whose vertices split into two monochromatic pairs on distinct
         colors.
* O2t  — a 4-cycle whose opposite vertices' colors avoid the other
         pair's, a triangle of two-color palettes, and a 3-star with
         two-color leaves; keeping only members with at most two colors.
* O3   — a single vertex carrying three colors.
* O4   — two isolated vertices carrying disjoint color pairs.

Generation loops over color choices per schema and deduplicates by
canonical form, so the closed-form count is a genuine cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .canon import canonical_key
from .core import (CapExceeded, ColorfulGraph, complete_bipartite,
                   complete_graph, cycle_graph, popcount)

TAGS = ("O0", "O1t", "O2t", "O3", "O4")


@dataclass(frozen=True)
class ObstructionCatalog:
    q: int
    members: tuple[tuple[ColorfulGraph, str, tuple], ...]

    def graphs(self) -> list[ColorfulGraph]:
        return [g for g, _, _ in self.members]

    def counts_by_tag(self) -> dict[str, int]:
        out = {t: 0 for t in TAGS}
        for _, tag, _ in self.members:
            out[tag] += 1
        return out

    def __len__(self) -> int:
        return len(self.members)


def obstruction_count(q: int) -> int:
    """(3q^4 - 14q^3 + 129q^2 - 22q + 48) / 24."""
    if q < 0:
        raise ValueError("q must be nonnegative")
    num = 3 * q ** 4 - 14 * q ** 3 + 129 * q ** 2 - 22 * q + 48
    assert num % 24 == 0
    return num // 24


def generate_obstructions(q: int) -> ObstructionCatalog:
    if q > 8:
        raise CapExceeded(f"q={q} exceeds the catalog cap of 8")
    if q < 0:
        raise ValueError("q must be nonnegative")
    members: list[tuple[ColorfulGraph, str, tuple]] = []
    for tag, graphs in (
        ("O0", o0_members(q)),
        ("O1t", o1_members(q, tilde=True)),
        ("O2t", o2_members(q, tilde=True)),
        ("O3", o3_members(q)),
        ("O4", o4_members(q)),
    ):
        for g in graphs:
            members.append((g, tag, canonical_key(g)))
    return ObstructionCatalog(q, tuple(members))


def _dedup(graphs) -> list[ColorfulGraph]:
    seen: dict[tuple, ColorfulGraph] = {}
    for g in graphs:
        key = canonical_key(g)
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


# ------------------------------------------------------------- schemas

def o0_members(q: int) -> list[ColorfulGraph]:
    return [complete_graph(5, q), complete_bipartite(3, 3, q)]


def _colored(base: ColorfulGraph, placement: dict[int, int]) -> ColorfulGraph:
    pal = list(base.palettes)
    for v, c in placement.items():
        pal[v] = 1 << (c - 1)
    return ColorfulGraph(base.q, tuple(pal), base.edges)


def o1_members(q: int, tilde: bool) -> list[ColorfulGraph]:
    """The planarity-flavored family: one color per designated vertex."""
    k5m = complete_graph(5, q).delete_edge(3, 4)        # 3, 4 get degree 3
    k4 = complete_graph(4, q)
    k33m = complete_bipartite(3, 3, q).delete_edge(2, 5)  # 2, 5 get degree 2
    k23 = complete_bipartite(2, 3, q)                   # 2, 3, 4 get degree 2

    out: list[ColorfulGraph] = []
    colors = range(1, q + 1)
    for a, b in itertools.product(colors, repeat=2):
        out.append(_colored(k5m, {3: a, 4: b}))
        out.append(_colored(k33m, {2: a, 5: b}))
    for cs in itertools.product(colors, repeat=4):
        g = _colored(k4, dict(enumerate(cs)))
        if tilde and sorted(cs) == [min(cs), min(cs), max(cs), max(cs)] \
                and len(set(cs)) == 2:
            continue  # two monochromatic pairs on distinct colors
        if tilde and len(set(cs)) >= 3:
            continue
        out.append(g)
    for cs in itertools.product(colors, repeat=3):
        if tilde and len(set(cs)) >= 3:
            continue
        out.append(_colored(k23, {2 + i: c for i, c in enumerate(cs)}))
    return _dedup(out)


def o2_members(q: int, tilde: bool) -> list[ColorfulGraph]:
    """The segmentation family.  Empty when q <= 1."""
    out: list[ColorfulGraph] = []
    colors = range(1, q + 1)
    c4 = cycle_graph(4, q) if q >= 1 else None
    for cs in itertools.product(colors, repeat=4):
        if {cs[0], cs[2]} & {cs[1], cs[3]}:
            continue
        if tilde and len(set(cs)) >= 3:
            continue
        out.append(_colored(c4, dict(enumerate(cs))))
    pairs = [frozenset(p) for p in itertools.combinations(colors, 2)]
    k3 = complete_graph(3, q)
    star = ColorfulGraph.build(q, 4, [(0, 1), (0, 2), (0, 3)])
    for ps in itertools.product(pairs, repeat=3):
        if tilde and len(frozenset.union(*ps)) >= 3:
            continue
        masks = [sum(1 << (c - 1) for c in p) for p in ps]
        out.append(ColorfulGraph(q, tuple(masks), k3.edges))
        out.append(ColorfulGraph(q, (0, *masks), star.edges))
    return _dedup(out)


def o3_members(q: int) -> list[ColorfulGraph]:
    out = []
    for triple in itertools.combinations(range(1, q + 1), 3):
        mask = sum(1 << (c - 1) for c in triple)
        out.append(ColorfulGraph(q, (mask,), ()))
    return out


def o4_members(q: int) -> list[ColorfulGraph]:
    out = []
    for quad in itertools.combinations(range(1, q + 1), 4):
        rest = quad[1:]
        for partner in rest:
            m1 = (1 << (quad[0] - 1)) | (1 << (partner - 1))
            m2 = sum(1 << (c - 1) for c in rest if c != partner)
            out.append(ColorfulGraph(q, (m1, m2), ()))
    return out


# ------------------------------------------------------------ antichain

def verify_antichain(members: list[ColorfulGraph]):
    """True, or the first (i, j) with member i a proper-or-equal colorful
    minor of member j (i != j), scanning pairs in index order."""
    from .minor import has_colorful_minor

    for i, gi in enumerate(members):
        for j, gj in enumerate(members):
            if i == j:
                continue
            if has_colorful_minor(gj, gi):
                return (i, j)
    return True
