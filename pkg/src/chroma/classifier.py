"""Crucial-graph predicates and the Erdős–Pósa gate.

A colorful graph is crucial when all four hold: its colored vertices can
share a face of some planar embedding (checked by adding an apex over the
colored vertices and testing planarity), no small color-crossing pattern
of the segmentation family embeds as a colorful minor, every component
carries at most two colors, and no two components split four distinct
colors two-and-two.  Crucial is exactly the Erdős–Pósa gate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (CapExceeded, Caps, ColorfulGraph, complete_bipartite,
                   complete_graph, popcount)
from .minor import MinorModel, find_colorful_minor, has_colorful_minor
from .obstructions import o2_members
from .planar import is_planar

_FACIAL_CAP = 40


def _aplus(h: ColorfulGraph) -> ColorfulGraph:
    """h with a fresh apex adjacent to every colored vertex."""
    apex = h.n
    extra = [(v, apex) for v in range(h.n) if h.palettes[v]]
    return ColorfulGraph(h.q, h.palettes + (0,), h.edges + tuple(sorted(extra)))


def is_color_facial(h: ColorfulGraph, caps: Caps = Caps()) -> bool:
    """Can all colored vertices lie on one face?  Equivalent to planarity
    of the apexed graph; decided by a direct embedding algorithm (the
    engine-based K5/K33 exclusion agrees within its caps)."""
    if h.n > _FACIAL_CAP:
        raise CapExceeded(f"{h.n} vertices exceeds facial cap {_FACIAL_CAP}")
    return is_planar(_aplus(h))


def is_color_facial_by_exclusion(h: ColorfulGraph,
                                 caps: Optional[Caps] = None) -> bool:
    """Slow cross-check mode: no K5 and no K33 minor in the apexed graph."""
    caps = caps or Caps(host_vertices=14)
    hp = _aplus(h)
    return (not has_colorful_minor(hp, complete_graph(5, h.q), caps=caps)
            and not has_colorful_minor(hp, complete_bipartite(3, 3, h.q),
                                       caps=caps))


def is_color_segmented(h: ColorfulGraph, mode: str = "exclusion",
                       caps: Caps = Caps()) -> bool:
    if h.q <= 1:
        return True
    if mode == "exclusion":
        return _segmented_witness(h, caps) is None
    if mode == "direct":
        return (_condition_a(h) and _condition_b(h) and _condition_c(h))
    raise ValueError(f"unknown mode {mode!r}")


def _segmented_witness(h, caps) -> Optional[tuple[ColorfulGraph, MinorModel]]:
    for pat in o2_members(h.q, tilde=False):
        model = find_colorful_minor(h, pat, caps=caps)
        if model is not None:
            return pat, model
    return None


def _cycles(h: ColorfulGraph):
    """All simple cycles (as vertex tuples, each once up to rotation and
    reflection).  Exponential; callers keep h small."""
    n = h.n
    out = []
    for start in range(n):
        stack = [(start, [start], {start})]
        while stack:
            v, path, used = stack.pop()
            for w in sorted(h.neighbors(v)):
                if w == start and len(path) >= 3:
                    if path[1] < path[-1]:  # reflection dedup
                        out.append(tuple(path))
                elif w not in used and w > start:  # rotation dedup
                    stack.append((w, path + [w], used | {w}))
    return out


def _condition_a(h: ColorfulGraph) -> bool:
    """No cycle with four distinct vertices in cyclic order whose colors
    alternate between two disjoint color sets."""
    import itertools
    for cyc in _cycles(h):
        idx = [i for i, v in enumerate(cyc) if h.palettes[v]]
        for quad in itertools.combinations(idx, 4):
            vs = [cyc[i] for i in quad]
            for c1 in h.colors_of(vs[0]):
                for c2 in h.colors_of(vs[1]):
                    for c3 in h.colors_of(vs[2]):
                        for c4 in h.colors_of(vs[3]):
                            if not ({c1, c3} & {c2, c4}):
                                return False
    return True


def _condition_b(h: ColorfulGraph) -> bool:
    """Every cycle passes through at most two multi-colored vertices."""
    multi = {v for v in range(h.n) if popcount(h.palettes[v]) > 1}
    for cyc in _cycles(h):
        if sum(1 for v in cyc if v in multi) > 2:
            return False
    return True


def _condition_c(h: ColorfulGraph) -> bool:
    """For each vertex v, at most two components of h - v that touch v
    carry more than one color."""
    for v in range(h.n):
        if not h.neighbors(v):
            continue
        rest = h.delete_vertex(v)
        old = [u for u in range(h.n) if u != v]
        heavy = 0
        for comp in rest.components():
            if not any(old[u] in h.neighbors(v) for u in comp):
                continue
            mask = 0
            for u in comp:
                mask |= rest.palettes[u]
            if popcount(mask) > 1:
                heavy += 1
        if heavy > 2:
            return False
    return True


def is_component_wise_bicolored(h: ColorfulGraph) -> bool:
    for comp in h.components():
        mask = 0
        for v in comp:
            mask |= h.palettes[v]
        if popcount(mask) > 2:
            return False
    return True


def is_single_component_bicolored(h: ColorfulGraph) -> bool:
    """No two distinct components each carrying two colors of a set of
    four distinct colors (two in one, the other two in the other)."""
    masks = []
    for comp in h.components():
        mask = 0
        for v in comp:
            mask |= h.palettes[v]
        masks.append(mask)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if popcount(a & ~b) >= 2 and popcount(b & ~a) >= 2:
                return False
    return True


@dataclass(frozen=True)
class CrucialReport:
    color_facial: bool
    color_segmented: bool
    component_wise_bicolored: bool
    single_component_bicolored: bool
    crucial: bool
    witness: Optional[tuple[str, object]] = None

    def as_dict(self) -> dict:
        return {
            "color_facial": self.color_facial,
            "color_segmented": self.color_segmented,
            "component_wise_bicolored": self.component_wise_bicolored,
            "single_component_bicolored": self.single_component_bicolored,
            "crucial": self.crucial,
            "witness": None if self.witness is None else self.witness[0],
        }


def is_crucial(h: ColorfulGraph, caps: Caps = Caps()) -> CrucialReport:
    facial = is_color_facial(h)
    seg_w = _segmented_witness(h, caps) if h.q >= 2 else None
    segmented = seg_w is None
    cwb = is_component_wise_bicolored(h)
    scb = is_single_component_bicolored(h)
    witness: Optional[tuple[str, object]] = None
    if not facial:
        sub = None
        hp = _aplus(h)
        if hp.n <= Caps().host_vertices:
            sub = (find_colorful_minor(hp, complete_graph(5, h.q), caps=caps)
                   or find_colorful_minor(hp, complete_bipartite(3, 3, h.q),
                                          caps=caps))
        witness = ("color_facial", sub)
    elif not segmented:
        witness = ("color_segmented", seg_w)
    elif not cwb:
        for comp in h.components():
            mask = 0
            for v in comp:
                mask |= h.palettes[v]
            if popcount(mask) > 2:
                witness = ("component_wise_bicolored", comp)
                break
    elif not scb:
        comps = h.components()
        masks = []
        for comp in comps:
            mask = 0
            for v in comp:
                mask |= h.palettes[v]
            masks.append(mask)
        done = False
        for i in range(len(comps)):
            for j in range(i + 1, len(comps)):
                a, b = masks[i], masks[j]
                if popcount(a & ~b) >= 2 and popcount(b & ~a) >= 2:
                    witness = ("single_component_bicolored",
                               (comps[i], comps[j]))
                    done = True
                    break
            if done:
                break
    return CrucialReport(facial, segmented, cwb, scb,
                         facial and segmented and cwb and scb, witness)


def has_erdos_posa(h: ColorfulGraph, caps: Caps = Caps()) -> bool:
    return is_crucial(h, caps).crucial


def rainbow_ep_classification(q: int, g: ColorfulGraph,
                              caps: Caps = Caps()) -> bool:
    """The rainbow special case: true iff q <= 2 and the underlying graph
    has no K_{3,3-q} and no K_{5-q} minor.  Empty graphs qualify at any q;
    q >= 3 admits nothing else."""
    if g.n == 0:
        return True
    if q > 2:
        return False
    u = g.uncolored()
    if has_colorful_minor(u, complete_bipartite(3, 3 - q), caps=caps):
        return False
    if has_colorful_minor(u, complete_graph(5 - q), caps=caps):
        return False
    return True
