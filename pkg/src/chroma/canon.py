"""Canonical forms and isomorphism for colorful graphs.

Individualization-refinement over an initial partition by
(palette, degree, root slots).  Graphs at desk scale (<= 16 vertices)
only; the refinement is the plain counting kind, with one shortcut:
once the partition is equitable *and* every class-to-class relation is
homogeneous (complete or empty, likewise inside classes), any
class-respecting vertex order yields the same encoding, so no further
branching is needed.  That shortcut is what keeps K_n and friends from
exploding into factorial branching.

Root slots: an optional tuple of vertex ids.  Slot order matters
(slot i of one graph must map to slot i of the other), and the same
vertex may occupy several slots.
"""

from __future__ import annotations

from .core import CapExceeded, ColorfulGraph, DEFAULT_CAPS

Key = tuple


def _initial_partition(g: ColorfulGraph, roots: tuple[int, ...]) -> list[list[int]]:
    slot_sig: dict[int, tuple[int, ...]] = {}
    for i, r in enumerate(roots):
        slot_sig.setdefault(r, ())
        slot_sig[r] = slot_sig[r] + (i,)
    buckets: dict[tuple, list[int]] = {}
    for v in range(g.n):
        inv = (slot_sig.get(v, ()), g.palettes[v], g.degree(v))
        buckets.setdefault(inv, []).append(v)
    return [sorted(buckets[k]) for k in sorted(buckets.keys())]


def _refine(g: ColorfulGraph, classes: list[list[int]]) -> list[list[int]]:
    while True:
        index_of = {}
        for ci, cl in enumerate(classes):
            for v in cl:
                index_of[v] = ci
        new_classes: list[list[int]] = []
        changed = False
        for cl in classes:
            sigs: dict[tuple[int, ...], list[int]] = {}
            for v in cl:
                counts = [0] * len(classes)
                for u in g.neighbors(v):
                    counts[index_of[u]] += 1
                sigs.setdefault(tuple(counts), []).append(v)
            if len(sigs) == 1:
                new_classes.append(cl)
            else:
                changed = True
                for sig in sorted(sigs.keys()):
                    new_classes.append(sorted(sigs[sig]))
        classes = new_classes
        if not changed:
            return classes


def _homogeneous(g: ColorfulGraph, classes: list[list[int]]) -> bool:
    for i, a in enumerate(classes):
        inner = sum(1 for x in a for y in a if x < y and g.has_edge(x, y))
        full = len(a) * (len(a) - 1) // 2
        if inner not in (0, full):
            return False
        for b in classes[i + 1:]:
            cross = sum(1 for x in a for y in b if g.has_edge(x, y))
            if cross not in (0, len(a) * len(b)):
                return False
    return True


def _encode(g: ColorfulGraph, roots: tuple[int, ...], order: list[int]) -> Key:
    pos = {v: i for i, v in enumerate(order)}
    palettes = tuple(g.palettes[v] for v in order)
    edges = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))
    return (g.q, g.n, palettes, edges, tuple(pos[r] for r in roots))


def _search(g: ColorfulGraph, roots: tuple[int, ...], classes: list[list[int]]) -> Key:
    classes = _refine(g, classes)
    nontrivial = next((ci for ci, cl in enumerate(classes) if len(cl) > 1), None)
    if nontrivial is None or _homogeneous(g, classes):
        order = [v for cl in classes for v in cl]
        return _encode(g, roots, order)
    best: Key | None = None
    target = classes[nontrivial]
    for v in target:
        branch = (classes[:nontrivial]
                  + [[v], [u for u in target if u != v]]
                  + classes[nontrivial + 1:])
        key = _search(g, roots, branch)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def canonical_key(g: ColorfulGraph, roots: tuple[int, ...] = ()) -> Key:
    """A hashable value equal for exactly the (root-respecting) isomorphic graphs."""
    if g.n > DEFAULT_CAPS.canon_vertices:
        raise CapExceeded(
            f"canonical form supports up to {DEFAULT_CAPS.canon_vertices} "
            f"vertices, got {g.n}")
    for r in roots:
        if not 0 <= r < g.n:
            raise ValueError(f"root {r} out of range")
    if g.n == 0:
        return (g.q, 0, (), (), ())
    return _search(g, roots, _initial_partition(g, roots))


def canonicalize(g: ColorfulGraph, roots: tuple[int, ...] = ()) -> tuple[ColorfulGraph, tuple[int, ...]]:
    """Relabeled copy of ``g`` whose identity equals its canonical key."""
    key = canonical_key(g, roots)
    q, n, palettes, edges, root_pos = key
    out = ColorfulGraph(q, palettes, edges)
    return out, root_pos


def isomorphic(a: ColorfulGraph, b: ColorfulGraph,
               roots_a: tuple[int, ...] = (), roots_b: tuple[int, ...] = ()) -> bool:
    if a.q != b.q or a.n != b.n or a.m != b.m or len(roots_a) != len(roots_b):
        return False
    return canonical_key(a, roots_a) == canonical_key(b, roots_b)
