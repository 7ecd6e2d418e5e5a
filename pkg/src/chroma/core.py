"""Colorful graphs: immutable vertex-colored graphs and their minor edits.

A q-colorful graph is a finite simple graph together with a palette
``chi(v) ⊆ {1, ..., q}`` on each vertex (palettes may be empty).  The four
edit operations that generate the colorful-minor order are vertex deletion,
edge deletion, removal of a single color from a single palette, and edge
contraction, where contraction unions the two endpoint palettes onto the
merged vertex.

Everything here is immutable: edits return new graphs.  Palettes are stored
as bitmasks (bit i-1 set means color i present), which keeps unions,
subset tests and canonical hashing cheap for q up to 64.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator


MAX_Q = 64


class CapExceeded(Exception):
    """An instance is larger than the configured exact-search caps allow."""


@dataclass(frozen=True)
class Caps:
    """Size ceilings for the exact searches.

    The defaults match the guarantees the test suite is calibrated against:
    minor search up to 20 host vertices (40 when the pattern has at most 4
    vertices), canonical forms up to 16 vertices, obstruction generation up
    to q = 8, and at most 5000 minimal models per enumeration.
    """

    host_vertices: int = 20
    host_vertices_small_pattern: int = 40
    small_pattern: int = 4
    canon_vertices: int = 16
    max_q: int = 8
    max_models: int = 5000

    def check_host(self, n_host: int, n_pattern: int) -> None:
        limit = (
            self.host_vertices_small_pattern
            if n_pattern <= self.small_pattern
            else self.host_vertices
        )
        if n_host > limit:
            raise CapExceeded(
                f"host has {n_host} vertices; cap is {limit} "
                f"for patterns with {n_pattern} vertices"
            )


DEFAULT_CAPS = Caps()


def palette_mask(colors: Iterable[int], q: int) -> int:
    """Bitmask for a set of 1-based colors, validating against q."""
    mask = 0
    for c in colors:
        if not 1 <= c <= q:
            raise ValueError(f"color {c} out of range 1..{q}")
        mask |= 1 << (c - 1)
    return mask


def mask_colors(mask: int) -> tuple[int, ...]:
    """The sorted tuple of 1-based colors in a palette bitmask."""
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class ColorfulGraph:
    """An immutable q-colorful graph on vertices 0..n-1.

    ``palettes[v]`` is the bitmask of colors on v; ``edges`` is a sorted
    tuple of sorted pairs.  Vertices are always densely numbered — edits
    renumber.
    """

    q: int
    palettes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[frozenset[int], ...] = field(
        default=(), compare=False, repr=False
    )

    def __post_init__(self) -> None:
        if not 0 <= self.q <= MAX_Q:
            raise ValueError(f"q must be in 0..{MAX_Q}, got {self.q}")
        n = len(self.palettes)
        full = (1 << self.q) - 1
        for v, p in enumerate(self.palettes):
            if p & ~full:
                raise ValueError(f"palette of vertex {v} uses colors beyond q={self.q}")
        seen = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < n):
                raise ValueError(f"bad edge {e} on {n} vertices")
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))

    # -- construction helpers -------------------------------------------

    @staticmethod
    def build(
        q: int,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        colors: dict[int, Iterable[int]] | None = None,
    ) -> "ColorfulGraph":
        """Build from edge pairs (any order) and a vertex -> colors map."""
        palettes = [0] * n
        for v, cs in (colors or {}).items():
            if not 0 <= v < n:
                raise ValueError(f"colored vertex {v} out of range")
            palettes[v] = palette_mask(cs, q)
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        for u, v in norm:
            if u == v:
                raise ValueError(f"loop at {u}")
        return ColorfulGraph(q, tuple(palettes), tuple(norm))

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.palettes)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def colors_of(self, v: int) -> tuple[int, ...]:
        return mask_colors(self.palettes[v])

    def color_union(self) -> int:
        """Bitmask union of all palettes — chi(G)."""
        mask = 0
        for p in self.palettes:
            mask |= p
        return mask

    def vertices(self) -> range:
        return range(self.n)

    # -- structural predicates -------------------------------------------

    def is_restricted(self) -> bool:
        """True iff the palette union is a *proper* subset of {1..q}.

        For q = 0 this is False: the empty set cannot properly contain
        anything.
        """
        full = (1 << self.q) - 1
        return self.color_union() != full

    def is_rainbow(self) -> bool:
        """True iff every vertex carries the full palette {1..q}."""
        full = (1 << self.q) - 1
        return all(p == full for p in self.palettes)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components as sorted vertex tuples, sorted by minimum."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        stack.append(y)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def subgraph(self, keep: Iterable[int]) -> "ColorfulGraph":
        """Induced subgraph on ``keep``, renumbered densely (ascending)."""
        kept = sorted(set(keep))
        index = {v: i for i, v in enumerate(kept)}
        pal = tuple(self.palettes[v] for v in kept)
        es = tuple(
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return ColorfulGraph(self.q, pal, es)

    # -- the four edit operations ------------------------------------------

    def delete_vertex(self, v: int) -> "ColorfulGraph":
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        return self.subgraph(u for u in range(self.n) if u != v)

    def delete_edge(self, u: int, v: int) -> "ColorfulGraph":
        e = (min(u, v), max(u, v))
        if e not in set(self.edges):
            raise ValueError(f"no edge {e}")
        return ColorfulGraph(
            self.q, self.palettes, tuple(f for f in self.edges if f != e)
        )

    def remove_color(self, v: int, color: int) -> "ColorfulGraph":
        """Remove one color from one palette."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        bit = 1 << (color - 1)
        if not 1 <= color <= self.q or not self.palettes[v] & bit:
            raise ValueError(f"vertex {v} does not carry color {color}")
        pal = list(self.palettes)
        pal[v] &= ~bit
        return ColorfulGraph(self.q, tuple(pal), self.edges)

    def contract(self, u: int, v: int) -> "ColorfulGraph":
        """Contract edge uv; the merged vertex takes id min(u,v) and the
        palette union, parallel edges are simplified, and ids above the
        deleted endpoint shift down by one."""
        if not self.has_edge(u, v):
            raise ValueError(f"no edge {(u, v)}")
        lo, hi = min(u, v), max(u, v)

        def rename(x: int) -> int:
            if x == hi:
                return lo
            return x - 1 if x > hi else x

        pal = [
            self.palettes[x] for x in range(self.n) if x != hi
        ]
        pal[lo] = self.palettes[lo] | self.palettes[hi]
        es = set()
        for a, b in self.edges:
            a2, b2 = rename(a), rename(b)
            if a2 != b2:
                es.add((min(a2, b2), max(a2, b2)))
        return ColorfulGraph(self.q, tuple(pal), tuple(sorted(es)))

    # -- global recolorings -------------------------------------------------

    def fusion(self) -> "ColorfulGraph":
        """Collapse palettes: nonempty -> {1}, empty -> empty; result q = 1."""
        pal = tuple(1 if p else 0 for p in self.palettes)
        return ColorfulGraph(1, pal, self.edges)

    def with_q(self, q: int) -> "ColorfulGraph":
        """Reinterpret with a different q (palettes must fit)."""
        return ColorfulGraph(q, self.palettes, self.edges)

    def uncolored(self) -> "ColorfulGraph":
        return ColorfulGraph(0, (0,) * self.n, self.edges)

    def relabel(self, perm: dict[int, int]) -> "ColorfulGraph":
        """Apply a vertex bijection old -> new."""
        if sorted(perm) != list(range(self.n)) or sorted(
            perm.values()
        ) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        pal = [0] * self.n
        for v in range(self.n):
            pal[perm[v]] = self.palettes[v]
        es = tuple(
            sorted(
                (min(perm[u], perm[v]), max(perm[u], perm[v]))
                for u, v in self.edges
            )
        )
        return ColorfulGraph(self.q, tuple(pal), es)

    def disjoint_union(self, other: "ColorfulGraph") -> "ColorfulGraph":
        if self.q != other.q:
            raise ValueError("q mismatch")
        off = self.n
        pal = self.palettes + other.palettes
        es = self.edges + tuple((u + off, v + off) for u, v in other.edges)
        return ColorfulGraph(self.q, pal, tuple(sorted(es)))


def all_single_edits(g: ColorfulGraph) -> Iterator[tuple[str, ColorfulGraph]]:
    """Every graph one edit below g, tagged with the edit kind.

    Yields ("delete_vertex", ...), ("delete_edge", ...),
    ("remove_color", ...) and ("contract", ...) results, in a fixed
    deterministic order.
    """
    for v in range(g.n):
        yield "delete_vertex", g.delete_vertex(v)
    for u, v in g.edges:
        yield "delete_edge", g.delete_edge(u, v)
    for v in range(g.n):
        for c in g.colors_of(v):
            yield "remove_color", g.remove_color(v, c)
    for u, v in g.edges:
        yield "contract", g.contract(u, v)


# -- small named graphs used all over the test corpus ------------------------


def complete_graph(n: int, q: int = 0) -> ColorfulGraph:
    return ColorfulGraph.build(
        q, n, [(i, j) for i in range(n) for j in range(i + 1, n)]
    )


def complete_bipartite(a: int, b: int, q: int = 0) -> ColorfulGraph:
    return ColorfulGraph.build(
        q, a + b, [(i, a + j) for i in range(a) for j in range(b)]
    )


def path_graph(n: int, q: int = 0) -> ColorfulGraph:
    return ColorfulGraph.build(q, n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int, q: int = 0) -> ColorfulGraph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return ColorfulGraph.build(
        q, n, [(i, (i + 1) % n) for i in range(n)]
    )


def enumerate_colorful_graphs(
    n_max: int, q: int, connected_only: bool = False
) -> Iterator[ColorfulGraph]:
    """All colorful graphs with at most n_max vertices over palettes ⊆ [q].

    Exhaustive up-to-nothing enumeration (no isomorphism reduction): every
    labeled graph on 0..n_max vertices with every palette assignment.  Meant
    for small n and q only — the count is 2^(C(n,2)) * (2^q)^n per n.
    """
    pal_choices = range(1 << q)
    for n in range(n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for edge_bits in range(1 << len(pairs)):
            es = tuple(
                pairs[i] for i in range(len(pairs)) if edge_bits >> i & 1
            )
            for pals in itertools.product(pal_choices, repeat=n):
                g = ColorfulGraph(q, tuple(pals), es)
                if connected_only and not g.is_connected():
                    continue
                yield g
