"""Constructors for the structured graph families used across the package.

Grids and walls are the uncolored substrate; segregated grids put color
blocks down the first column; universal families bundle segregated grids
so that every suitably colored graph of bounded width occurs inside some
member; crossing paths are the small ring-shaped witnesses whose colored
endpoints force path crossings; disk multiplication produces disjoint
boundary-colored copies after validating an embedding certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import ColorfulGraph


# ---------------------------------------------------------------- grids

def grid_vertex(n: int, m: int, i: int, j: int) -> int:
    """Row-major id of grid position (i, j), 1-based coordinates."""
    if not (1 <= i <= n and 1 <= j <= m):
        raise ValueError(f"position ({i},{j}) outside {n}x{m} grid")
    return (i - 1) * m + (j - 1)


def make_grid(n: int, m: int, q: int = 0) -> ColorfulGraph:
    """The n-by-m grid: vertices [n]x[m], edges between positions at
    distance one in a single coordinate.  Uncolored unless q is given
    (palettes start empty either way)."""
    if n < 1 or m < 1:
        raise ValueError("grid dimensions must be at least 1")
    edges = []
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            v = grid_vertex(n, m, i, j)
            if j < m:
                edges.append((v, v + 1))
            if i < n:
                edges.append((v, v + m))
    return ColorfulGraph.build(q, n * m, edges)


def make_wall(n: int, m: int) -> ColorfulGraph:
    """The n-by-m wall: start from the (n x 2m)-grid, delete the vertical
    edges {(i,j),(i+1,j)} whenever i and the column index j have different
    parity, then repeatedly drop vertices of degree at most one.  Bricks
    (hexagonal faces) tile the result; max degree is 3."""
    if n < 1 or m < 1:
        raise ValueError("wall dimensions must be at least 1")
    cols = 2 * m
    drop = set()
    for i in range(1, n):
        for j in range(1, cols + 1):
            if i % 2 != j % 2:
                drop.add(frozenset((grid_vertex(n, cols, i, j),
                                    grid_vertex(n, cols, i + 1, j))))
    g = make_grid(n, cols)
    edges = [e for e in g.edges if frozenset(e) not in drop]
    alive = set(range(g.n))
    deg = {v: 0 for v in alive}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if deg[v] <= 1:
                alive.remove(v)
                changed = True
                for u, w in edges:
                    if u == v and w in alive:
                        deg[w] -= 1
                    elif w == v and u in alive:
                        deg[u] -= 1
        edges = [e for e in edges if e[0] in alive and e[1] in alive]
    relabel = {v: i for i, v in enumerate(sorted(alive))}
    return ColorfulGraph.build(
        0, len(alive), [(relabel[u], relabel[v]) for u, v in edges])


def rainbow(q: int, g: ColorfulGraph) -> ColorfulGraph:
    """Every vertex of g gets the full palette {1..q}."""
    full = (1 << q) - 1
    return ColorfulGraph(q, (full,) * g.n, g.edges)


# ----------------------------------------------------- segregated grids

@dataclass(frozen=True)
class SegregatedSpec:
    """Parameters of a (q, k)-segregated grid: the qk-by-qk grid whose
    first column is colored in q consecutive blocks of k rows, block i
    getting the single color pi[i-1]."""

    q: int
    k: int
    pi: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.q < 1 or self.k < 1:
            raise ValueError("q and k must be at least 1")
        if sorted(self.pi) != list(range(1, self.q + 1)):
            raise ValueError(f"pi must be a permutation of 1..{self.q}")


def segregated_grid(q: int | SegregatedSpec, k: int | None = None,
                    pi: Sequence[int] | None = None) -> ColorfulGraph:
    if isinstance(q, SegregatedSpec):
        spec = q
    else:
        if k is None:
            raise ValueError("k is required")
        spec = SegregatedSpec(q, k, tuple(pi) if pi is not None
                              else tuple(range(1, q + 1)))
    side = spec.q * spec.k
    g = make_grid(side, side, q=spec.q)
    colors = list(g.palettes)
    for i in range(1, side + 1):
        block = (i - 1) // spec.k
        colors[grid_vertex(side, side, i, 1)] = 1 << (spec.pi[block] - 1)
    return ColorfulGraph(spec.q, tuple(colors), g.edges)


def universal_family(q: int, k: int) -> list[ColorfulGraph]:
    """The members that jointly contain every q-colorful graph of small
    enough restricted width as a colorful minor.

    q = 0: the k-by-k grid.  q = 1: the (1, k)-segregated grid.  q >= 2:
    one member per color c, the disjoint union over the other colors j of
    the (2, k)-segregated grid on colors {c, j}; the two block orders give
    isomorphic grids (flip the rows), so for q = 2 the family is a single
    graph.
    """
    if q < 0 or k < 0:
        raise ValueError("q and k must be nonnegative")
    if k == 0:
        return [ColorfulGraph.build(q, 0)]
    if q == 0:
        return [make_grid(k, k)]
    if q == 1:
        return [segregated_grid(1, k)]

    def member(c: int) -> ColorfulGraph:
        parts = [two_block(c, j, k, q) for j in range(1, q + 1) if j != c]
        out = parts[0]
        for p in parts[1:]:
            out = out.disjoint_union(p)
        return out

    if q == 2:
        return [member(1)]
    return [member(c) for c in range(1, q + 1)]


def two_block(a: int, b: int, k: int, q: int) -> ColorfulGraph:
    """(2, k)-segregated grid on colors a then b, inside palette space q."""
    side = 2 * k
    g = make_grid(side, side, q=q)
    colors = list(g.palettes)
    for i in range(1, side + 1):
        c = a if i <= k else b
        colors[grid_vertex(side, side, i, 1)] = 1 << (c - 1)
    return ColorfulGraph(q, tuple(colors), g.edges)


# ------------------------------------------------------- crossing paths

def crossing_paths(k: int) -> ColorfulGraph:
    """k paths of the first kind (endpoints colored 1 and 3) and k of the
    second kind (endpoints 2 and 4), where path i of the first kind
    crosses path j of the second kind at a shared uncolored degree-4
    vertex x_ij exactly when i != j.

    Copy i of each kind avoids its own partner, so the pair (A_i, B_i)
    is always realizable disjointly; any two such pairs meet (x_ij lies
    on both A_i and B_j), which pins the packing number at 1.  Dually,
    every vertex lies on at most two of the k partner pairs, so hitting
    all of them takes at least ceil(k/2) deletions.  Each crossing
    vertex belongs to exactly two path copies.

    For k = 1 there is nothing to cross: two disjoint colored edges.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    colors: dict[int, list[int]] = {}
    for i in range(k):
        colors[4 * i] = [1]
        colors[4 * i + 1] = [3]
        colors[4 * i + 2] = [2]
        colors[4 * i + 3] = [4]
    cross: dict[tuple[int, int], int] = {}
    nxt = 4 * k
    for i in range(k):
        for j in range(k):
            if i != j:
                cross[(i, j)] = nxt
                nxt += 1
    edges = []
    for i in range(k):  # A_i: 1_i - x_{i,j} ascending j - 3_i
        chain = [4 * i] + [cross[(i, j)] for j in range(k) if j != i]
        chain.append(4 * i + 1)
        edges.extend(zip(chain, chain[1:]))
    for j in range(k):  # B_j: 2_j - x_{i,j} ascending i - 4_j
        chain = [4 * j + 2] + [cross[(i, j)] for i in range(k) if i != j]
        chain.append(4 * j + 3)
        edges.extend(zip(chain, chain[1:]))
    return ColorfulGraph.build(4, nxt, edges=edges, colors=colors)


def crossing_pattern() -> ColorfulGraph:
    """The two-vertex edgeless pattern with palettes {1,3} and {2,4}; a
    model of it picks one path of each kind in crossing_paths output."""
    return ColorfulGraph.build(4, 2, colors={0: [1, 3], 1: [2, 4]})


# --------------------------------------------------- disk multiplication

def disk_multiplication(g: ColorfulGraph, k: int,
                        certificate: Mapping[str, object]) -> ColorfulGraph:
    """k disjoint copies of g, after validating that the certificate is a
    genuine disk embedding: a planar rotation system for g under which,
    in every component, all colored vertices lie on one common face, and
    a designated outer face listing covering the colored vertices.  The
    copies are laid out with each copy's boundary vertices consecutive
    along the new disk boundary, so no two copies ever cross.

    Raises ValueError("certificate invalid: ...") when validation fails.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    _validate_disk_certificate(g, certificate)
    out = g
    for _ in range(k - 1):
        out = out.disjoint_union(g)
    return out


def _validate_disk_certificate(g: ColorfulGraph,
                               certificate: Mapping[str, object]) -> None:
    def bad(reason: str) -> ValueError:
        return ValueError(f"certificate invalid: {reason}")

    if not isinstance(certificate, Mapping):
        raise bad("certificate must be a mapping")
    rotation = certificate.get("rotation")
    outer = certificate.get("outer_face")
    if rotation is None or outer is None:
        raise bad("missing rotation or outer_face")

    adj = {v: g.neighbors(v) for v in range(g.n)}
    rot: dict[int, list[int]] = {}
    for v in range(g.n):
        if not adj[v]:
            continue
        order = rotation.get(v) if isinstance(rotation, Mapping) else None
        if order is None:
            raise bad(f"no rotation for vertex {v}")
        order = list(order)
        if sorted(order) != sorted(adj[v]):
            raise bad(f"rotation at {v} is not an ordering of its neighbors")
        rot[v] = order

    colored = {v for v in range(g.n) if g.palettes[v]}
    outer_set = set(outer)
    if not outer_set <= set(range(g.n)):
        raise bad("outer_face lists unknown vertices")
    if not colored <= outer_set:
        raise bad("colored vertex missing from outer_face")

    # trace faces of the rotation system; check Euler per component
    darts = {(u, v) for u in rot for v in rot[u]}
    nxt = {}
    for v, order in rot.items():
        deg = len(order)
        for idx, u in enumerate(order):
            nxt[(u, v)] = (v, order[(idx + 1) % deg])
    faces = []
    seen: set[tuple[int, int]] = set()
    for d in sorted(darts):
        if d in seen:
            continue
        face = []
        cur = d
        while cur not in seen:
            seen.add(cur)
            face.append(cur)
            cur = nxt[cur]
        faces.append(face)

    comp_of: dict[int, int] = {}
    for v in sorted(adj):
        if v in comp_of or not adj[v]:
            continue
        cid = v
        stack = [v]
        comp_of[v] = cid
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in comp_of:
                    comp_of[y] = cid
                    stack.append(y)

    by_comp: dict[int, list[list[tuple[int, int]]]] = {}
    for face in faces:
        by_comp.setdefault(comp_of[face[0][0]], []).append(face)
    for cid, comp_faces in by_comp.items():
        vs = {v for v in comp_of if comp_of[v] == cid}
        es = sum(len(adj[v]) for v in vs) // 2
        if len(vs) - es + len(comp_faces) != 2:
            raise bad("rotation system is not planar")
        comp_colored = colored & vs
        if comp_colored:
            for face in comp_faces:
                if comp_colored <= {u for u, _ in face}:
                    break
            else:
                raise bad("colored vertices do not share a face")
