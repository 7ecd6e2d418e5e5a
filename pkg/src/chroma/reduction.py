"""Reduction of colorful minor testing to plain minor testing.

Colors are encoded as structure: each colored vertex gets, per color, a
fresh copy of a rigid marker graph fully joined to it.  The markers for
different colors come from a minor antichain whose members all share the
same vertex and edge count, so no marker can stand in for another inside
a minor model, and the colorful question on the original pair becomes a
plain (uncolored) minor question on the decorated pair.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .core import (CapExceeded, Caps, ColorfulGraph, DEFAULT_CAPS,
                   complete_graph)
from .minor import find_colorful_minor, find_rooted_minor, has_colorful_minor


# ------------------------------------------------------------ antichains

@dataclass(frozen=True)
class MinorAntichain:
    """Connected graphs of equal order and size, pairwise incomparable
    under the minor relation, each containing K_r as a minor."""
    r: int
    members: tuple[ColorfulGraph, ...]


def _regular_graphs(n: int, d: int) -> Iterator[tuple[frozenset[int], ...]]:
    """All d-regular graphs on vertices 0..n-1 with N(0) = {1..d}, as
    adjacency-set tuples.  Every isomorphism class on n vertices has a
    labelling of this shape, so the stream covers all shapes; vertices
    are completed in increasing order, which makes each labelled graph
    appear exactly once."""
    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n
    for v in range(1, d + 1):
        adj[0].add(v)
        adj[v].add(0)
        deg[v] = 1
    deg[0] = d

    def complete(u: int) -> Iterator[tuple[frozenset[int], ...]]:
        while u < n and deg[u] == d:
            u += 1
        if u == n:
            yield tuple(frozenset(a) for a in adj)
            return
        need = d - deg[u]
        cands = [v for v in range(u + 1, n) if deg[v] < d and v not in adj[u]]
        if len(cands) < need:
            return
        def feasible() -> bool:
            open_deg = sum(d - deg[v] for v in range(u + 1, n))
            if open_deg % 2:
                return False
            for v in range(u + 1, n):
                if deg[v] == d:
                    continue
                room = sum(1 for w in range(u + 1, n)
                           if w != v and deg[w] < d and w not in adj[v])
                if room < d - deg[v]:
                    return False
            return True

        for pick in combinations(cands, need):
            for v in pick:
                adj[u].add(v)
                adj[v].add(u)
                deg[v] += 1
            deg[u] = d
            if feasible():
                yield from complete(u + 1)
            deg[u] -= need
            for v in pick:
                adj[u].remove(v)
                adj[v].remove(u)
                deg[v] -= 1

    yield from complete(1)


def _connected(adj: tuple[frozenset[int], ...]) -> bool:
    n = len(adj)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == n


def _isomorphic(a: tuple[frozenset[int], ...],
                b: tuple[frozenset[int], ...]) -> bool:
    """Backtracking isomorphism test for two graphs on equal, small
    vertex sets (the callers only compare regular graphs)."""
    n = len(a)
    if n != len(b) or sorted(map(len, a)) != sorted(map(len, b)):
        return False
    image: list[Optional[int]] = [None] * n
    used = [False] * n

    def place(u: int) -> bool:
        if u == n:
            return True
        for t in range(n):
            if used[t] or len(b[t]) != len(a[u]):
                continue
            if all((image[w] in b[t]) == (w in a[u]) for w in range(u)):
                image[u] = t
                used[t] = True
                if place(u + 1):
                    return True
                image[u] = None
                used[t] = False
        return False

    return place(0)


def _as_graph(adj: tuple[frozenset[int], ...], apex: bool) -> ColorfulGraph:
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    if apex:
        edges += [(v, n) for v in range(n)]
        n += 1
    return ColorfulGraph.build(0, n, edges=edges)


_chain_cache: dict[tuple[int, int], MinorAntichain] = {}


def build_minor_antichain(r: int, count: int,
                          caps: Caps = DEFAULT_CAPS) -> MinorAntichain:
    """``count`` pairwise minor-incomparable connected graphs, each
    containing K_r as a minor.

    Walks (n, d) pairs in increasing order, enumerating d-regular graphs
    on n vertices up to isomorphism; shapes verified (engine) to contain
    K_r are kept until ``count`` of them are found, then each gets a
    universal apex.  Equal order and size make pairwise non-isomorphic
    members automatically incomparable: a minor of the same order and
    size leaves no room for any deletion or contraction.
    """
    if not 2 <= r <= 5:
        raise ValueError("r must be between 2 and 5")
    if not 1 <= count <= 12:
        raise ValueError("count must be between 1 and 12")
    cached = _chain_cache.get((r, count))
    if cached is not None:
        return cached
    kr = complete_graph(r)
    for n in range(3, 10):
        for d in range(2, n):
            if (n * d) % 2:
                continue
            # a K_r model needs r branch sets of ceil((r-1)/d) vertices
            if n < r * -(-(r - 1) // d):
                continue
            shapes: list[tuple[frozenset[int], ...]] = []
            members: list[tuple[frozenset[int], ...]] = []
            for adj in _regular_graphs(n, d):
                if not _connected(adj):
                    continue
                if any(_isomorphic(adj, s) for s in shapes):
                    continue
                shapes.append(adj)
                if has_colorful_minor(_as_graph(adj, apex=False), kr, caps):
                    members.append(adj)
                    if len(members) == count:
                        chain = MinorAntichain(
                            r, tuple(_as_graph(a, apex=True) for a in members))
                        _chain_cache[(r, count)] = chain
                        return chain
    raise CapExceeded(
        f"no regular family within caps yields {count} members for r={r}")


def antichain_violations(chain: MinorAntichain,
                         caps: Caps = DEFAULT_CAPS) -> list[str]:
    """Everything wrong with a claimed antichain: unequal orders or
    sizes, a disconnected member, a member without a K_r minor, or one
    member containing another (checked with the engine both ways)."""
    out = []
    ms = chain.members
    if not ms:
        return ["no members"]
    n0, e0 = ms[0].n, ms[0].m
    kr = complete_graph(chain.r)
    wide = Caps(host_vertices=max(caps.host_vertices, n0),
                host_vertices_small_pattern=caps.host_vertices_small_pattern,
                small_pattern=caps.small_pattern,
                canon_vertices=caps.canon_vertices,
                max_q=caps.max_q, max_models=caps.max_models)
    for i, m in enumerate(ms):
        if (m.n, m.m) != (n0, e0):
            out.append(f"member {i} has order/size ({m.n}, {m.m})"
                       f" != ({n0}, {e0})")
        if len(m.components()) != 1:
            out.append(f"member {i} is disconnected")
        if not has_colorful_minor(m, kr, wide):
            out.append(f"member {i} has no K_{chain.r} minor")
    for i in range(len(ms)):
        for j in range(len(ms)):
            if i != j and has_colorful_minor(ms[i], ms[j], wide):
                out.append(f"member {j} is a minor of member {i}")
    return out


def verify_antichain(chain: MinorAntichain, caps: Caps = DEFAULT_CAPS) -> bool:
    return not antichain_violations(chain, caps)


# ------------------------------------------------------------ decoration

@dataclass(frozen=True)
class DecoratedGraph:
    """A plain graph encoding a colorful one: vertex v of the original
    keeps its id, and each (v, color) pair owns a marker copy fully
    joined to v, recorded as (owner, color, marker vertex tuple)."""
    graph: ColorfulGraph
    core: tuple[tuple[int, int], ...]
    decorations: tuple[tuple[int, int, tuple[int, ...]], ...]


def decorate(g: ColorfulGraph, r: int, caps: Caps = DEFAULT_CAPS,
             antichain: Optional[MinorAntichain] = None) -> DecoratedGraph:
    """Attach, for every vertex v and color i of v, a fresh copy of
    antichain member i fully joined to v; the result is uncolored.  An
    uncolored input comes back unchanged (no markers to add)."""
    pairs = [(v, i) for v in range(g.n) for i in g.colors_of(v)]
    core = tuple((v, v) for v in range(g.n))
    if not pairs:
        return DecoratedGraph(g.uncolored(), core, ())
    if antichain is None:
        antichain = build_minor_antichain(r, g.q, caps)
    if len(antichain.members) < g.q:
        raise ValueError(
            f"antichain has {len(antichain.members)} members, need {g.q}")
    edges = list(g.edges)
    decorations = []
    nxt = g.n
    for v, i in pairs:
        member = antichain.members[i - 1]
        verts = tuple(range(nxt, nxt + member.n))
        edges.extend((verts[a], verts[b]) for a, b in member.edges)
        edges.extend((v, x) for x in verts)
        decorations.append((v, i, verts))
        nxt += member.n
    return DecoratedGraph(ColorfulGraph.build(0, nxt, edges=edges),
                          core, tuple(decorations))


# --------------------------------------------- plain minor, decomposed

class _PlainMinor:
    """Plain (uncolored) minor containment by host cut-vertex splitting.

    If a model puts host cut vertex x into branch set S_w, no pattern
    edge can cross x outside S_w, so the components of pattern - w fall
    entirely on one side each; conversely rooted models on the two
    sides, both pinning x into w's set, glue into one model.  A model
    avoiding x sits inside a single flap.  Recursing until the host
    piece is 2-connected keeps every direct engine call small when the
    host's blocks are small, which is what decorated graphs look like.
    """

    # keyed by relabelled subgraph identity, so results carry across
    # instances that share marker shapes
    leaf_memo: dict[tuple, bool] = {}

    def __init__(self, host: ColorfulGraph, pattern: ColorfulGraph):
        self.h = host
        self.p = pattern
        self.memo: dict[tuple, bool] = {}

    def solve(self, hl: frozenset[int], pl: frozenset[int],
              pins: tuple[tuple[int, int], ...]) -> bool:
        if not pl:
            return True
        if len(pl) > len(hl):
            return False
        if any(hv not in hl for _, hv in pins):
            return False
        key = (hl, pl, pins)
        got = self.memo.get(key)
        if got is None:
            self.memo[key] = got = self._solve(hl, pl, pins)
        return got

    def _solve(self, hl, pl, pins) -> bool:
        if self._edge_count(self.p, pl) > self._edge_count(self.h, hl):
            return False
        cut = self._cut_vertex(hl)
        if cut is None:
            return self._engine(hl, pl, pins)
        x, flap = cut
        rest = (hl - flap) | {x}
        pinned = frozenset(hv for _, hv in pins)
        # model avoiding x: entirely inside one side
        if pinned <= flap - {x} and self.solve(flap - {x}, pl, pins):
            return True
        if pinned <= rest - {x} and self.solve(rest - {x}, pl, pins):
            return True
        # model using x inside the branch set of some pattern vertex w:
        # no pattern edge crosses x, so the components of pattern - w
        # land on one side each, and S_w glues across the pin (w, x)
        for w in sorted(pl):
            if any(pv != w and hv == x for pv, hv in pins):
                continue
            sides = []
            ok = True
            for comp in self._pat_components(pl - {w}):
                cpins = tuple(p for p in pins if p[0] in comp)
                can1 = all(hv in flap and hv != x for _, hv in cpins)
                can2 = all(hv in rest and hv != x for _, hv in cpins)
                if not (can1 or can2):
                    ok = False
                    break
                sides.append((comp, can1, can2, cpins))
            if not ok:
                continue
            wp = [p for p in pins if p[0] == w]
            w1 = tuple(p for p in wp if p[1] in flap) + ((w, x),)
            w2 = tuple(p for p in wp if p[1] in rest) + ((w, x),)
            if self._assign(sides, 0, frozenset({w}), frozenset({w}),
                            w1, w2, flap, rest):
                return True
        return False

    def _assign(self, sides, i, left, right, lp, rp, flap, rest) -> bool:
        if i == len(sides):
            return (self.solve(flap, left, tuple(sorted(set(lp)))) and
                    self.solve(rest, right, tuple(sorted(set(rp)))))
        comp, can1, can2, cpins = sides[i]
        if can1 and self._assign(sides, i + 1, left | comp, right,
                                 lp + cpins, rp, flap, rest):
            return True
        if can2 and self._assign(sides, i + 1, left, right | comp,
                                 lp, rp + cpins, flap, rest):
            return True
        return False

    @staticmethod
    def _edge_count(g: ColorfulGraph, live: frozenset[int]) -> int:
        return sum(1 for u, v in g.edges if u in live and v in live)

    def _cut_vertex(self, hl: frozenset[int]):
        """Some cut vertex of host[hl] with its smallest flap, or None."""
        if len(hl) < 3:
            return None
        best = None
        for x in sorted(hl):
            comps = self._host_components(hl - {x})
            if len(comps) < 2:
                continue
            small = min(comps, key=lambda c: (len(c), sorted(c)))
            if best is None or len(small) < len(best[1]):
                best = (x, small | {x})
        return best

    def _host_components(self, live: frozenset[int]) -> list[frozenset[int]]:
        return self._components(self.h, live)

    def _pat_components(self, live: frozenset[int]) -> list[frozenset[int]]:
        return self._components(self.p, live)

    @staticmethod
    def _components(g: ColorfulGraph, live: frozenset[int]
                    ) -> list[frozenset[int]]:
        out = []
        left = set(live)
        while left:
            s = min(left)
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for u in g.neighbors(v):
                    if u in live and u not in comp:
                        comp.add(u)
                        stack.append(u)
            left -= comp
            out.append(frozenset(comp))
        return out

    def _engine(self, hl, pl, pins) -> bool:
        hs = sorted(hl)
        ps = sorted(pl)
        hmap = {v: i for i, v in enumerate(hs)}
        pmap = {v: i for i, v in enumerate(ps)}
        sub_h = self.h.subgraph(hs)
        sub_p = self.p.subgraph(ps)
        host_roots = tuple(hmap[hv] for _, hv in pins)
        pat_roots = tuple(pmap[pv] for pv, _ in pins)
        # relabelled twins (fresh copies of one marker shape) memoize to
        # the same key, so block-vs-block checks run once per shape pair
        key = (len(hs), sub_h.edges, len(ps), sub_p.edges,
               host_roots, pat_roots)
        got = self.leaf_memo.get(key)
        if got is not None:
            return got
        caps = Caps(host_vertices=len(hs),
                    host_vertices_small_pattern=len(hs),
                    small_pattern=DEFAULT_CAPS.small_pattern,
                    canon_vertices=DEFAULT_CAPS.canon_vertices,
                    max_q=DEFAULT_CAPS.max_q,
                    max_models=DEFAULT_CAPS.max_models)
        got = find_rooted_minor(sub_h, sub_p, host_roots, pat_roots,
                                caps) is not None
        self.leaf_memo[key] = got
        return got


def _plain_minor(host: ColorfulGraph, pattern: ColorfulGraph) -> bool:
    """Uncolored minor containment for connected inputs, via host
    cut-vertex decomposition with engine calls on 2-connected pieces."""
    if pattern.n == 0:
        return True
    solver = _PlainMinor(host, pattern)
    full_h = frozenset(range(host.n))
    for comp in solver._pat_components(frozenset(range(pattern.n))):
        if len(comp) != pattern.n:
            raise ValueError("plain reduction expects a connected pattern")
    return solver.solve(full_h, frozenset(range(pattern.n)), ())


def reduced_minor_check(host: ColorfulGraph, pattern: ColorfulGraph, r: int,
                        caps: Caps = DEFAULT_CAPS) -> bool:
    """Decide colorful minor containment by decorating both sides with
    one shared antichain and asking the plain minor question.

    Both underlying graphs must exclude K_r as a minor (checked); the
    marker blocks then have nowhere to land except on marker blocks of
    the same shape, which is what carries colors across the encoding.
    """
    if host.q != pattern.q:
        raise ValueError(f"q mismatch: host q={host.q}, pattern q={pattern.q}")
    caps.check_host(host.n, pattern.n)
    bare = [v for v in range(pattern.n) if not pattern.palettes[v]]
    if bare:
        # an uncolored pattern vertex has no marker anchoring it to the
        # host core, so its branch set could hide inside a host marker
        # block and the plain answer would overshoot (e.g. an uncolored
        # triangle "found" inside a marker while the host is a tree)
        raise ValueError(
            f"pattern vertices {bare} carry no color; the encoding only "
            "answers for patterns whose every vertex is colored")
    kr = complete_graph(r)
    if has_colorful_minor(host.uncolored(), kr, caps):
        raise ValueError(f"host contains K_{r} as a minor")
    if has_colorful_minor(pattern.uncolored(), kr, caps):
        raise ValueError(f"pattern contains K_{r} as a minor")
    chain = build_minor_antichain(r, max(host.q, 1), caps)
    dh = decorate(host, r, caps, antichain=chain)
    dp = decorate(pattern, r, caps, antichain=chain)
    return _plain_minor(dh.graph, dp.graph)
