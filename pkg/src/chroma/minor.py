"""Exact colorful-minor containment, rooted variants, folios, connectors.

The search maintains one branch set per pattern vertex and repeatedly
repairs the most urgent deficiency of the partial model: an empty branch
set, a disconnected branch set, a missing palette color, or an
unrealized pattern edge.  Each repair branches over a small, provably
sufficient candidate set (first-vertex-on-a-path arguments), so the
search is complete; failed states are memoized by their branch-set
fingerprint.  Desk scale only — see ``Caps``.

Branch sets may pass through intermediate states where they are
disconnected (the edge-repair step is allowed to drop a vertex into a
set it is not yet adjacent to); the disconnection repair runs at higher
priority than color and edge repairs, which keeps the completeness
argument of each branching rule independent of the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .canon import canonical_key, canonicalize
from .core import CapExceeded, Caps, ColorfulGraph, DEFAULT_CAPS, mask_colors


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class MinorModel:
    """Branch sets of a colorful minor model, indexed by pattern vertex."""

    branch_sets: tuple[frozenset[int], ...]

    def as_dict(self) -> dict[int, list[int]]:
        return {i: sorted(s) for i, s in enumerate(self.branch_sets)}


def model_violations(host: ColorfulGraph, pattern: ColorfulGraph,
                     model: MinorModel,
                     host_roots: Sequence[int] = (),
                     pattern_roots: Sequence[int] = ()) -> list[str]:
    """All the ways ``model`` fails to witness pattern <= host (empty = valid).

    Cap-free: used to verify constructed witnesses on hosts far beyond
    what the search itself would accept.
    """
    out = []
    sets = model.branch_sets
    if len(sets) != pattern.n:
        return [f"model has {len(sets)} branch sets, pattern has {pattern.n} vertices"]
    if host.q != pattern.q:
        out.append(f"q mismatch: host {host.q}, pattern {pattern.q}")
    seen: dict[int, int] = {}
    for pv, s in enumerate(sets):
        if not s:
            out.append(f"branch set {pv} is empty")
            continue
        for hv in s:
            if not 0 <= hv < host.n:
                out.append(f"branch set {pv} contains out-of-range vertex {hv}")
            elif hv in seen:
                out.append(f"vertex {hv} lies in branch sets {seen[hv]} and {pv}")
            else:
                seen[hv] = pv
        if not _connected_in(host, s):
            out.append(f"branch set {pv} is not connected")
        need = pattern.palettes[pv]
        have = 0
        for hv in s:
            if 0 <= hv < host.n:
                have |= host.palettes[hv]
        if need & ~have:
            missing = mask_colors(need & ~have)
            out.append(f"branch set {pv} misses colors {missing}")
    for u, v in pattern.edges:
        if not any(host.has_edge(a, b) for a in sets[u] for b in sets[v]):
            out.append(f"pattern edge ({u},{v}) has no host edge between its sets")
    if len(host_roots) != len(pattern_roots):
        out.append("root tuples differ in length")
    else:
        for i, (hr, pr) in enumerate(zip(host_roots, pattern_roots)):
            if hr not in sets[pr]:
                out.append(f"root slot {i}: host vertex {hr} not in branch set {pr}")
    return out


def verify_model(host: ColorfulGraph, pattern: ColorfulGraph, model: MinorModel,
                 host_roots: Sequence[int] = (),
                 pattern_roots: Sequence[int] = ()) -> bool:
    return not model_violations(host, pattern, model, host_roots, pattern_roots)


def _connected_in(g: ColorfulGraph, vs) -> bool:
    vs = {v for v in vs if 0 <= v < g.n}
    if not vs:
        return True
    stack = [next(iter(vs))]
    seen = {stack[0]}
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in vs and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == vs


# ---------------------------------------------------------------------------
# the search


class _Engine:
    def __init__(self, host: ColorfulGraph, pattern: ColorfulGraph,
                 pins: Sequence[tuple[int, int]]):
        self.host = host
        self.pattern = pattern
        self.sets: list[set[int]] = [set() for _ in range(pattern.n)]
        self.owner: list[int] = [-1] * host.n
        self.failed: set[tuple] = set()
        self.pins_ok = True
        for pv, hv in pins:
            if self.owner[hv] not in (-1, pv):
                self.pins_ok = False
                return
            self.owner[hv] = pv
            self.sets[pv].add(hv)
        # most constrained pattern vertices first
        self.porder = sorted(
            range(pattern.n),
            key=lambda v: (-bin(pattern.palettes[v]).count("1"),
                           -pattern.degree(v), v))

    # -- deficiency scan, in repair priority ------------------------------

    def _empty(self) -> Optional[int]:
        for v in self.porder:
            if not self.sets[v]:
                return v
        return None

    def _disconnected(self) -> Optional[tuple[int, set[int]]]:
        for v in self.porder:
            s = self.sets[v]
            if len(s) < 2:
                continue
            comp = self._component(s, min(s))
            if comp != s:
                return v, comp
        return None

    def _component(self, s: set[int], start: int) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.host.neighbors(x):
                if y in s and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def _missing_color(self) -> Optional[int]:
        for v in self.porder:
            need = self.pattern.palettes[v]
            if not need:
                continue
            have = 0
            for hv in self.sets[v]:
                have |= self.host.palettes[hv]
            if need & ~have:
                return v
        return None

    def _unrealized_edge(self) -> Optional[tuple[int, int]]:
        for u, v in self.pattern.edges:
            su, sv = self.sets[u], self.sets[v]
            if not any(self.host.has_edge(a, b) for a in su for b in sv):
                return u, v
        return None

    # -- cheap infeasibility filters --------------------------------------

    def _hopeless(self) -> bool:
        unowned = [hv for hv in range(self.host.n) if self.owner[hv] == -1]
        empties = sum(1 for s in self.sets if not s)
        if empties > len(unowned):
            return True
        for c in range(1, self.pattern.q + 1):
            bit = 1 << (c - 1)
            needy = 0
            for v in range(self.pattern.n):
                if self.pattern.palettes[v] & bit and \
                        not any(self.host.palettes[hv] & bit for hv in self.sets[v]):
                    needy += 1
            if needy:
                avail = sum(1 for hv in unowned if self.host.palettes[hv] & bit)
                if needy > avail:
                    return True
        # every pending repair needs a route through free vertices
        for v in range(self.pattern.n):
            s = self.sets[v]
            if not s:
                continue
            comp = self._component(s, min(s))
            if comp != s and not (s - comp) & self._reach(comp, extra=s):
                return True
            need = self.pattern.palettes[v]
            have = 0
            for hv in s:
                have |= self.host.palettes[hv]
            rest = need & ~have
            if rest:
                got = 0
                for hv in self._reach(s):
                    if self.owner[hv] == -1:
                        got |= self.host.palettes[hv]
                if rest & ~got:
                    return True
        for u, v in self.pattern.edges:
            su, sv = self.sets[u], self.sets[v]
            if not su or not sv:
                continue
            if any(self.host.has_edge(a, b) for a in su for b in sv):
                continue
            if not any(self.host.has_edge(x, b) for x in self._reach(su)
                       if self.owner[x] == -1 for b in sv):
                return True
        return False

    def _reach(self, seeds: set[int], extra: set[int] = frozenset()) -> set[int]:
        """Seeds plus everything reachable from them via unowned (or extra) vertices."""
        seen = set(seeds)
        stack = list(seeds)
        while stack:
            x = stack.pop()
            for y in self.host.neighbors(x):
                if y not in seen and (self.owner[y] == -1 or y in extra):
                    seen.add(y)
                    stack.append(y)
        return seen

    # -- the DFS -----------------------------------------------------------

    def run(self) -> Optional[MinorModel]:
        if not self.pins_ok:
            return None
        return self._dfs()

    def _dfs(self) -> Optional[MinorModel]:
        key = tuple(frozenset(s) for s in self.sets)
        if key in self.failed:
            return None
        if self._hopeless():
            self.failed.add(key)
            return None

        ev = self._empty()
        if ev is not None:
            # A set that must carry colors contains a carrier of each; seed
            # directly on carriers of one needed color instead of everywhere.
            need = self.pattern.palettes[ev]
            if need:
                bit = need & -need
                for hv in range(self.host.n):
                    if self.owner[hv] == -1 and self.host.palettes[hv] & bit:
                        got = self._try(ev, hv)
                        if got:
                            return got
            else:
                for hv in range(self.host.n):
                    if self.owner[hv] == -1:
                        got = self._try(ev, hv)
                        if got:
                            return got
            self.failed.add(key)
            return None

        dis = self._disconnected()
        if dis is not None:
            v, comp = dis
            for hv in sorted(self._frontier(comp)):
                got = self._try(v, hv)
                if got:
                    return got
            self.failed.add(key)
            return None

        mv = self._missing_color()
        if mv is not None:
            for hv in sorted(self._frontier(self.sets[mv])):
                got = self._try(mv, hv)
                if got:
                    return got
            self.failed.add(key)
            return None

        ue = self._unrealized_edge()
        if ue is not None:
            u, v = ue
            for hv in sorted(self._frontier(self.sets[u])):
                for target in (u, v):
                    got = self._try(target, hv)
                    if got:
                        return got
            self.failed.add(key)
            return None

        return MinorModel(tuple(frozenset(s) for s in self.sets))

    def _frontier(self, around: set[int]) -> set[int]:
        out = set()
        for x in around:
            for y in self.host.neighbors(x):
                if self.owner[y] == -1:
                    out.add(y)
        return out

    def _try(self, pv: int, hv: int) -> Optional[MinorModel]:
        self.owner[hv] = pv
        self.sets[pv].add(hv)
        got = self._dfs()
        self.sets[pv].remove(hv)
        self.owner[hv] = -1
        return got


def _check_instance(host: ColorfulGraph, pattern: ColorfulGraph, caps: Caps) -> None:
    if host.q != pattern.q:
        raise ValueError(f"q mismatch: host has q={host.q}, pattern q={pattern.q}")
    caps.check_host(host.n, pattern.n)


def find_colorful_minor(host: ColorfulGraph, pattern: ColorfulGraph,
                        caps: Caps = DEFAULT_CAPS) -> Optional[MinorModel]:
    """A model of ``pattern`` as a colorful minor of ``host``, or None."""
    _check_instance(host, pattern, caps)
    return _Engine(host, pattern, ()).run()


def has_colorful_minor(host: ColorfulGraph, pattern: ColorfulGraph,
                       caps: Caps = DEFAULT_CAPS) -> bool:
    return find_colorful_minor(host, pattern, caps) is not None


def find_rooted_minor(host: ColorfulGraph, pattern: ColorfulGraph,
                      host_roots: Sequence[int], pattern_roots: Sequence[int],
                      caps: Caps = DEFAULT_CAPS) -> Optional[MinorModel]:
    """Rooted model: host root i must land in the branch set of pattern root i.

    Root tuples are matched positionally and may repeat vertices on either
    side; two host roots pinned to distinct pattern vertices must be
    distinct host vertices, otherwise no model exists.
    """
    _check_instance(host, pattern, caps)
    if len(host_roots) != len(pattern_roots):
        raise ValueError("root tuples must have equal length")
    for r in host_roots:
        if not 0 <= r < host.n:
            raise ValueError(f"host root {r} out of range")
    for r in pattern_roots:
        if not 0 <= r < pattern.n:
            raise ValueError(f"pattern root {r} out of range")
    pins = tuple(zip(pattern_roots, host_roots))
    return _Engine(host, pattern, pins).run()


# ---------------------------------------------------------------------------
# folios


@dataclass(frozen=True)
class Folio:
    """All rooted colorful minors of detail <= d, up to rooted isomorphism."""

    d: int
    members: tuple[tuple[ColorfulGraph, tuple[int, ...]], ...]

    @property
    def keys(self) -> frozenset:
        return frozenset(canonical_key(g, r) for g, r in self.members)

    def __len__(self) -> int:
        return len(self.members)


def _rooted_edits(g: ColorfulGraph, roots: tuple[int, ...]
                  ) -> Iterator[tuple[ColorfulGraph, tuple[int, ...]]]:
    held = set(roots)
    for v in range(g.n):
        if v in held:
            continue
        yield g.delete_vertex(v), tuple(r - 1 if r > v else r for r in roots)
    for u, v in g.edges:
        yield g.delete_edge(u, v), roots
    for v in range(g.n):
        for c in g.colors_of(v):
            yield g.remove_color(v, c), roots
    for u, v in g.edges:
        lo, hi = (u, v) if u < v else (v, u)
        moved = tuple(lo if r == hi else (r - 1 if r > hi else r) for r in roots)
        yield g.contract(u, v), moved


def compute_d_folio(host: ColorfulGraph, root_vertices: Sequence[int], d: int,
                    caps: Caps = DEFAULT_CAPS) -> Folio:
    """The d-folio of ``host`` rooted at ``root_vertices`` (ascending slots).

    Members are the rooted colorful minors (H, roots) with at most d edges
    and at most d non-root vertices.  Computed as the closure of the host
    under single edits (vertex/edge deletion, color removal, contraction),
    with root slots transferred through contractions and protected from
    deletion, memoized on rooted canonical keys.
    """
    if host.n > 12:
        raise CapExceeded(f"folio host has {host.n} vertices; cap is 12")
    if d > 3:
        raise CapExceeded(f"folio detail {d} exceeds cap 3")
    if d < 0:
        raise ValueError("detail must be non-negative")
    roots = tuple(sorted(root_vertices))
    if len(set(roots)) != len(roots):
        raise ValueError("root vertices must be distinct")
    if len(roots) > 4:
        raise CapExceeded(f"{len(roots)} roots exceeds cap 4")
    for r in roots:
        if not 0 <= r < host.n:
            raise ValueError(f"root vertex {r} out of range")

    seen = {canonical_key(host, roots)}
    queue: list[tuple[ColorfulGraph, tuple[int, ...]]] = [(host, roots)]
    members: dict[tuple, tuple[ColorfulGraph, tuple[int, ...]]] = {}
    while queue:
        g, rr = queue.pop()
        if g.m <= d and g.n - len(set(rr)) <= d:
            members[canonical_key(g, rr)] = canonicalize(g, rr)
        for g2, rr2 in _rooted_edits(g, rr):
            k = canonical_key(g2, rr2)
            if k not in seen:
                seen.add(k)
                queue.append((g2, rr2))
    ordered = tuple(members[k] for k in sorted(members.keys()))
    return Folio(d=d, members=ordered)


def folios_equal(a: Folio, b: Folio) -> bool:
    return a.d == b.d and a.keys == b.keys


def folios_equal_up_to_root_order(a: Folio, b: Folio) -> bool:
    """True if some fixed permutation of root slots maps one folio onto the other.

    Root ordering is part of a folio's identity; whether two orderings give
    interchangeable folios is a question callers sometimes need settled, so
    the check is exposed separately instead of being baked into equality.
    """
    if a.d != b.d or len(a.members) != len(b.members):
        return False
    slots = {len(r) for _, r in a.members} | {len(r) for _, r in b.members}
    if len(slots) > 1:
        return False
    if not slots or slots == {0}:
        return a.keys == b.keys
    t = slots.pop()
    akeys = a.keys
    for perm in permutations(range(t)):
        bkeys = frozenset(
            canonical_key(g, tuple(r[perm[i]] for i in range(t)))
            for g, r in b.members)
        if akeys == bkeys:
            return True
    return False


# ---------------------------------------------------------------------------
# connectors and disjoint connected paths


def _tree_of(host: ColorfulGraph, tree_edges, s: int, t: int
             ) -> tuple[set[int], dict[int, set[int]]]:
    edges = set()
    for e in tree_edges:
        u, v = e
        if not (0 <= u < host.n and 0 <= v < host.n) or u == v:
            raise ValueError(f"bad edge {e}")
        if not host.has_edge(u, v):
            raise ValueError(f"edge {e} is not a host edge")
        edges.add((min(u, v), max(u, v)))
    verts: set[int] = set()
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        verts.add(u)
        verts.add(v)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    if s not in verts or t not in verts:
        raise ValueError("tree must contain both endpoints")
    if len(edges) != len(verts) - 1:
        raise ValueError("edge set is not a tree")
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != verts:
        raise ValueError("edge set is not a tree")
    return verts, adj


def is_sigma_connector(host: ColorfulGraph, tree_edges, s: int, t: int,
                       sigma: Sequence[frozenset[int]],
                       caps: Caps = DEFAULT_CAPS) -> bool:
    """Does this tree connect s to t while collecting ``sigma`` along the way?

    The tree must lie in the host with s and t as leaves.  Writing P for
    the s-t path, there must be internal vertices v_1 < ... < v_p of P (in
    path order) and pairwise disjoint subtrees T_i of T - s - t with
    v_i in T_i and sigma[i] a subset of the colors T_i carries.

    Structural failures (s or t not a leaf, path too short) are False;
    an edge set that is not a tree in the host is a ValueError.
    """
    if s == t:
        raise ValueError("endpoints must differ")
    verts, adj = _tree_of(host, tree_edges, s, t)
    if len(adj.get(s, ())) != 1 or len(adj.get(t, ())) != 1:
        return False
    parent: dict[int, Optional[int]] = {s: None}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])  # type: ignore[index]
    path.reverse()
    interior = path[1:-1]
    p = len(sigma)
    if p == 0:
        return True
    if p > len(interior):
        return False

    # the forest T - s - t, carrying host palettes, tree edges only
    fverts = sorted(verts - {s, t})
    idx = {v: i for i, v in enumerate(fverts)}
    fedges = sorted((idx[u], idx[v]) for u in fverts for v in adj[u]
                    if v in idx and idx[u] < idx[v])
    forest = ColorfulGraph(host.q, tuple(host.palettes[v] for v in fverts),
                           tuple(fedges))
    pattern = ColorfulGraph(
        host.q,
        tuple(sum(1 << (c - 1) for c in S) for S in sigma),
        ())

    for pos in combinations(range(len(interior)), p):
        hr = tuple(idx[interior[i]] for i in pos)
        if find_rooted_minor(forest, pattern, hr, tuple(range(p)), caps):
            return True
    return False


def solve_wcdp(host: ColorfulGraph, pairs: Sequence[tuple[int, int]],
               sigmas: Sequence[Sequence[frozenset[int]]],
               caps: Caps = DEFAULT_CAPS
               ) -> Optional[list[tuple[tuple[int, int], ...]]]:
    """Internally disjoint connector trees, one per terminal pair.

    Tree i must be a sigma_i-connector for (s_i, t_i); two trees may only
    share vertices that are terminals of both their pairs.  Terminals may
    repeat across pairs but not within one (ValueError).  Returns the
    trees' edge sets, or None.

    Decided by a single rooted-minor call: each terminal is split into one
    pinned copy per incident pair, and the pattern is the disjoint union of
    the k connector path patterns (endpoint—collector—...—endpoint).
    """
    k = len(pairs)
    if len(sigmas) != k:
        raise ValueError("need one signature per terminal pair")
    if k == 0:
        return []
    maxj = max(len(sg) for sg in sigmas)
    if k + maxj > 4:
        raise CapExceeded(f"complexity k + max j = {k + maxj} exceeds cap 4")
    if host.n > 14:
        raise CapExceeded(f"host has {host.n} vertices; cap is 14")
    for s, t in pairs:
        if s == t:
            raise ValueError(f"terminal pair ({s},{t}) has equal endpoints")
        for v in (s, t):
            if not 0 <= v < host.n:
                raise ValueError(f"terminal {v} out of range")

    terminals: dict[int, list[int]] = {}
    for i, (s, t) in enumerate(pairs):
        terminals.setdefault(s, []).append(i)
        terminals.setdefault(t, []).append(i)

    # split host: one copy of each terminal per incident pair
    new_id: dict[tuple[int, int], int] = {}   # (host vertex, pair) -> split id
    back: list[int] = []
    for v in range(host.n):
        for i in terminals.get(v, [-1]):
            new_id[(v, i)] = len(back)
            back.append(v)

    def copies(v: int) -> list[int]:
        return [new_id[(v, i)] for i in terminals.get(v, [-1])]

    sedges = set()
    for u, v in host.edges:
        if u in terminals and v in terminals:
            for i in set(terminals[u]) & set(terminals[v]):
                a, b = new_id[(u, i)], new_id[(v, i)]
                sedges.add((min(a, b), max(a, b)))
        else:
            for a in copies(u):
                for b in copies(v):
                    sedges.add((min(a, b), max(a, b)))
    split = ColorfulGraph(host.q, tuple(host.palettes[v] for v in back),
                          tuple(sorted(sedges)))

    # pattern: disjoint union of k path patterns, with pins
    palettes: list[int] = []
    pedges: list[tuple[int, int]] = []
    host_roots: list[int] = []
    pat_roots: list[int] = []
    ends: list[tuple[int, int]] = []  # (pattern s'_i, pattern t'_i)
    for i, (s, t) in enumerate(pairs):
        base = len(palettes)
        chain = [0] + [sum(1 << (c - 1) for c in S) for S in sigmas[i]] + [0]
        palettes.extend(chain)
        for a in range(len(chain) - 1):
            pedges.append((base + a, base + a + 1))
        host_roots.extend((new_id[(s, i)], new_id[(t, i)]))
        pat_roots.extend((base, base + len(chain) - 1))
        ends.append((base, base + len(chain) - 1))
    pattern = ColorfulGraph(host.q, tuple(palettes), tuple(sorted(pedges)))

    wide = Caps(host_vertices=max(caps.host_vertices, split.n),
                host_vertices_small_pattern=caps.host_vertices_small_pattern,
                small_pattern=caps.small_pattern,
                canon_vertices=caps.canon_vertices,
                max_q=caps.max_q, max_models=caps.max_models)
    model = find_rooted_minor(split, pattern, tuple(host_roots),
                              tuple(pat_roots), wide)
    if model is None:
        return None

    # extract one tree per pair: terminal blocks shrink to their entry
    # paths, middle blocks keep whole spanning trees, consecutive blocks
    # are joined by single model edges
    trees: list[tuple[tuple[int, int], ...]] = []
    for i, (s, t) in enumerate(pairs):
        ps, pt = ends[i]
        blocks = [sorted(model.branch_sets[pv]) for pv in range(ps, pt + 1)]
        joins = [_joining_edge(split, blocks[a], blocks[a + 1])
                 for a in range(len(blocks) - 1)]
        edges: set[tuple[int, int]] = set()
        edges.update(joins)
        s_copy, t_copy = new_id[(s, i)], new_id[(t, i)]
        for bi, blk in enumerate(blocks):
            span, par = _block_tree(split, blk, blk[0])
            if bi == 0:
                att = joins[0][0] if joins[0][0] in set(blk) else joins[0][1]
                edges |= _path_edges(par, att, s_copy, split, blk)
            elif bi == len(blocks) - 1:
                att = joins[-1][0] if joins[-1][0] in set(blk) else joins[-1][1]
                edges |= _path_edges(par, att, t_copy, split, blk)
            else:
                edges |= span
        mapped = tuple(sorted(tuple(sorted((back[u], back[v]))) for u, v in edges))
        if not is_sigma_connector(host, mapped, s, t, sigmas[i], caps):
            raise AssertionError("extracted tree failed verification")
        trees.append(mapped)

    vsets = []
    for tr in trees:
        vs: set[int] = set()
        for u, v in tr:
            vs.update((u, v))
        vsets.append(vs)
    for i in range(k):
        for j in range(i + 1, k):
            if not vsets[i] & vsets[j] <= set(pairs[i]) & set(pairs[j]):
                raise AssertionError("extracted trees overlap illegally")
    return trees


def _block_tree(g: ColorfulGraph, block: Sequence[int], root: int
                ) -> tuple[set[tuple[int, int]], dict[int, int]]:
    """BFS spanning tree of the induced connected block: (edges, parent map)."""
    block_set = set(block)
    parent: dict[int, int] = {root: root}
    out: set[tuple[int, int]] = set()
    frontier = [root]
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(g.neighbors(x)):
                if y in block_set and y not in parent:
                    parent[y] = x
                    out.add((min(x, y), max(x, y)))
                    nxt.append(y)
        frontier = nxt
    return out, parent


def _path_edges(parent: dict[int, int], a: int, b: int,
                g: ColorfulGraph, block: Sequence[int]) -> set[tuple[int, int]]:
    """Edges of the tree path between a and b in a rooted spanning tree."""
    up_a = [a]
    while parent[up_a[-1]] != up_a[-1]:
        up_a.append(parent[up_a[-1]])
    up_b = [b]
    while parent[up_b[-1]] != up_b[-1]:
        up_b.append(parent[up_b[-1]])
    in_a = set(up_a)
    meet = next(x for x in up_b if x in in_a)
    out: set[tuple[int, int]] = set()
    for seq in (up_a, up_b):
        for x, y in zip(seq, seq[1:]):
            if x == meet:
                break
            out.add((min(x, y), max(x, y)))
    return out


def _joining_edge(g: ColorfulGraph, a: Sequence[int], b: Sequence[int]
                  ) -> tuple[int, int]:
    bs = set(b)
    for x in sorted(a):
        for y in sorted(g.neighbors(x)):
            if y in bs:
                return (min(x, y), max(x, y))
    raise AssertionError("blocks are not adjacent")
