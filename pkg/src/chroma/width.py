"""Torsos, tree-decomposition validation, and exact width parameters.

Everything here is exact and desk-scale: treewidth by elimination-order
search over vertex subsets (decision per width threshold, so small widths
stay cheap), restrictive treewidth by enumerating candidate apex sets X in
increasing width with validity-first pruning, and the minor-based
parameters (rainbow Hadwiger, bidimensionality, segregated bidimensional
size) by growing the pattern until the engine says no.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .core import CapExceeded, Caps, ColorfulGraph, complete_graph, popcount
from .minor import has_colorful_minor

_TW_CAP = 16


# ----------------------------------------------------------------- torso

def torso(g: ColorfulGraph, X: Iterable[int]) -> ColorfulGraph:
    """g[X] plus, for every component J of g - X, a clique on N(J) ∩ X.
    Vertices are relabeled in sorted-X order; palettes carry over."""
    xs = sorted(set(X))
    if not all(0 <= v < g.n for v in xs):
        raise ValueError("X is not a vertex subset")
    pos = {v: i for i, v in enumerate(xs)}
    inx = set(xs)
    edges = {(pos[u], pos[v]) for u, v in g.edges if u in inx and v in inx}
    seen: set[int] = set()
    for v0 in range(g.n):
        if v0 in inx or v0 in seen:
            continue
        comp = {v0}
        stack = [v0]
        seen.add(v0)
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in inx and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        att = sorted({y for x in comp for y in g.neighbors(x) if y in inx})
        for i, a in enumerate(att):
            for b in att[i + 1:]:
                edges.add((pos[a], pos[b]))
    pal = tuple(g.palettes[v] for v in xs)
    return ColorfulGraph(g.q, pal, tuple(sorted(edges)))


# ----------------------------------------------- decomposition structures

@dataclass(frozen=True)
class TreeDecomposition:
    nodes: tuple
    edges: tuple[tuple, ...]
    bags: Mapping
    root: Optional[object] = None
    leaves: frozenset = field(default_factory=frozenset)

    def bag(self, t) -> frozenset:
        return frozenset(self.bags[t])

    def neighbors_of(self, t) -> list:
        out = []
        for a, b in self.edges:
            if a == t:
                out.append(b)
            elif b == t:
                out.append(a)
        return out


def decomposition_from_json(obj) -> TreeDecomposition:
    """Sidecar format: {"nodes": [...], "edges": [[a,b],...],
    "bags": {node: [v,...]}, "root": optional, "leaves": [...]}."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    nodes = tuple(obj["nodes"])
    bags = {}
    for k, vs in obj["bags"].items():
        key = k
        if key not in nodes:
            try:
                key = int(k)
            except (TypeError, ValueError):
                pass
        bags[key] = frozenset(vs)
    return TreeDecomposition(
        nodes=nodes,
        edges=tuple(tuple(e) for e in obj.get("edges", ())),
        bags=bags,
        root=obj.get("root"),
        leaves=frozenset(obj.get("leaves", ())),
    )


@dataclass(frozen=True)
class DecompositionReport:
    valid: bool
    width: int
    adhesion: int
    problems: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {"valid": self.valid, "width": self.width,
                "adhesion": self.adhesion, "problems": list(self.problems)}


def validate_decomposition(g: ColorfulGraph,
                           d: TreeDecomposition) -> DecompositionReport:
    problems: list[str] = []
    nodes = list(d.nodes)
    if not nodes:
        if g.n == 0:
            return DecompositionReport(True, -1, 0)
        return DecompositionReport(False, -1, 0, ("no tree nodes",))
    for t in nodes:
        if t not in d.bags:
            problems.append(f"node {t!r} has no bag")
    if problems:
        return DecompositionReport(False, -1, 0, tuple(problems))

    # the tree must be a tree
    adj: dict = {t: set() for t in nodes}
    structural = False
    for a, b in d.edges:
        if a not in adj or b not in adj:
            problems.append(f"tree edge ({a!r},{b!r}) uses unknown node")
            structural = True
            continue
        adj[a].add(b)
        adj[b].add(a)
    if len(d.edges) != len(nodes) - 1:
        problems.append("tree edge count is not nodes - 1")
        structural = True
    if not structural:
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(nodes):
            problems.append("tree is disconnected")

    covered = set()
    for t in nodes:
        covered |= d.bag(t)
    for v in range(g.n):
        if v not in covered:
            problems.append(f"vertex {v} in no bag")
    for u, v in g.edges:
        if not any(u in d.bag(t) and v in d.bag(t) for t in nodes):
            problems.append(f"edge ({u},{v}) in no bag")
    for v in range(g.n):
        holders = [t for t in nodes if v in d.bag(t)]
        if len(holders) <= 1:
            continue
        hset = set(holders)
        seen = {holders[0]}
        stack = [holders[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in hset and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(holders):
            problems.append(f"vertex {v} has a disconnected bag trace")

    width = max((len(d.bag(t)) for t in nodes), default=0) - 1
    adhesion = max((len(d.bag(a) & d.bag(b)) for a, b in d.edges), default=0)
    return DecompositionReport(not problems, width, adhesion, tuple(problems))


def colorful_torso(g: ColorfulGraph, d: TreeDecomposition,
                   t) -> ColorfulGraph:
    """The torso of g at tree node t: g[β(t)] with every adhesion set
    cliqued, and every adhesion vertex's palette augmented by the colors
    appearing beyond that adhesion (in bags of the far subtree, off β(t))."""
    rep = validate_decomposition(g, d)
    if not rep.valid:
        raise ValueError(f"invalid decomposition: {rep.problems[0]}")
    bt = sorted(d.bag(t))
    pos = {v: i for i, v in enumerate(bt)}
    edges = {(pos[u], pos[v]) for u, v in g.edges
             if u in pos and v in pos}
    pal = [g.palettes[v] for v in bt]
    for nb in d.neighbors_of(t):
        # nodes on nb's side of the tree edge (t, nb)
        side = {nb}
        stack = [nb]
        while stack:
            x = stack.pop()
            for y in d.neighbors_of(x):
                if y != t and y not in side:
                    side.add(y)
                    stack.append(y)
        beyond: set[int] = set()
        for h in side:
            beyond |= d.bag(h)
        beyond -= d.bag(t)
        extra = 0
        for v in beyond:
            extra |= g.palettes[v]
        adhesion = sorted(d.bag(nb) & d.bag(t))
        for i, a in enumerate(adhesion):
            pal[pos[a]] |= extra
            for b in adhesion[i + 1:]:
                edges.add((pos[a], pos[b]))
    return ColorfulGraph(g.q, tuple(pal), tuple(sorted(edges)))


def validate_restricted_leaf_decomposition(g: ColorfulGraph,
                                           d: TreeDecomposition,
                                           L: Iterable, s: int) -> bool:
    """Adhesion and bag sizes at most s, and each tagged leaf's private
    part (its bag minus the neighbor's) induces a restricted graph."""
    rep = validate_decomposition(g, d)
    if not rep.valid:
        return False
    if any(len(d.bag(t)) > s for t in d.nodes):
        return False
    if rep.adhesion > s:
        return False
    for leaf in L:
        nbs = d.neighbors_of(leaf)
        if len(nbs) != 1:
            return False
        private = d.bag(leaf) - d.bag(nbs[0])
        if not g.subgraph(sorted(private)).is_restricted():
            return False
    return True


# ---------------------------------------------------------- treewidth DP

def _nbr_masks(g: ColorfulGraph) -> list[int]:
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _elim_reach(nbrs: list[int], v: int, elim: int) -> int:
    """Mask of non-eliminated vertices reachable from v via eliminated
    ones (v's fill-degree support when eliminated after `elim`)."""
    seen = nbrs[v]
    frontier = seen & elim
    while frontier:
        b = frontier & -frontier
        frontier &= frontier - 1
        i = b.bit_length() - 1
        new = nbrs[i] & ~seen
        seen |= new
        frontier |= new & elim
    return seen & ~elim & ~(1 << v)


def _tw_at_most(nbrs: list[int], n: int, t: int) -> bool:
    if n == 0:
        return True
    if t >= n - 1:
        return True
    full = (1 << n) - 1
    failed: set[int] = set()

    def rec(elim: int) -> bool:
        if elim == full:
            return True
        if elim in failed:
            return False
        for v in range(n):
            if elim >> v & 1:
                continue
            if popcount(_elim_reach(nbrs, v, elim)) <= t:
                if rec(elim | (1 << v)):
                    return True
        failed.add(elim)
        return False

    return rec(0)


def treewidth_exact(g: ColorfulGraph) -> int:
    """Exact treewidth; -1 for the empty graph."""
    if g.n > _TW_CAP:
        raise CapExceeded(f"{g.n} vertices exceeds treewidth cap {_TW_CAP}")
    if g.n == 0:
        return -1
    nbrs = _nbr_masks(g)
    t = 0
    while not _tw_at_most(nbrs, g.n, t):
        t += 1
    return t


def hadwiger_number(g: ColorfulGraph, caps: Caps = Caps()) -> int:
    """Largest k with a K_k minor in the underlying graph."""
    u = g.uncolored()
    k = 0
    while k < u.n and has_colorful_minor(u, complete_graph(k + 1), caps=caps):
        k += 1
    return k


# ----------------------------------------------------------------- rtw

def rtw_exact(g: ColorfulGraph) -> tuple[int, frozenset[int]]:
    """Minimum over X ⊆ V with every component of g - X restricted of
    tw(torso(g, X)), together with a witness X.  Searched by increasing
    width target, subsets in increasing size, invalid X pruned first."""
    if g.n > _TW_CAP:
        raise CapExceeded(f"{g.n} vertices exceeds rtw cap {_TW_CAP}")
    n = g.n
    if n == 0:
        return -1, frozenset()
    nbrs = _nbr_masks(g)
    fullq = (1 << g.q) - 1
    full = (1 << n) - 1

    def valid(xmask: int) -> bool:
        rest = full & ~xmask
        while rest:
            b = rest & -rest
            comp = b
            frontier = b
            while frontier:
                nxt = 0
                while frontier:
                    lb = frontier & -frontier
                    frontier &= frontier - 1
                    nxt |= nbrs[lb.bit_length() - 1]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            mask = 0
            scan = comp
            while scan:
                lb = scan & -scan
                scan &= scan - 1
                mask |= g.palettes[lb.bit_length() - 1]
            if mask == fullq:
                return False
            rest &= ~comp
        return True

    order = sorted(range(1 << n), key=lambda m: (popcount(m), m))
    validity: dict[int, bool] = {}
    torso_cache: dict[int, tuple[list[int], int]] = {}
    tw_full = treewidth_exact(g)
    for w in range(-1, n):
        for xmask in order:
            ok = validity.get(xmask)
            if ok is None:
                ok = validity[xmask] = valid(xmask)
            if not ok:
                continue
            cached = torso_cache.get(xmask)
            if cached is None:
                tor = torso(g, [v for v in range(n) if xmask >> v & 1])
                cached = torso_cache[xmask] = (_nbr_masks(tor), tor.n)
            if _tw_at_most(cached[0], cached[1], w):
                assert w <= tw_full
                return w, frozenset(v for v in range(n) if xmask >> v & 1)
    raise AssertionError("X = V is always valid")  # pragma: no cover


# -------------------------------------------------- minor-based widths

def rainbow_hadwiger(g: ColorfulGraph, caps: Caps = Caps()) -> int:
    """Max k with the rainbow q-colorful K_k as a colorful minor of g."""
    from .families import rainbow

    k = 0
    while k < g.n:
        pat = rainbow(g.q, complete_graph(k + 1, g.q))
        if not has_colorful_minor(g, pat, caps=caps):
            break
        k += 1
    return k


def srh(g: ColorfulGraph, caps: Caps = Caps()) -> int:
    """Simplified rainbow Hadwiger: rh of the fusion (palettes collapsed
    to a single color)."""
    return rainbow_hadwiger(g.fusion(), caps=caps)


def bidimensionality(g: ColorfulGraph, X: Iterable[int],
                     caps: Caps = Caps()) -> int:
    """Max k with the fully colored k-by-k grid a colorful minor of g
    carrying color 1 exactly on X."""
    from .families import make_grid, rainbow

    xs = set(X)
    if not all(0 <= v < g.n for v in xs):
        raise ValueError("X is not a vertex subset")
    pal = tuple(1 if v in xs else 0 for v in range(g.n))
    host = ColorfulGraph(1, pal, g.edges)
    k = 0
    while (k + 1) ** 2 <= g.n:
        pat = rainbow(1, make_grid(k + 1, k + 1))
        if not has_colorful_minor(host, pat, caps=caps):
            break
        k += 1
    return k


def sbsg(g: ColorfulGraph, caps: Caps = Caps()) -> int:
    """Max k with the (1,k)-segregated grid a colorful minor of the
    fusion of g."""
    from .families import segregated_grid

    host = g.fusion()
    k = 0
    while (k + 1) ** 2 <= g.n:
        pat = segregated_grid(1, k + 1)
        if not has_colorful_minor(host, pat, caps=caps):
            break
        k += 1
    return k


# ------------------------------------------------------------ star width

@dataclass(frozen=True)
class StarDecomposition:
    center: frozenset
    leaves: tuple[frozenset, ...]


def star_decomposition_from_json(obj) -> StarDecomposition:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return StarDecomposition(frozenset(obj["center"]),
                             tuple(frozenset(l) for l in obj.get("leaves", ())))


def _star_as_tree(s: StarDecomposition) -> TreeDecomposition:
    nodes = ("center",) + tuple(f"leaf{i}" for i in range(len(s.leaves)))
    edges = tuple(("center", f"leaf{i}") for i in range(len(s.leaves)))
    bags = {"center": s.center}
    for i, l in enumerate(s.leaves):
        bags[f"leaf{i}"] = l
    return TreeDecomposition(nodes, edges, bags, root="center")


def validate_star_decomposition(g: ColorfulGraph,
                                s: StarDecomposition) -> DecompositionReport:
    rep = validate_decomposition(g, _star_as_tree(s))
    problems = list(rep.problems)
    for v in range(g.n):
        if g.palettes[v] and v not in s.center:
            problems.append(f"colored vertex {v} outside the center bag")
    for i, l in enumerate(s.leaves):
        private = sorted(l - s.center)
        if private and not g.subgraph(private).is_connected():
            problems.append(f"leaf {i} private part disconnected")
    return DecompositionReport(not problems, rep.width, rep.adhesion,
                               tuple(problems))


def star_p_width(g: ColorfulGraph, s: StarDecomposition,
                 parameter: str = "tw", caps: Caps = Caps()) -> int:
    """max of p(torso(g, center)) and the center-intersections of the
    leaves, for p ∈ {tw, hw}."""
    rep = validate_star_decomposition(g, s)
    if not rep.valid:
        raise ValueError(f"invalid star decomposition: {rep.problems[0]}")
    tor = torso(g, s.center)
    if parameter == "tw":
        p = treewidth_exact(tor)
    elif parameter == "hw":
        p = hadwiger_number(tor, caps=caps)
    else:
        raise ValueError(f"unknown parameter {parameter!r}")
    vals = [p] + [len(l & s.center) for l in s.leaves]
    return max(vals)
