"""Menger linkages / separators and the multicolor linkage dichotomy.

Unit vertex capacities are realized by splitting each vertex into an
in/out pair; augmenting-path max-flow then yields either k disjoint paths
(decomposed from the flow and trimmed so a path meets its own source set
and the target set only at its ends) or a separator smaller than k.  The
separator is re-extracted from a secondary-weighted flow so that, among
minimum cuts, one avoiding X ∪ Y is preferred — P₃ with ends as X and Y
reports the middle vertex, not an endpoint.

The multicolor variant attaches k fresh twin vertices to each source set
and runs the same flow from all fresh vertices at once.  Because twins
are never cut partially by a reachability min-cut, every source set
either keeps all its fresh vertices (so it is fully separated from the
target) or loses all k of them; with total cut size below k·ℓ at least
one set survives, giving the dichotomy's nonempty index set I.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .core import ColorfulGraph


@dataclass(frozen=True)
class Linkage:
    """Vertex-disjoint paths, each tagged with its source-set index."""

    paths: tuple[tuple[int, tuple[int, ...]], ...]

    def order(self) -> int:
        return len(self.paths)

    def vertices(self) -> frozenset[int]:
        return frozenset(v for _, p in self.paths for v in p)


@dataclass(frozen=True)
class SeparatorResult:
    I: frozenset[int]
    S: frozenset[int]


# ----------------------------------------------------------- flow core

class _Flow:
    """Tiny augmenting-path max-flow on an explicit arc list."""

    def __init__(self, n_nodes: int) -> None:
        self.n = n_nodes
        self.head: list[list[int]] = [[] for _ in range(n_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def arc(self, u: int, v: int, c: int) -> int:
        i = len(self.to)
        self.to.append(v)
        self.cap.append(c)
        self.head[u].append(i)
        self.to.append(u)
        self.cap.append(0)
        self.head[v].append(i + 1)
        return i

    def augment(self, s: int, t: int) -> int:
        prev: list[Optional[int]] = [None] * self.n
        prev[s] = -1
        dq = deque([s])
        while dq:
            x = dq.popleft()
            if x == t:
                break
            for i in self.head[x]:
                y = self.to[i]
                if self.cap[i] > 0 and prev[y] is None:
                    prev[y] = i
                    dq.append(y)
        if prev[t] is None:
            return 0
        push = None
        x = t
        while x != s:
            i = prev[x]
            push = self.cap[i] if push is None else min(push, self.cap[i])
            x = self.to[i ^ 1]
        x = t
        while x != s:
            i = prev[x]
            self.cap[i] -= push
            self.cap[i ^ 1] += push
            x = self.to[i ^ 1]
        return push

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for i in self.head[x]:
                y = self.to[i]
                if self.cap[i] > 0 and y not in seen:
                    seen.add(y)
                    dq.append(y)
        return seen

    def flow_on(self, i: int) -> int:
        return self.cap[i ^ 1]


def _split_flow(g: ColorfulGraph, extra_nodes: int = 0):
    """Vertex-split network: node 2v = v_in, 2v+1 = v_out; then
    `extra_nodes` plain slots, then source and sink."""
    base = 2 * g.n + extra_nodes
    f = _Flow(base + 2)
    split = [f.arc(2 * v, 2 * v + 1, 1) for v in range(g.n)]
    big = 2 * g.n + extra_nodes + 10
    for u, v in g.edges:
        f.arc(2 * u + 1, 2 * v, big)
        f.arc(2 * v + 1, 2 * u, big)
    return f, split, base, base + 1, big


def _decompose(f: _Flow, g: ColorfulGraph, starts: Iterable[int],
               sink_credit: dict[int, int]) -> list[list[int]]:
    """Walk unit flow from each flowing start vertex to a vertex whose
    sink arc carries flow, consuming arcs.  Returns host-vertex paths.
    Unit vertex capacity makes through-flow and sink-flow exclusive, so
    stopping on available sink credit is unambiguous."""
    use: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        for i in f.head[2 * u + 1]:
            y = f.to[i]
            if i % 2 == 0 and y % 2 == 0 and y < 2 * g.n and y != 2 * u:
                fl = f.flow_on(i)
                if fl > 0:
                    use[(u, y // 2)] = use.get((u, y // 2), 0) + fl
    out = []
    for x in starts:
        path = [x]
        cur = x
        while not sink_credit.get(cur, 0):
            nxt = None
            for w in sorted(g.neighbors(cur)):
                if use.get((cur, w), 0) > 0:
                    nxt = w
                    break
            assert nxt is not None, "flow conservation broken"
            use[(cur, nxt)] -= 1
            path.append(nxt)
            cur = nxt
        sink_credit[cur] -= 1
        out.append(path)
    return out


def _pretty_cut(g: ColorfulGraph, X: frozenset[int], Y: frozenset[int],
                avoid: frozenset[int], expect: int) -> frozenset[int]:
    """Minimum X–Y vertex cut of size `expect`, chosen among minimum cuts
    to use as few X ∪ Y vertices as possible (and `avoid` vertices least
    of all).  Split-arc weights N / N+1 / N+2 with N beyond any possible
    secondary total make the weighted min cut lexicographic."""
    N = 2 * g.n + 3
    f = _Flow(2 * g.n + 2)
    s, t = 2 * g.n, 2 * g.n + 1
    big = N * (g.n + 2)
    for v in range(g.n):
        w = N + 2 if v in avoid else (N + 1 if v in X or v in Y else N)
        f.arc(2 * v, 2 * v + 1, w)
    for u, v in g.edges:
        f.arc(2 * u + 1, 2 * v, big)
        f.arc(2 * v + 1, 2 * u, big)
    for x in sorted(X):
        f.arc(s, 2 * x, big)
    for y in sorted(Y):
        f.arc(2 * y + 1, t, big)
    while f.augment(s, t):
        pass
    reach = f.reachable(s)
    cut = frozenset(v for v in range(g.n)
                    if 2 * v in reach and 2 * v + 1 not in reach)
    assert len(cut) == expect, "weighted cut must keep minimum cardinality"
    return cut


def _trim(path: list[int], X: frozenset[int], Y: frozenset[int]) -> tuple[int, ...]:
    last_x = max(i for i, v in enumerate(path) if v in X)
    first_y = next(i for i in range(last_x, len(path)) if path[i] in Y)
    return tuple(path[last_x:first_y + 1])


# --------------------------------------------------------------- menger

def menger(g: ColorfulGraph, X: Iterable[int], Y: Iterable[int],
           k: int) -> Union[Linkage, frozenset[int]]:
    """A verified X–Y linkage of order k, or an X–Y separator of size
    smaller than k.  Vertices in X ∩ Y become zero-length paths first."""
    if k < 1:
        raise ValueError("k must be at least 1")
    X = frozenset(X)
    Y = frozenset(Y)
    if not all(0 <= v < g.n for v in X | Y):
        raise ValueError("X and Y must be vertex subsets")
    trivial = sorted(X & Y)
    if len(trivial) >= k:
        return Linkage(tuple((0, (v,)) for v in trivial[:k]))
    live = sorted(set(range(g.n)) - set(trivial))
    sub = g.subgraph(live)
    back = {i: v for i, v in enumerate(live)}
    fwd = {v: i for i, v in enumerate(live)}
    k2 = k - len(trivial)
    res = _menger_core(sub, frozenset(fwd[v] for v in X if v in fwd),
                       frozenset(fwd[v] for v in Y if v in fwd), k2)
    if isinstance(res, frozenset):
        return frozenset(trivial) | frozenset(back[v] for v in res)
    paths = tuple((0, (v,)) for v in trivial) + tuple(
        (0, tuple(back[v] for v in p)) for _, p in res.paths)
    return Linkage(paths)


def _menger_core(g: ColorfulGraph, X: frozenset[int], Y: frozenset[int],
                 k: int) -> Union[Linkage, frozenset[int]]:
    assert not (X & Y)
    f, split, s, t, big = _split_flow(g)
    for x in sorted(X):
        f.arc(s, 2 * x, big)
    sink_arc = {y: f.arc(2 * y + 1, t, big) for y in sorted(Y)}
    got = 0
    while got < k and f.augment(s, t):
        got += 1
    if got < k:
        return _pretty_cut(g, X, Y, frozenset(), got)
    starts = [x for x in sorted(X) if f.flow_on(split[x]) > 0]
    credit = {y: f.flow_on(i) for y, i in sink_arc.items()}
    raw = _decompose(f, g, starts, credit)
    paths = tuple((0, _trim(p, X, Y)) for p in raw)
    return Linkage(paths)


# ----------------------------------------------------------- multicolor

def multicolor_linkage(g: ColorfulGraph, sources: Sequence[Iterable[int]],
                       Y: Iterable[int],
                       k: int) -> Union[Linkage, SeparatorResult]:
    """Either a linkage with an X_i–Y sub-linkage of order k for every
    source set (order k·ℓ total), or SeparatorResult(I, S) with I the
    nonempty set of indices fully separated from Y by S, |S| < k·ℓ."""
    if k < 1 or not sources:
        raise ValueError("need k >= 1 and at least one source set")
    srcs = [frozenset(s) for s in sources]
    Y = frozenset(Y)
    ell = len(srcs)
    if not all(0 <= v < g.n for s in srcs for v in s) or \
            not all(0 <= v < g.n for v in Y):
        raise ValueError("sources and Y must be vertex subsets")

    # auxiliary graph: k fresh twins per source set, attached to it
    fresh_edges = []
    owner_of_fresh = {}
    nid = g.n
    for i, s in enumerate(srcs):
        for _ in range(k):
            for x in sorted(s):
                fresh_edges.append((x, nid))
            owner_of_fresh[nid] = i
            nid += 1
    aux = ColorfulGraph(g.q, g.palettes + (0,) * (nid - g.n),
                        g.edges + tuple(sorted(fresh_edges)))
    Z = frozenset(owner_of_fresh)

    f, split, s_node, t_node, big = _split_flow(aux)
    for z in sorted(Z):
        f.arc(s_node, 2 * z, big)
    sink_arc = {y: f.arc(2 * y + 1, t_node, big) for y in sorted(Y)}
    need = k * ell
    got = 0
    while got < need and f.augment(s_node, t_node):
        got += 1
    if got < need:
        cut = _pretty_cut(aux, Z, Y, Z, got)
        I = frozenset(i for i in range(ell)
                      if not any(owner_of_fresh[z] == i for z in cut & Z))
        assert I, "cut smaller than k*l must spare some source's twins"
        return SeparatorResult(I, cut - Z)
    starts = [z for z in sorted(Z) if f.flow_on(split[z]) > 0]
    credit = {y: f.flow_on(i) for y, i in sink_arc.items()}
    raw = _decompose(f, aux, starts, credit)
    paths = []
    for p in raw:
        i = owner_of_fresh[p[0]]
        paths.append((i, _trim(p[1:], srcs[i], Y)))
    paths.sort(key=lambda ip: (ip[0], ip[1]))
    return Linkage(tuple(paths))


# ------------------------------------------------------------- checkers

def verify_linkage(g: ColorfulGraph, link: Linkage,
                   sources: Sequence[Iterable[int]], Y: Iterable[int],
                   per_source: Optional[int] = None) -> bool:
    """Independent validity check: disjoint real paths, endpoints in the
    right sets, internal vertices avoiding the path's own ends' sets."""
    srcs = [frozenset(s) for s in sources]
    Y = frozenset(Y)
    used: set[int] = set()
    counts = [0] * len(srcs)
    for tag, p in link.paths:
        if not p or not (0 <= tag < len(srcs)):
            return False
        if p[0] not in srcs[tag] or p[-1] not in Y:
            return False
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
        if len(set(p)) != len(p):
            return False
        for v in p[1:-1]:
            if v in srcs[tag] or v in Y:
                return False
        if used & set(p):
            return False
        used |= set(p)
        counts[tag] += 1
    if per_source is not None and any(c < per_source for c in counts):
        return False
    return True


def verify_separator(g: ColorfulGraph, I: Iterable[int],
                     S: Iterable[int], sources: Sequence[Iterable[int]],
                     Y: Iterable[int]) -> bool:
    """No component of g - S contains both a ⋃_{i∈I} X_i vertex and a
    Y vertex; I nonempty."""
    I = frozenset(I)
    if not I:
        return False
    S = frozenset(S)
    pool = frozenset().union(*(frozenset(sources[i]) for i in I)) - S
    Yv = frozenset(Y) - S
    if pool & Yv:
        return False
    live = sorted(set(range(g.n)) - S)
    sub = g.subgraph(live)
    back = {i: v for i, v in enumerate(live)}
    for comp in sub.components():
        old = {back[v] for v in comp}
        if old & pool and old & Yv:
            return False
    return True
