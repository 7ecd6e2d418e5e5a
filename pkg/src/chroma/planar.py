"""Exact planarity testing (face-embedding method, per biconnected piece).

Small-graph planarity is needed well past the minor engine's search caps
(adding an apex to a 30-vertex grid must still be decidable), so this is
a direct embedding algorithm rather than a K5/K33 exclusion search: embed
a cycle, then repeatedly place a path of some remaining fragment into a
face that contains all of the fragment's attachment vertices, preferring
fragments with a unique admissible face.  A fragment with no admissible
face certifies non-planarity.  Faces are kept as vertex cycles, which is
sound because every face of an embedded 2-connected graph is a cycle.
"""

from __future__ import annotations

from .core import ColorfulGraph


def is_planar(g: ColorfulGraph | tuple[int, tuple[tuple[int, int], ...]]) -> bool:
    if isinstance(g, ColorfulGraph):
        n, edges = g.n, g.edges
    else:
        n, edges = g
    if n <= 4:
        return True
    if len(edges) > 3 * n - 6:
        return False
    for comp_edges in _biconnected(n, edges):
        if not _planar_biconnected(comp_edges):
            return False
    return True


def _biconnected(n: int, edges) -> list[list[tuple[int, int]]]:
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out: list[list[tuple[int, int]]] = []
    timer = [0]

    def dfs(root: int) -> None:
        # iterative lowpoint DFS collecting biconnected edge groups
        work = [(root, -1, iter(sorted(adj[root])))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    stack.append((v, w))
                    disc[w] = low[w] = timer[0]
                    timer[0] += 1
                    work.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    comp = []
                    while stack and stack[-1] != (p, v):
                        comp.append(stack.pop())
                    if stack:
                        comp.append(stack.pop())
                    if comp:
                        out.append(comp)

    for v in range(n):
        if v not in disc and adj[v]:
            dfs(v)
    return out


def _planar_biconnected(comp_edges: list[tuple[int, int]]) -> bool:
    edges = {frozenset(e) for e in comp_edges}
    verts = sorted({v for e in edges for v in e})
    n = len(verts)
    if n <= 4:
        return True
    if len(edges) > 3 * n - 6:
        return False
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)

    cycle = _some_cycle(adj)
    if cycle is None:
        return True  # a single edge slipped through; trees are planar
    emb_v = set(cycle)
    emb_e = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)]))
             for i in range(len(cycle))}
    faces: list[list[int]] = [list(cycle), list(reversed(cycle))]

    while emb_e != edges:
        fragments = _fragments(adj, edges, emb_v, emb_e)
        chosen = None
        chosen_face = None
        for frag in fragments:
            att, _ = frag
            admissible = [f for f in faces if att <= set(f)]
            if not admissible:
                return False
            if len(admissible) == 1:
                chosen, chosen_face = frag, admissible[0]
                break
            if chosen is None:
                chosen, chosen_face = frag, admissible[0]
        assert chosen is not None and chosen_face is not None
        path = _alpha_path(adj, emb_v, chosen)
        for x, y in zip(path, path[1:]):
            emb_e.add(frozenset((x, y)))
        emb_v.update(path)
        faces.remove(chosen_face)
        a, b = path[0], path[-1]
        ia = chosen_face.index(a)
        fr = chosen_face[ia:] + chosen_face[:ia]
        ib = fr.index(b)
        interior = path[1:-1]
        faces.append(fr[:ib + 1] + list(reversed(interior)))
        faces.append(fr[ib:] + [a] + interior)
    return True


def _some_cycle(adj: dict[int, set[int]]):
    """Fundamental cycle of the first non-tree edge over a BFS tree."""
    start = min(adj)
    parent: dict[int, int | None] = {start: None}
    depth = {start: 0}
    queue = [start]
    while queue:
        nxt = []
        for v in queue:
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    nxt.append(w)
        queue = nxt
    for u in sorted(adj):
        for v in sorted(adj[u]):
            if u < v and parent.get(u) != v and parent.get(v) != u:
                pu, pv = [u], [v]
                a, b = u, v
                while depth[a] > depth[b]:
                    a = parent[a]
                    pu.append(a)
                while depth[b] > depth[a]:
                    b = parent[b]
                    pv.append(b)
                while a != b:
                    a = parent[a]
                    pu.append(a)
                    b = parent[b]
                    pv.append(b)
                return pu + list(reversed(pv[:-1]))
    return None


def _fragments(adj, edges, emb_v, emb_e):
    """(attachments, core-vertices) per fragment, deterministic order."""
    out = []
    for e in sorted(edges - emb_e, key=sorted):
        u, v = sorted(e)
        if u in emb_v and v in emb_v:
            out.append((frozenset((u, v)), frozenset()))
    rest = sorted(set(adj) - emb_v)
    seen: set[int] = set()
    for v0 in rest:
        if v0 in seen:
            continue
        comp = {v0}
        stack = [v0]
        seen.add(v0)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in emb_v and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        att = frozenset(y for x in comp for y in adj[x] if y in emb_v)
        out.append((att, frozenset(comp)))
    return out


def _alpha_path(adj, emb_v, frag):
    att, core = frag
    if not core:
        return sorted(att)
    a = min(att)
    # BFS from a through the fragment core to any other attachment
    parent = {a: None}
    queue = [a]
    while queue:
        nxt = []
        for x in queue:
            for y in sorted(adj[x]):
                if y in parent:
                    continue
                if y in core:
                    parent[y] = x
                    nxt.append(y)
                elif y in att and y != a and x != a:
                    parent[y] = x
                    path = [y]
                    while path[-1] is not None:
                        path.append(parent[path[-1]])
                    path.pop()
                    path.reverse()
                    return path
        queue = nxt
    raise AssertionError("fragment has fewer than two attachments")
