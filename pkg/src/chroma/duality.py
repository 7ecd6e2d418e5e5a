"""Exact packing and covering numbers, and constructive packings in
segregated grids.

Both optima are computed over the family of inclusion-minimal
model-bearing vertex sets: any model contains a minimal one, so the
maximum number of disjoint models equals the maximum set packing of the
family, and a set meets every model iff it hits every minimal member.
The family is enumerated with a hitting-set tree (branch on the vertices
of each newly found minimal set), so the engine only ever searches
vertex-deleted hosts instead of all 2^n induced subgraphs.

Packings of a small segregated grid inside a big one bypass the engine
entirely: branch sets are written down by index formulas (horizontal
bands for one color block, nested staples for two, interleaved
row/column bands for three or more, where pairwise disjointness is
impossible and every cell lands in at most two witnesses) and checked by
the cap-free model verifier.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Caps, CapExceeded, ColorfulGraph, DEFAULT_CAPS
from .families import SegregatedSpec, grid_vertex, segregated_grid
from .minor import MinorModel, find_colorful_minor, model_violations


# ------------------------------------------------------- minimal models

def _minimalize(host: ColorfulGraph, pattern: ColorfulGraph,
                vertices: frozenset[int], caps: Caps) -> frozenset[int]:
    """Shrink a model-bearing vertex set to an inclusion-minimal one by
    greedy deletion (descending ids, so the result is deterministic)."""
    keep = set(vertices)
    for v in sorted(vertices, reverse=True):
        trial = sorted(keep - {v})
        if find_colorful_minor(host.subgraph(trial), pattern, caps):
            keep.remove(v)
    return frozenset(keep)


def enumerate_minimal_models(host: ColorfulGraph, pattern: ColorfulGraph,
                             caps: Caps = DEFAULT_CAPS
                             ) -> list[frozenset[int]]:
    """All inclusion-minimal U ⊆ V(host) whose induced subgraph contains
    the pattern as colorful minor, in (size, lexicographic) order.

    Hitting-set tree: each node is a set X of excluded vertices; a model
    found in host − X is minimalized and its vertices become the branch
    directions.  Any undiscovered minimal set avoids some branch of every
    discovered one, so the walk finds them all.  Raises CapExceeded once
    the family grows past ``caps.max_models``.

    A disconnected pattern factors: every minimal set is a disjoint union
    of per-component minimal sets, so those families are enumerated
    separately and recombined, which is far cheaper than walking the
    product space.
    """
    caps.check_host(host.n, pattern.n)
    comps = pattern.components()
    if len(comps) > 1:
        return _combine_components(host, pattern, comps, caps)
    found: list[frozenset[int]] = []
    seen = {frozenset()}
    queue: deque[frozenset[int]] = deque([frozenset()])
    while queue:
        x = queue.popleft()
        label = next((m for m in found if not (m & x)), None)
        if label is None:
            live = sorted(set(range(host.n)) - x)
            back = {i: v for i, v in enumerate(live)}
            got = find_colorful_minor(host.subgraph(live), pattern, caps)
            if got is None:
                continue
            hit = frozenset(back[v] for bs in got.branch_sets for v in bs)
            label = _minimalize(host, pattern, hit, caps)
            found.append(label)
            if len(found) > caps.max_models:
                raise CapExceeded(
                    f"more than {caps.max_models} minimal models; "
                    "raise Caps.max_models to keep the enumeration exact")
        for v in sorted(label):
            child = x | {v}
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return sorted(found, key=lambda m: (len(m), sorted(m)))


def _combine_components(host: ColorfulGraph, pattern: ColorfulGraph,
                        comps: list[tuple[int, ...]],
                        caps: Caps) -> list[frozenset[int]]:
    """Minimal model-bearing sets for a disconnected pattern: disjoint
    unions of the per-component minimal sets, pruned to the inclusion-
    minimal ones (a strictly smaller bearing set would itself contain
    such a union, so nothing is missed)."""
    families = [enumerate_minimal_models(host, pattern.subgraph(list(c)),
                                         caps) for c in comps]
    unions: set[frozenset[int]] = set()
    partial: list[frozenset[int]] = [frozenset()]
    for fam in families:
        nxt = []
        for acc in partial:
            for m in fam:
                if not (acc & m):
                    nxt.append(acc | m)
        partial = nxt
        if len(partial) > 40 * caps.max_models:
            raise CapExceeded("component combination exceeds the model cap")
    unions = set(partial)
    ordered = sorted(unions, key=lambda m: (len(m), sorted(m)))
    kept: list[frozenset[int]] = []
    for m in ordered:
        if not any(p < m for p in kept):
            kept.append(m)
    if len(kept) > caps.max_models:
        raise CapExceeded(
            f"more than {caps.max_models} minimal models; "
            "raise Caps.max_models to keep the enumeration exact")
    return kept


# ---------------------------------------------------------- pack / cover

@dataclass(frozen=True)
class PackCoverResult:
    """Exact packing and covering numbers with their verified witnesses."""

    pack: int
    pack_witnesses: tuple[frozenset[int], ...]
    cover: int
    cover_set: frozenset[int]


def _max_set_packing(models: Sequence[frozenset[int]]
                     ) -> list[frozenset[int]]:
    ordered = sorted(models, key=lambda m: (len(m), sorted(m)))
    best: list[frozenset[int]] = []

    def grow(chosen: list[frozenset[int]],
             cand: list[frozenset[int]]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + len(cand) <= len(best):
            return
        for i, m in enumerate(cand):
            grow(chosen + [m],
                 [c for c in cand[i + 1:] if not (c & m)])

    grow([], ordered)
    return best


def _min_hitting_set(models: Sequence[frozenset[int]]) -> frozenset[int]:
    remaining = sorted(models, key=lambda m: (len(m), sorted(m)))
    best: Optional[frozenset[int]] = None

    def disjoint_bound(rem: list[frozenset[int]]) -> int:
        count, used = 0, set()
        for m in rem:
            if not (m & used):
                count += 1
                used |= m
        return count

    def solve(rem: list[frozenset[int]], chosen: frozenset[int]) -> None:
        nonlocal best
        if not rem:
            if best is None or len(chosen) < len(best):
                best = chosen
            return
        if best is not None and \
                len(chosen) + disjoint_bound(rem) >= len(best):
            return
        pivot = min(rem, key=lambda m: (len(m), sorted(m)))
        for v in sorted(pivot):
            solve([c for c in rem if v not in c], chosen | {v})

    solve(remaining, frozenset())
    return best if best is not None else frozenset()


def pack_number(host: ColorfulGraph, pattern: ColorfulGraph,
                caps: Caps = DEFAULT_CAPS
                ) -> tuple[int, tuple[frozenset[int], ...]]:
    """Maximum number of vertex-disjoint subgraphs of the host each
    containing the pattern as colorful minor, with witness vertex sets.
    Exact: maximum set packing over the minimal-model family."""
    models = enumerate_minimal_models(host, pattern, caps)
    chosen = _max_set_packing(models)
    taken: set[int] = set()
    for w in chosen:
        if taken & w:
            raise AssertionError("packing witnesses overlap")
        taken |= w
        if not find_colorful_minor(host.subgraph(sorted(w)), pattern, caps):
            raise AssertionError("packing witness lost its model")
    return len(chosen), tuple(sorted(chosen, key=sorted))


def cover_number(host: ColorfulGraph, pattern: ColorfulGraph,
                 caps: Caps = DEFAULT_CAPS) -> tuple[int, frozenset[int]]:
    """Minimum size of a vertex set whose deletion leaves the host with
    no model of the pattern, plus such a set.  Exact: minimum hitting
    set over the minimal-model family, re-verified by an engine search
    on the deleted host."""
    models = enumerate_minimal_models(host, pattern, caps)
    hit = _min_hitting_set(models)
    live = sorted(set(range(host.n)) - hit)
    if find_colorful_minor(host.subgraph(live), pattern, caps):
        raise AssertionError("cover set fails to kill every model")
    return len(hit), hit


def pack_and_cover(host: ColorfulGraph, pattern: ColorfulGraph,
                   caps: Caps = DEFAULT_CAPS) -> PackCoverResult:
    """Both optima on one instance; always satisfies pack <= cover, as
    each disjoint model forces one deletion of its own."""
    pack, witnesses = pack_number(host, pattern, caps)
    cover, cover_set = cover_number(host, pattern, caps)
    if pack > cover:
        raise AssertionError(f"pack {pack} exceeded cover {cover}")
    return PackCoverResult(pack, witnesses, cover, cover_set)


# ------------------------------------------- segregated-grid packings

@dataclass(frozen=True)
class HalfIntegralWitness:
    """k model-bearing subgraphs of a segregated grid, each containing
    the r-sized segregated grid of the same color order, with every host
    vertex in at most two of them (at most one when q <= 2)."""

    host: ColorfulGraph
    pattern: ColorfulGraph
    witnesses: tuple[frozenset[int], ...]
    models: tuple[MinorModel, ...]

    def multiplicities(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.witnesses:
            for v in w:
                counts[v] = counts.get(v, 0) + 1
        return counts

    @property
    def max_multiplicity(self) -> int:
        return max(self.multiplicities().values(), default=0)

    def size(self) -> int:
        return len(self.witnesses)


def _band_copy_q1(k: int, r: int, m: int, side: int) -> list[set[int]]:
    # copy m of the r-grid sits identically in rows (m-1)r+1..mr
    sets = []
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            sets.append({grid_vertex(side, side, (m - 1) * r + i, j)})
    return sets


def _staple_copy_q2(k: int, r: int, m: int, side: int) -> list[set[int]]:
    # copy m: two full-width row bands (one per color block) joined on
    # the right by a 2r-wide column band; later copies nest inside.
    width = 2 * r * (k - m + 1)
    col = [width - 2 * r + j for j in range(1, 2 * r + 1)]
    top = [(m - 1) * r + i for i in range(1, r + 1)]
    bottom = [k * r + (k - m) * r + i for i in range(1, r + 1)]
    gap = range(m * r + 1, k * r + (k - m) * r + 1)
    sets: list[set[int]] = []
    for block_rows in (top, bottom):
        for i, row in enumerate(block_rows, start=1):
            for j in range(1, 2 * r + 1):
                if j == 1:
                    cell = {grid_vertex(side, side, row, c)
                            for c in range(1, col[0] + 1)}
                else:
                    cell = {grid_vertex(side, side, row, col[j - 1])}
                if block_rows is top and i == r:
                    cell |= {grid_vertex(side, side, g, col[j - 1])
                             for g in gap}
                sets.append(cell)
    return sets


def _interleaved_copy(q: int, k: int, r: int, m: int,
                      side: int) -> list[set[int]]:
    # copy m: the m-th r-row band of every color block, plus the m-th
    # qr-wide column band carrying the vertical connections; tails along
    # the band rows fetch the colored first-column cells.
    col = [(m - 1) * q * r + j for j in range(1, q * r + 1)]
    sets: list[set[int]] = []
    for c in range(1, q + 1):
        rows = [(c - 1) * k * r + (m - 1) * r + i for i in range(1, r + 1)]
        for i, row in enumerate(rows, start=1):
            for j in range(1, q * r + 1):
                if j == 1:
                    cell = {grid_vertex(side, side, row, x)
                            for x in range(1, col[0] + 1)}
                else:
                    cell = {grid_vertex(side, side, row, col[j - 1])}
                if i == r and c < q:
                    below = range(rows[-1] + 1,
                                  c * k * r + (m - 1) * r + 1)
                    cell |= {grid_vertex(side, side, g, col[j - 1])
                             for g in below}
                sets.append(cell)
    return sets


def half_integral_witness(q: int, k: int, r: int,
                          pi: Sequence[int] | None = None
                          ) -> HalfIntegralWitness:
    """k copies of the (q, r)-segregated grid packed into the
    (q, k·r)-segregated grid realizing the same color order.

    For q <= 2 the copies are pairwise disjoint (multiplicity 1); for
    q >= 3 the interleaved row/column scheme is used and every host
    vertex lies in at most two copies.  Every branch-set list is checked
    by the model verifier before the witness is returned.
    """
    spec = SegregatedSpec(q, k * r, tuple(pi) if pi is not None
                          else tuple(range(1, q + 1)))
    host = segregated_grid(spec)
    pattern = segregated_grid(q, r, spec.pi)
    side = q * k * r
    build = {1: _band_copy_q1, 2: _staple_copy_q2}.get(
        q, lambda kk, rr, mm, ss: _interleaved_copy(q, kk, rr, mm, ss))
    witnesses = []
    models = []
    for m in range(1, k + 1):
        sets = build(k, r, m, side)
        model = MinorModel(tuple(frozenset(s) for s in sets))
        problems = model_violations(host, pattern, model)
        if problems:
            raise AssertionError(
                f"constructed copy {m} is not a model: {problems[:3]}")
        models.append(model)
        witnesses.append(frozenset(v for s in sets for v in s))
    out = HalfIntegralWitness(host, pattern, tuple(witnesses),
                              tuple(models))
    limit = 1 if q <= 2 else 2
    if out.max_multiplicity > limit:
        raise AssertionError("multiplicity bound broken")
    return out


# -------------------------------------------------------------- checker

def packing_violations(host: ColorfulGraph, pattern: ColorfulGraph,
                       witnesses: Sequence[frozenset[int]],
                       max_multiplicity: int = 1,
                       models: Optional[Sequence[MinorModel]] = None,
                       caps: Caps = DEFAULT_CAPS) -> list[str]:
    """Everything wrong with a claimed (half-integral) packing: witness
    index and reason per finding, empty when valid.  With explicit
    models the check is cap-free; otherwise each witness subgraph gets
    an engine search."""
    problems = []
    counts: dict[int, int] = {}
    for idx, w in enumerate(witnesses):
        for v in w:
            counts[v] = counts.get(v, 0) + 1
            if not 0 <= v < host.n:
                problems.append(f"witness {idx}: vertex {v} not in host")
    over = sorted(v for v, c in counts.items() if c > max_multiplicity)
    if over:
        problems.append(
            f"vertices {over[:8]} appear in more than "
            f"{max_multiplicity} witnesses")
    if models is not None and len(models) != len(witnesses):
        problems.append("model list does not match witness list")
        return problems
    for idx, w in enumerate(witnesses):
        if models is not None:
            spread = set(v for bs in models[idx].branch_sets for v in bs)
            if not spread <= set(w):
                problems.append(
                    f"witness {idx}: model leaves the witness set")
            bad = model_violations(host, pattern, models[idx])
            problems.extend(f"witness {idx}: {b}" for b in bad)
        else:
            sub = host.subgraph(sorted(w))
            if not find_colorful_minor(sub, pattern, caps):
                problems.append(f"witness {idx}: no model of the pattern")
    return problems


def verify_packing(host: ColorfulGraph, pattern: ColorfulGraph,
                   witnesses: Sequence[frozenset[int]],
                   max_multiplicity: int = 1,
                   models: Optional[Sequence[MinorModel]] = None,
                   caps: Caps = DEFAULT_CAPS) -> bool:
    return not packing_violations(host, pattern, witnesses,
                                  max_multiplicity, models, caps)
