"""Search for maximal weakly separated collections and exchange graphs.

The symmetric search runs over orbits of the +k rotation, seeded with the
n forced cyclic intervals; pairwise compatibility is precomputed in bulk
through the bitmask kernels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from . import _kernels
from .quiver import quiver_from_collection
from .subsets import (
    Collection,
    KSubset,
    all_intervals,
    is_symmetric,
    reflect_collection,
    shift,
    shift_collection,
    subset,
    validate_collection,
)


@dataclass(frozen=True)
class SearchConfig:
    k: int
    n: int
    max_solutions: int = 1_000_000
    canonicalize_under_dihedral: bool = False
    orbit_only: bool = False

    def __post_init__(self):
        if self.k > self.n:
            raise ValueError("k must not exceed n")
        if self.max_solutions < 1:
            raise ValueError("max_solutions must be positive")


def canonical_form(coll: Collection) -> tuple:
    """Lexicographically least member list over the 2n dihedral relabelings."""
    best = None
    for s in range(coll.n):
        for refl in (False, True):
            c = shift_collection(coll, s)
            if refl:
                c = reflect_collection(c)
            key = tuple(m.elems for m in sorted(c.members))
            if best is None or key < best:
                best = key
    return best


def _orbit_reps(k: int, n: int):
    """Orbits of +k on all k-subsets, as (representative, orbit members)."""
    seen = set()
    orbits = []
    for c in combinations(range(1, n + 1), k):
        I = subset(c, n)
        if I in seen:
            continue
        orb = [I]
        seen.add(I)
        cur = shift(I, k)
        while cur != I:
            orb.append(cur)
            seen.add(cur)
            cur = shift(cur, k)
        orbits.append(orb)
    return orbits


def iter_symmetric(config: SearchConfig):
    """Lazily yield maximal collections invariant under +k.

    Backtracking over +k-orbits with pairwise weak-separation pruning;
    orbit branching is ordered by least member for reproducibility.
    """
    k, n = config.k, config.n
    target = k * (n - k) + 1
    intervals = all_intervals(k, n)
    interval_set = set(intervals)

    orbits = [o for o in _orbit_reps(k, n) if o[0] not in interval_set]
    orbits.sort(key=lambda o: min(o))

    # drop orbits that cross themselves or the forced intervals
    interval_masks = np.array([iv.mask() for iv in intervals], dtype=np.uint64)
    good = []
    for orb in orbits:
        masks = np.array([m.mask() for m in orb], dtype=np.uint64)
        if not _kernels.separated_matrix(masks, n).all():
            continue
        if not _kernels.separated_cross(masks, interval_masks, n).all():
            continue
        good.append(orb)

    if (target - n) == 0:
        base = validate_collection(intervals, k, n)
        if base.maximal:
            yield base
        return

    # orbit-vs-orbit compatibility
    flat = [m for orb in good for m in orb]
    owner = []
    for oi, orb in enumerate(good):
        owner.extend([oi] * len(orb))
    if flat:
        masks = np.array([m.mask() for m in flat], dtype=np.uint64)
        sep = _kernels.separated_matrix(masks, n)
    compat = [[True] * len(good) for _ in good]
    for i in range(len(flat)):
        for j in range(len(flat)):
            if not sep[i][j]:
                compat[owner[i]][owner[j]] = False

    need = target - n
    sizes = [len(o) for o in good]
    suffix = [0] * (len(good) + 1)
    for i in range(len(good) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + sizes[i]
    emitted = 0

    def bt(start: int, chosen: list[int], remaining: int):
        nonlocal emitted
        if emitted >= config.max_solutions:
            return
        if remaining == 0:
            members = list(intervals)
            for oi in chosen:
                members.extend(good[oi])
            coll = validate_collection(members, k, n)
            assert coll.maximal and is_symmetric(coll)
            emitted += 1
            yield coll
            return
        if suffix[start] < remaining:
            return
        for oi in range(start, len(good)):
            if sizes[oi] > remaining:
                continue
            if any(not compat[oi][cj] for cj in chosen):
                continue
            yield from bt(oi + 1, chosen + [oi], remaining - sizes[oi])
            if emitted >= config.max_solutions:
                return

    yield from bt(0, [], need)


def enumerate_symmetric(config: SearchConfig) -> list[Collection]:
    """All maximal collections invariant under +k, up to max_solutions."""
    solutions = list(iter_symmetric(config))
    if config.canonicalize_under_dihedral:
        seen = {}
        for coll in solutions:
            seen.setdefault(canonical_form(coll), coll)
        solutions = [seen[key] for key in sorted(seen)]
    return solutions


def enumerate_maximal(k: int, n: int, max_solutions: int = 1_000_000) -> list[Collection]:
    """All maximal collections of (k, n), by backtracking over the
    non-interval subsets in sorted order."""
    target = k * (n - k) + 1
    intervals = all_intervals(k, n)
    interval_set = set(intervals)
    pool = [
        subset(c, n)
        for c in combinations(range(1, n + 1), k)
        if subset(c, n) not in interval_set
    ]
    interval_masks = np.array([iv.mask() for iv in intervals], dtype=np.uint64)
    masks = np.array([m.mask() for m in pool], dtype=np.uint64)
    if len(pool):
        ok_iv = _kernels.separated_cross(masks, interval_masks, n).all(axis=1)
        pool = [m for m, ok in zip(pool, ok_iv) if ok]
        masks = np.array([m.mask() for m in pool], dtype=np.uint64)
        sep = _kernels.separated_matrix(masks, n)
    need = target - n
    out: list[Collection] = []

    def bt(start: int, chosen: list[int], remaining: int):
        if len(out) >= max_solutions:
            return
        if remaining == 0:
            coll = validate_collection(
                intervals + [pool[i] for i in chosen], k, n
            )
            assert coll.maximal
            out.append(coll)
            return
        if len(pool) - start < remaining:
            return
        for i in range(start, len(pool)):
            if all(sep[i][j] for j in chosen):
                bt(i + 1, chosen + [i], remaining - 1)
            if len(out) >= max_solutions:
                return

    bt(0, [], need)
    return out


@dataclass
class ExchangeGraph:
    nodes: dict  # key (sorted member tuple) -> Collection
    edges: list  # (key_from, key_to, mutated label)

    def node_count(self) -> int:
        return len(self.nodes)

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        adj: dict = {k: set() for k in self.nodes}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = set()
        stack = [next(iter(self.nodes))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        return len(seen) == len(self.nodes)


def _node_key(coll: Collection) -> tuple:
    return tuple(m.elems for m in sorted(coll.members))


def exchange_graph(
    start: Collection, depth: Optional[int] = None, config: Optional[SearchConfig] = None
) -> ExchangeGraph:
    """BFS over geometric exchanges (or orbit exchanges when orbit_only)."""
    from .quiver import geometric_exchange, orbit_exchange, sigma_orbit

    orbit_only = bool(config and config.orbit_only)
    nodes = {_node_key(start): start}
    edges = []
    frontier = [start]
    level = 0
    while frontier and (depth is None or level < depth):
        level += 1
        next_frontier = []
        for coll in frontier:
            q = quiver_from_collection(coll)
            tried = set()
            for lbl in sorted(coll.internal_members()):
                if q.valency(lbl) != 4:
                    continue
                if orbit_only:
                    orb = frozenset(sigma_orbit(coll, lbl))
                    if orb in tried:
                        continue
                    tried.add(orb)
                    try:
                        new = orbit_exchange(coll, lbl)
                    except Exception:
                        continue
                else:
                    new = geometric_exchange(coll, lbl)
                key = _node_key(new)
                edges.append((_node_key(coll), key, lbl))
                if key not in nodes:
                    nodes[key] = new
                    next_frontier.append(new)
        frontier = next_frontier
    return ExchangeGraph(nodes, edges)
