"""Plane embedding of a maximal collection and the induced tiling.

Each member I goes to the sum of the n-gon vertices it names.  White cells
group the members containing a common (k-1)-subset, black cells the
members inside a common (k+1)-subset; cells of size >= 3 are the
2-cells.  A pair {I, J} with |I & J| = k-1 is an edge exactly when it is
cyclically adjacent in both its white and its black cell.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import geometry
from .errors import EmbeddingDegenerate
from .geometry import Point
from .subsets import Collection, KSubset, subset


def embed(coll: Collection) -> dict[KSubset, Point]:
    """Vertex-sum embedding; equivariant under label rotation."""
    pos = {m: geometry.point_sum(m.elems, coll.n) for m in coll.members}
    seen: dict[tuple, KSubset] = {}
    for m, p in pos.items():
        key = (
            round(float(p[0]) * (1 << 20)),
            round(float(p[1]) * (1 << 20)),
        )
        if key in seen:
            raise EmbeddingDegenerate(f"{seen[key]} and {m} embed to the same point")
        seen[key] = m
    return pos


@dataclass(frozen=True)
class Tiling:
    coll: Collection
    pos: dict[KSubset, Point]
    edges: tuple[tuple[KSubset, KSubset], ...]
    white_cells: dict[KSubset, tuple[KSubset, ...]]
    black_cells: dict[KSubset, tuple[KSubset, ...]]

    def degree(self, member: KSubset) -> int:
        return sum(1 for e in self.edges if member in e)

    def two_cells(self):
        """(core, members, colour) for every cell of size >= 3."""
        for s, ms in self.white_cells.items():
            if len(ms) >= 3:
                yield s, ms, "white"
        for t, ms in self.black_cells.items():
            if len(ms) >= 3:
                yield t, ms, "black"


def _cyclic_adjacent(seq: tuple[KSubset, ...], a: KSubset, b: KSubset) -> bool:
    m = len(seq)
    ia, ib = seq.index(a), seq.index(b)
    return (ia - ib) % m in (1, m - 1)


def build_tiling(coll: Collection) -> Tiling:
    if not coll.maximal:
        raise ValueError("tiling is defined for maximal collections")
    n = coll.n
    pos = embed(coll)
    members = set(coll.members)

    white: dict[KSubset, list[tuple[int, KSubset]]] = {}
    black: dict[KSubset, list[tuple[int, KSubset]]] = {}
    for m in coll.members:
        for a in m.elems:
            core = subset((e for e in m.elems if e != a), n)
            white.setdefault(core, []).append((a, m))
        rest = set(range(1, n + 1)) - set(m.elems)
        for b in rest:
            hull = subset(list(m.elems) + [b], n)
            black.setdefault(hull, []).append((b, m))

    # cyclic order inside a cell: by residue, starting just after the
    # largest element of the defining core/hull
    white_cells = {}
    for core, entries in white.items():
        if len(entries) < 2:
            continue
        base = max(core.elems) if core.elems else n
        entries.sort(key=lambda e: (e[0] - base - 1) % n)
        white_cells[core] = tuple(m for _, m in entries)
    black_cells = {}
    for hull, entries in black.items():
        if len(entries) < 2:
            continue
        base = max(hull.elems)
        entries.sort(key=lambda e: (e[0] - base - 1) % n)
        black_cells[hull] = tuple(m for _, m in entries)

    edges = []
    for m in coll.members:
        for other in coll.members:
            if other <= m:
                continue
            inter = set(m.elems) & set(other.elems)
            if len(inter) != coll.k - 1:
                continue
            core = subset(inter, n)
            hull = subset(set(m.elems) | set(other.elems), n)
            if core not in white_cells or hull not in black_cells:
                continue
            if _cyclic_adjacent(white_cells[core], m, other) and _cyclic_adjacent(
                black_cells[hull], m, other
            ):
                edges.append((m, other))
    edges.sort()
    assert all(m in members for e in edges for m in e)
    return Tiling(coll, pos, tuple(edges), white_cells, black_cells)
