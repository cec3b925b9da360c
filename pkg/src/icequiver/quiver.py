"""Planar ice quivers with potential and their mutations.

The orientation convention is calibrated once and frozen: white cells are
traversed clockwise, black cells counterclockwise (this is the choice that
reproduces the published (3,9) reference quiver, e.g. arrows 124 -> 134
and 134 -> 145).  Faces carry sign +1 when the directed cycle runs
clockwise (white) and -1 when counterclockwise (black).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional

from . import geometry
from .errors import InternalError, NotMutable, NotSymmetric, OrbitNotIndependent
from .geometry import Point
from .subsets import (
    Collection,
    KSubset,
    all_intervals,
    is_symmetric,
    shift,
    subset,
    validate_collection,
)
from .tiling import Tiling, build_tiling

WHITE_CLOCKWISE = True  # calibration constant; do not change without recalibrating


@dataclass(frozen=True)
class Vertex:
    label: Any
    frozen: bool
    pos: Point


@dataclass(frozen=True)
class Arrow:
    id: int
    src: Any
    tgt: Any


@dataclass(frozen=True)
class Face:
    arrows: tuple[int, ...]  # arrow ids in cycle order
    sign: int  # +1 clockwise, -1 counterclockwise


def _normalize_cycle(ids: tuple[int, ...]) -> tuple[int, ...]:
    m = min(range(len(ids)), key=lambda i: ids[i])
    return ids[m:] + ids[:m]


@dataclass(frozen=True)
class IceQP:
    k: int
    n: int
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    faces: tuple[Face, ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_label", {v.label: v for v in self.vertices})
        object.__setattr__(self, "_by_id", {a.id: a for a in self.arrows})

    def vertex(self, label) -> Vertex:
        return self._by_label[label]

    def arrow(self, aid: int) -> Arrow:
        return self._by_id[aid]

    def labels(self) -> list:
        return [v.label for v in self.vertices]

    def frozen_labels(self) -> set:
        return {v.label for v in self.vertices if v.frozen}

    def internal_labels(self) -> list:
        return [v.label for v in self.vertices if not v.frozen]

    def arrows_at(self, label) -> list[Arrow]:
        return [a for a in self.arrows if a.src == label or a.tgt == label]

    def valency(self, label) -> int:
        return len(self.arrows_at(label))

    def internal_arrows(self) -> list[Arrow]:
        fr = self.frozen_labels()
        return [a for a in self.arrows if a.src not in fr and a.tgt not in fr]

    def arrow_pairs(self) -> set[tuple]:
        return {(a.src, a.tgt) for a in self.arrows}

    def find_arrow(self, src, tgt) -> Optional[Arrow]:
        for a in self.arrows:
            if a.src == src and a.tgt == tgt:
                return a
        return None


@dataclass(frozen=True)
class QP:
    """A quiver with potential: no frozen vertices."""

    k: int
    n: int
    vertices: tuple[tuple[Any, Point], ...]
    arrows: tuple[Arrow, ...]
    faces: tuple[Face, ...]

    def __post_init__(self):
        object.__setattr__(self, "_by_id", {a.id: a for a in self.arrows})

    def arrow(self, aid: int) -> Arrow:
        return self._by_id[aid]

    def labels(self) -> list:
        return [lbl for lbl, _ in self.vertices]

    def positions(self) -> dict:
        return {lbl: pos for lbl, pos in self.vertices}

    def arrows_at(self, label) -> list[Arrow]:
        return [a for a in self.arrows if a.src == label or a.tgt == label]

    def find_arrow(self, src, tgt) -> Optional[Arrow]:
        for a in self.arrows:
            if a.src == src and a.tgt == tgt:
                return a
        return None

    def face_arrow_sets(self) -> list[frozenset]:
        return [frozenset(f.arrows) for f in self.faces]


def _cell_cycles(tiling: Tiling):
    """Directed boundary cycles of all 2-cells under the calibration."""
    pos = tiling.pos
    for _, members, colour in tiling.two_cells():
        pts = [pos[m] for m in members]
        area = geometry.signed_area(pts)
        if area == 0:
            raise InternalError("degenerate cell polygon")
        want_ccw = (colour == "black") == WHITE_CLOCKWISE
        seq = list(members)
        if (area > 0) != want_ccw:
            seq.reverse()
        sign = +1 if colour == ("white" if WHITE_CLOCKWISE else "black") else -1
        yield seq, sign, colour


def quiver_from_collection(coll: Collection) -> IceQP:
    tiling = build_tiling(coll)
    frozen = set(all_intervals(coll.k, coll.n))
    directed: dict[tuple[KSubset, KSubset], str] = {}
    cycles = []
    for seq, sign, colour in _cell_cycles(tiling):
        cycles.append((seq, sign))
        for i in range(len(seq)):
            a, b = seq[i], seq[(i + 1) % len(seq)]
            prev = directed.get((b, a))
            if prev is not None:
                raise InternalError(f"cells disagree on edge {a} / {b}")
            directed[(a, b)] = colour

    undirected = {frozenset(e) for e in tiling.edges}
    covered = {frozenset(e) for e in directed}
    if covered != undirected:
        raise InternalError("some tiling edge lies on no 2-cell")

    pairs = sorted(directed)
    arrows = tuple(Arrow(i, s, t) for i, (s, t) in enumerate(pairs))
    index = {(a.src, a.tgt): a.id for a in arrows}
    faces = []
    for seq, sign in cycles:
        ids = tuple(index[(seq[i], seq[(i + 1) % len(seq)])] for i in range(len(seq)))
        faces.append(Face(_normalize_cycle(ids), sign))
    faces.sort(key=lambda f: f.arrows)
    vertices = tuple(
        Vertex(m, m in frozen, tiling.pos[m]) for m in sorted(coll.members)
    )
    return IceQP(coll.k, coll.n, vertices, arrows, tuple(faces))


def underline(q: IceQP) -> QP:
    """Delete frozen vertices and incident arrows; keep surviving faces."""
    fr = q.frozen_labels()
    keep = [a for a in q.arrows if a.src not in fr and a.tgt not in fr]
    kept_ids = {a.id for a in keep}
    faces = tuple(
        f for f in q.faces if all(aid in kept_ids for aid in f.arrows)
    )
    vertices = tuple((v.label, v.pos) for v in q.vertices if not v.frozen)
    return QP(q.k, q.n, vertices, tuple(keep), faces)


def _face_key(face: Face, q) -> tuple:
    cyc = tuple((q.arrow(aid).src, q.arrow(aid).tgt) for aid in face.arrows)
    m = min(range(len(cyc)), key=lambda i: str(cyc[i]))
    return (cyc[m:] + cyc[:m], face.sign)


def rho_automorphism(q: IceQP) -> Optional[dict]:
    """The map I -> I+k, when it is an automorphism of the ice quiver."""
    labels = set(q.labels())
    mapping = {lbl: shift(lbl, q.k) for lbl in labels}
    if set(mapping.values()) != labels:
        return None
    for v in q.vertices:
        if q.vertex(mapping[v.label]).frozen != v.frozen:
            return None
    pairs = q.arrow_pairs()
    if {(mapping[s], mapping[t]) for s, t in pairs} != pairs:
        return None
    face_keys = {_face_key(f, q) for f in q.faces}
    mapped_keys = set()
    for f in q.faces:
        cyc = tuple(
            (mapping[q.arrow(aid).src], mapping[q.arrow(aid).tgt]) for aid in f.arrows
        )
        m = min(range(len(cyc)), key=lambda i: str(cyc[i]))
        mapped_keys.add((cyc[m:] + cyc[:m], f.sign))
    if mapped_keys != face_keys:
        return None
    return mapping


def rotation_order(k: int, n: int) -> int:
    return n // math.gcd(k, n)


def nakayama_permutation(coll: Collection) -> dict[KSubset, KSubset]:
    """sigma(I) = I - k on members; only defined for symmetric collections."""
    if not is_symmetric(coll):
        raise NotSymmetric(f"collection is not invariant under +{coll.k}")
    return {m: shift(m, -coll.k) for m in coll.members}


def permutation_order(perm: dict) -> int:
    order = 1
    seen = set()
    for start in perm:
        if start in seen:
            continue
        length = 0
        cur = start
        while True:
            seen.add(cur)
            cur = perm[cur]
            length += 1
            if cur == start:
                break
        order = order * length // math.gcd(order, length)
    return order


def _exchange_label(q: IceQP, I: KSubset) -> KSubset:
    """The quadrilateral rule: neighbours S+{a,b}, S+{b,c}, S+{c,d}, S+{a,d}
    of I = S+{a,c} determine I' = S+{b,d}."""
    nbrs = {a.src if a.tgt == I else a.tgt for a in q.arrows_at(I)}
    if len(nbrs) != 4:
        raise InternalError(f"expected 4 distinct neighbours at {I}")
    common = set(I.elems)
    for nb in nbrs:
        common &= set(nb.elems)
    if len(common) != I.k - 2:
        raise InternalError(f"neighbour intersection at {I} has wrong size")
    added = set()
    for nb in nbrs:
        added |= set(nb.elems)
    bd = added - common - set(I.elems)
    if len(bd) != 2:
        raise InternalError(f"quadrilateral rule failed at {I}")
    return subset(common | bd, I.n)


def _exchange_by_scan(coll: Collection, I: KSubset) -> KSubset:
    from itertools import combinations

    rest = [m for m in coll.members if m != I]
    found = []
    for elems in combinations(range(1, coll.n + 1), coll.k):
        cand = subset(elems, coll.n)
        if cand == I or cand in coll:
            continue
        try:
            c = validate_collection(rest + [cand], coll.k, coll.n)
        except Exception:
            continue
        if c.maximal:
            found.append(cand)
    if len(found) != 1:
        raise InternalError(f"exchange at {I} has {len(found)} candidates, expected 1")
    return found[0]


def geometric_exchange(coll: Collection, I: KSubset) -> Collection:
    if I not in coll:
        raise NotMutable(I)
    q = quiver_from_collection(coll)
    if q.vertex(I).frozen:
        raise NotMutable(I)
    val = q.valency(I)
    if val != 4:
        raise NotMutable(I, val)
    try:
        new = _exchange_label(q, I)
        result = validate_collection([m for m in coll.members if m != I] + [new], coll.k, coll.n)
        if not result.maximal or new == I:
            raise InternalError("quadrilateral candidate not maximal")
    except InternalError:
        new = _exchange_by_scan(coll, I)
        result = validate_collection([m for m in coll.members if m != I] + [new], coll.k, coll.n)
    return result


def sigma_orbit(coll: Collection, I: KSubset) -> list[KSubset]:
    orbit = [I]
    cur = shift(I, -coll.k)
    while cur != I:
        orbit.append(cur)
        cur = shift(cur, -coll.k)
    return orbit


def orbit_exchange(coll: Collection, I: KSubset) -> Collection:
    if not is_symmetric(coll):
        raise NotSymmetric("orbit exchange needs a symmetric collection")
    if I not in coll:
        raise NotMutable(I)
    orbit = sigma_orbit(coll, I)
    q = quiver_from_collection(coll)
    orbit_set = set(orbit)
    for a in q.arrows:
        if a.src in orbit_set and a.tgt in orbit_set:
            raise OrbitNotIndependent(f"arrow {a.src} -> {a.tgt} inside the orbit of {I}")
    for J in orbit:
        if q.vertex(J).frozen or q.valency(J) != 4:
            raise NotMutable(J, q.valency(J))
    cur = coll
    for J in orbit:
        cur = geometric_exchange(cur, J)
    if not is_symmetric(cur):
        raise InternalError("orbit exchange broke the symmetry")
    return cur


# ---------------------------------------------------------------------------
# plane embeddings: rotation systems, face traversal, canonical codes
# ---------------------------------------------------------------------------


def _rotations(positions: dict, arrows) -> dict:
    """Counterclockwise dart order around each vertex.

    A dart is (vertex, other, arrow_id, forward) where forward says the
    dart points along the arrow.
    """
    incident: dict[Any, list[tuple]] = {}
    for a in arrows:
        incident.setdefault(a.src, []).append((a.src, a.tgt, a.id, True))
        incident.setdefault(a.tgt, []).append((a.tgt, a.src, a.id, False))
    rot = {}
    for v, darts in incident.items():
        rot[v] = geometry.sort_ccw(positions[v], darts, key=lambda d: positions[d[1]])
    return rot


def plane_faces(positions: dict, arrows) -> tuple[list[Face], int]:
    """All bounded regions of the straight-line drawing.

    Returns the regions that are directed cycles as Faces (sign +1 for
    clockwise cycles), plus the number of bounded regions that are not
    directed cycles.
    """
    rot = _rotations(positions, arrows)
    rot_index = {}
    for v, darts in rot.items():
        for i, d in enumerate(darts):
            rot_index[d] = i

    def twin(d):
        v, w, aid, fwd = d
        return (w, v, aid, not fwd)

    def next_in_face(d):
        # interior on the left: step to the predecessor of the twin in ccw order
        t = twin(d)
        darts = rot[t[0]]
        i = rot_index[t]
        return darts[(i - 1) % len(darts)]

    seen = set()
    faces: list[Face] = []
    nondirected = 0
    for start in rot_index:
        if start in seen:
            continue
        cycle = []
        d = start
        while True:
            seen.add(d)
            cycle.append(d)
            d = next_in_face(d)
            if d == start:
                break
        pts = [positions[d[0]] for d in cycle]
        if geometry.signed_area(pts) <= 0:
            continue  # outer face (or flat)
        dirs = {d[3] for d in cycle}
        if len(dirs) != 1:
            nondirected += 1
            continue
        forward = dirs.pop()
        ids = tuple(d[2] for d in cycle)
        if forward:
            # arrows run along the ccw traversal: counterclockwise cycle
            faces.append(Face(_normalize_cycle(ids), -1))
        else:
            ids = tuple(reversed(ids))
            faces.append(Face(_normalize_cycle(ids), +1))
    faces.sort(key=lambda f: f.arrows)
    return faces, nondirected


def fz_mutate_quiver(q: IceQP, I: KSubset) -> IceQP:
    """Quiver mutation at a valency-4 internal vertex, with the boundary
    2-cycle rule; the mutated vertex is relabelled by the exchange rule and
    faces are recomputed from the embedding."""
    if q.vertex(I).frozen:
        raise NotMutable(I)
    if q.valency(I) != 4:
        raise NotMutable(I, q.valency(I))
    new_label = _exchange_label(q, I)
    frozen = q.frozen_labels()

    ins = [a for a in q.arrows if a.tgt == I]
    outs = [a for a in q.arrows if a.src == I]
    if len(ins) != 2 or len(outs) != 2:
        raise InternalError(f"valency-4 vertex {I} is not alternating")

    # (src, tgt, is_new_composite)
    work: list[tuple[Any, Any, bool]] = []
    for a in q.arrows:
        if a.src == I:
            work.append((a.tgt, new_label, False))
        elif a.tgt == I:
            work.append((new_label, a.src, False))
        else:
            work.append((a.src, a.tgt, False))
    for a in ins:
        for b in outs:
            work.append((a.src, b.tgt, True))

    # cancel 2-cycles
    removed = set()
    for i, (s1, t1, new1) in enumerate(work):
        if i in removed:
            continue
        for j in range(i + 1, len(work)):
            if j in removed:
                continue
            s2, t2, new2 = work[j]
            if s2 != t1 or t2 != s1:
                continue
            b1 = s1 in frozen and t1 in frozen
            b2 = s2 in frozen and t2 in frozen
            if b1 and b2:
                # old hull arrow dies, the composite becomes the boundary arrow
                removed.add(j if new2 is False else i)
            elif b1:
                removed.add(i)
            elif b2:
                removed.add(j)
            else:
                removed.add(i)
                removed.add(j)
            break
    pairs = sorted({(s, t) for idx, (s, t, _) in enumerate(work) if idx not in removed})
    if len(pairs) != len(work) - len(removed):
        raise InternalError("parallel arrows after mutation")

    positions = {v.label: v.pos for v in q.vertices if v.label != I}
    positions[new_label] = geometry.point_sum(new_label.elems, q.n)
    arrows = tuple(Arrow(i, s, t) for i, (s, t) in enumerate(pairs))
    faces, nondirected = plane_faces(positions, arrows)
    if nondirected:
        raise InternalError("mutated quiver has a non-cyclic bounded region")
    vertices = tuple(
        Vertex(lbl, lbl in frozen, positions[lbl]) for lbl in sorted(positions)
    )
    return IceQP(q.k, q.n, vertices, arrows, tuple(faces))


# ---------------------------------------------------------------------------
# canonical codes for planar directed graphs (orientation preserving)
# ---------------------------------------------------------------------------


def _code_from_start(rot, rot_index, start):
    order = {}
    code = []
    order[start[0]] = 0
    queue = [start]
    while queue:
        d = queue.pop(0)
        v = d[0]
        darts = rot[v]
        i = rot_index[d]
        seq = [darts[(i + j) % len(darts)] for j in range(len(darts))]
        row = []
        for (sv, w, aid, fwd) in seq:
            if w not in order:
                order[w] = len(order)
                queue.append((w, sv, aid, not fwd))
            row.append((order[w], fwd))
        code.append(tuple(row))
    return tuple(code), order


def canonical_code(positions: dict, arrows):
    """Orientation-preserving canonical form of a connected plane digraph.

    Returns (code, vertex_order) for the lexicographically least start.
    """
    rot = _rotations(positions, arrows)
    rot_index = {}
    for v, darts in rot.items():
        for i, d in enumerate(darts):
            rot_index[d] = i
    if any(v not in rot for v in positions):
        raise InternalError("canonical code needs every vertex on an arrow")
    best = None
    best_order = None
    for d in sorted(rot_index, key=lambda d: (str(d[0]), str(d[1]), d[2], d[3])):
        code, order = _code_from_start(rot, rot_index, d)
        if len(order) != len(positions):
            raise InternalError("canonical code needs a connected quiver")
        if best is None or code < best:
            best = code
            best_order = order
    return best, best_order


def qp_canonical_code(qp: QP, up_to_reflection: bool = True):
    """Canonical form of the plane digraph.  Reflection is allowed by
    default: published family pictures and the collection-side embedding
    do not agree on handedness, and reflecting the quiver does not change
    the algebra."""
    if not qp.arrows:
        return (len(qp.vertices),), {lbl: i for i, (lbl, _) in enumerate(qp.vertices)}
    pos = qp.positions()
    code, order = canonical_code(pos, qp.arrows)
    if up_to_reflection:
        mirrored = {lbl: (-p[0], p[1]) for lbl, p in pos.items()}
        mcode, morder = canonical_code(mirrored, qp.arrows)
        if mcode < code:
            code, order = mcode, morder
    return code, order
