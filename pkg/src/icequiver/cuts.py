"""Cuts of a quiver with potential, cut-mutation, and truncated algebras.

A cut picks exactly one arrow from every potential cycle.  Cuts are kept
inside the set of arrows that lie on at least one face; arrows outside
every face never enter a cut.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InternalError, NotStrict, NotSymmetric
from .jacobian import AlgebraTable, Relation, arrow_degree, jacobian_by_paths
from .quiver import QP
from .subsets import shift


@dataclass(frozen=True)
class Cut:
    arrow_ids: frozenset[int]

    def __contains__(self, aid: int) -> bool:
        return aid in self.arrow_ids

    def sorted_ids(self) -> list[int]:
        return sorted(self.arrow_ids)


def is_cut(qp: QP, arrow_ids) -> bool:
    ids = set(arrow_ids)
    on_faces = set()
    for f in qp.faces:
        if len(ids & set(f.arrows)) != 1:
            return False
        on_faces |= set(f.arrows)
    return ids <= on_faces


def enumerate_cuts(qp: QP) -> list[Cut]:
    """All cuts, by exact-cover search over the face/arrow incidence.

    Faces are processed smallest-first; branching tries arrows in
    ascending id order, so the output order is deterministic.
    """
    faces = sorted((sorted(f.arrows) for f in qp.faces), key=lambda f: (len(f), f))
    face_of_arrow: dict[int, list[int]] = {}
    for fi, f in enumerate(faces):
        for aid in f:
            face_of_arrow.setdefault(aid, []).append(fi)

    cuts: list[Cut] = []
    chosen: set[int] = set()
    covered = [0] * len(faces)

    def bt(fi: int):
        if fi == len(faces):
            cuts.append(Cut(frozenset(chosen)))
            return
        if covered[fi]:
            bt(fi + 1)
            return
        for aid in faces[fi]:
            others = face_of_arrow[aid]
            if any(covered[o] for o in others):
                continue
            chosen.add(aid)
            for o in others:
                covered[o] += 1
            bt(fi + 1)
            chosen.discard(aid)
            for o in others:
                covered[o] -= 1

    bt(0)
    uniq = sorted({c.arrow_ids for c in cuts}, key=sorted)
    return [Cut(ids) for ids in uniq]


def has_enough_cuts(qp: QP) -> bool:
    """Every arrow of the quiver lies in some cut."""
    everything = set()
    for c in enumerate_cuts(qp):
        everything |= c.arrow_ids
    return everything == {a.id for a in qp.arrows}


def cut_mutation(qp: QP, cut: Cut, label) -> Cut:
    """Toggle the arrows at a strict source or strict sink of the cut."""
    ins = [a for a in qp.arrows if a.tgt == label]
    outs = [a for a in qp.arrows if a.src == label]
    in_cut = [a.id in cut for a in ins]
    out_cut = [a.id in cut for a in outs]
    strict_source = all(in_cut) and not any(out_cut) and ins
    strict_sink = all(out_cut) and not any(in_cut) and outs
    if not strict_source and not strict_sink:
        raise NotStrict(label)
    ids = set(cut.arrow_ids)
    if strict_source:
        ids -= {a.id for a in ins}
        ids |= {a.id for a in outs}
    else:
        ids -= {a.id for a in outs}
        ids |= {a.id for a in ins}
    if not is_cut(qp, ids):
        raise InternalError("cut-mutation produced a non-cut")
    return Cut(frozenset(ids))


def rho_arrow_map(qp: QP) -> dict[int, int]:
    """Arrow permutation induced by I -> I+k, when the labels support it."""
    by_pair = {(a.src, a.tgt): a.id for a in qp.arrows}
    out = {}
    for a in qp.arrows:
        key = (shift(a.src, qp.k), shift(a.tgt, qp.k))
        if key not in by_pair:
            raise NotSymmetric("label rotation is not a quiver automorphism")
        out[a.id] = by_pair[key]
    return out


def is_homogeneous_cut(qp: QP, cut: Cut) -> bool:
    """True iff the rotation I -> I+k maps the cut onto itself."""
    amap = rho_arrow_map(qp)
    return {amap[aid] for aid in cut.arrow_ids} == set(cut.arrow_ids)


@dataclass
class TruncatedPresentation:
    """Degree-zero part of the cut grading: quiver minus the cut arrows,
    relations the derivatives at cut arrows."""

    qp: QP
    cut: Cut
    quiver_arrows: tuple
    relations: tuple[Relation, ...]
    table: Optional[AlgebraTable] = None

    def total_dim(self) -> int:
        return self.table.total_dim() if self.table else 0


def _acyclic(labels, arrows) -> bool:
    adj: dict = {l: [] for l in labels}
    for a in arrows:
        adj[a.src].append(a.tgt)
    state: dict = {}

    def dfs(v):
        state[v] = 1
        for w in adj[v]:
            s = state.get(w)
            if s == 1:
                return False
            if s is None and not dfs(w):
                return False
        state[v] = 2
        return True

    return all(state.get(v) == 2 or dfs(v) for v in labels)


def truncated_presentation(qp: QP, cut: Cut, compute_table: bool = True) -> TruncatedPresentation:
    if not is_cut(qp, cut.arrow_ids):
        raise InternalError("not a valid cut for this quiver")
    kept = tuple(a for a in qp.arrows if a.id not in cut)
    degs = {a.id: arrow_degree(a.src, a.tgt) for a in qp.arrows}
    relations = []
    for a in qp.arrows:
        if a.id not in cut:
            continue
        terms = []
        for f in qp.faces:
            if a.id not in f.arrows:
                continue
            ids = list(f.arrows)
            i = ids.index(a.id)
            completion = tuple(ids[i + 1 :] + ids[:i])
            if any(x in cut for x in completion):
                raise InternalError("cut hits a face twice")
            terms.append((f.sign, completion))
        relations.append(Relation(a.tgt, a.src, qp.n - degs[a.id], tuple(terms)))

    if not _acyclic(qp.labels(), kept):
        raise InternalError("cut grading is not acyclic")

    table = None
    if compute_table:
        sub = QP(qp.k, qp.n, qp.vertices, kept, ())
        table = jacobian_by_paths(sub, relations=list(relations))
    return TruncatedPresentation(qp, cut, kept, tuple(relations), table)
