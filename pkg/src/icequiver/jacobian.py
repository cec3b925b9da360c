"""The finite-dimensional Jacobian algebra of an underlined quiver.

Two independent routes to its dimensions:

* jacobian_by_paths quotients the path algebra by the cyclic derivatives
  of the potential, degree by degree, with exact rational row reduction.
  The grading is by label difference: an arrow I -> J with J = I - x + y
  has degree (y - x) mod n, which makes every face cycle homogeneous of
  total degree n and hence every relation homogeneous.  Dimensions are
  exhausted once n consecutive degrees contribute nothing (no arrow
  degree exceeds n-1, so nothing can jump the window).

* jacobian_by_stable_hom reads the same dimensions off the rim-profile
  calculus, with no path algebra in sight.

Their entrywise agreement on a collection is the computational content of
the dictionary between the quiver and the module category.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InternalError, NoStabilization
from .profiles import stable_hom_dim
from .quiver import QP, quiver_from_collection, underline
from .subsets import Collection, KSubset, shift


def arrow_degree(src: KSubset, tgt: KSubset) -> int:
    removed = set(src.elems) - set(tgt.elems)
    added = set(tgt.elems) - set(src.elems)
    if len(removed) != 1 or len(added) != 1:
        raise InternalError(f"arrow {src} -> {tgt} does not swap one element")
    (x,), (y,) = removed, added
    return (y - x) % src.n


@dataclass
class Relation:
    """Cyclic derivative of the potential at one arrow: a signed sum of
    parallel completion paths (arrow-id sequences in traversal order)."""

    src: object
    tgt: object
    degree: int
    terms: tuple[tuple[int, tuple[int, ...]], ...]


def qp_relations(qp: QP) -> list[Relation]:
    degs = {a.id: arrow_degree(a.src, a.tgt) for a in qp.arrows}
    for f in qp.faces:
        if sum(degs[aid] for aid in f.arrows) != qp.n:
            raise InternalError("face cycle is not homogeneous of degree n")
    rels = []
    for a in qp.arrows:
        terms = []
        for f in qp.faces:
            if a.id not in f.arrows:
                continue
            ids = list(f.arrows)
            i = ids.index(a.id)
            completion = tuple(ids[i + 1 :] + ids[:i])
            terms.append((f.sign, completion))
        if terms:
            rels.append(
                Relation(a.tgt, a.src, qp.n - degs[a.id], tuple(terms))
            )
    return rels


@dataclass
class _Basis:
    bid: int
    start: object
    end: object
    degree: int
    path: tuple[int, ...]


@dataclass
class AlgebraTable:
    """Graded dimensions, socle supports and optional basis paths."""

    vertices: tuple
    dims: dict  # (src, tgt) -> tuple of dims by degree
    socle: Optional[dict] = None  # src -> Counter of socle support vertices
    basis_paths: Optional[dict] = None  # (src, tgt) -> list of arrow-id paths
    socle_dims: Optional[dict] = None  # (src, tgt) -> total socle dimension

    def dim(self, src, tgt) -> int:
        return sum(self.dims.get((src, tgt), ()))

    def total_dim(self) -> int:
        return sum(sum(v) for v in self.dims.values())

    def left_dim(self, i) -> int:
        """dim of the projective at i: paths starting at i."""
        return sum(self.dim(i, j) for j in self.vertices)

    def right_dim(self, j) -> int:
        """dim of paths ending at j."""
        return sum(self.dim(i, j) for i in self.vertices)

    def dim_matrix(self) -> list[list[int]]:
        return [[self.dim(i, j) for j in self.vertices] for i in self.vertices]


def _rref(rows: list[dict[int, Fraction]], width: int):
    """Row reduce sparse rows; returns (pivot_col -> solved row) with each
    solved row expressing the pivot in terms of free columns."""
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = dict(row)
        while row:
            changed = False
            for col in sorted(row):
                if col in pivots:
                    f = row.pop(col)
                    for c2, v2 in pivots[col].items():
                        row[c2] = row.get(c2, Fraction(0)) + f * v2
                        if row[c2] == 0:
                            del row[c2]
                    changed = True
                    break
            if not changed:
                break
        row = {c: v for c, v in row.items() if v != 0}
        if not row:
            continue
        piv = min(row)
        inv = Fraction(-1) / row.pop(piv)
        solved = {c: v * inv for c, v in row.items()}
        # substitute into existing pivot rows
        for p, pr in pivots.items():
            if piv in pr:
                f = pr.pop(piv)
                for c2, v2 in solved.items():
                    pr[c2] = pr.get(c2, Fraction(0)) + f * v2
                    if pr[c2] == 0:
                        del pr[c2]
        pivots[piv] = solved
    return pivots


def jacobian_by_paths(
    qp: QP,
    max_degree: Optional[int] = None,
    with_basis: bool = False,
    relations: Optional[list[Relation]] = None,
) -> AlgebraTable:
    """Dimensions of the path algebra modulo the derivative ideal.

    An explicit relation list overrides the potential derivatives (used by
    the truncated algebras of the cuts module).  Raises NoStabilization if
    the cap (default 4 * #arrows) is reached before n consecutive degrees
    come out empty.
    """
    n = qp.n
    labels = sorted(qp.labels())
    arrows = list(qp.arrows)
    degs = {a.id: arrow_degree(a.src, a.tgt) for a in arrows}
    if relations is None:
        relations = qp_relations(qp)
    # the cap must leave room for the n-degree empty window even on tiny
    # quivers, hence the 2n floor
    cap = max_degree if max_degree is not None else max(4 * len(arrows), 2 * n)

    basis: list[_Basis] = []
    by_end: dict[tuple, list[_Basis]] = {}
    mult: dict[tuple[int, int], dict[int, Fraction]] = {}

    def add_basis(start, end, degree, path) -> _Basis:
        b = _Basis(len(basis), start, end, degree, path)
        basis.append(b)
        by_end.setdefault((end, degree), []).append(b)
        return b

    for lbl in labels:
        add_basis(lbl, lbl, 0, ())

    def apply_arrow(aid: int, coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for bid, c in coeffs.items():
            for nbid, v in mult[(aid, bid)].items():
                out[nbid] = out.get(nbid, Fraction(0)) + c * v
                if out[nbid] == 0:
                    del out[nbid]
        return out

    empty_run = 0
    d = 0
    while empty_run < n:
        d += 1
        if d > cap:
            raise NoStabilization(cap)
        # candidates: extend every degree d - deg(a) basis path by arrow a
        cands: list[tuple[int, int]] = []
        cand_index: dict[tuple[int, int], int] = {}
        for a in arrows:
            for b in by_end.get((a.src, d - degs[a.id]), []):
                cand_index[(a.id, b.bid)] = len(cands)
                cands.append((a.id, b.bid))
        if not cands:
            empty_run += 1
            continue

        rows: list[dict[int, Fraction]] = []
        for rel in relations:
            for b in by_end.get((rel.src, d - rel.degree), []):
                vec: dict[int, Fraction] = {}
                for sign, path in rel.terms:
                    coeffs = {b.bid: Fraction(sign)}
                    for aid in path[:-1]:
                        coeffs = apply_arrow(aid, coeffs)
                        if not coeffs:
                            break
                    else:
                        last = path[-1]
                        for bid, c in coeffs.items():
                            idx = cand_index.get((last, bid))
                            if idx is None:
                                raise InternalError("relation leaves the candidate span")
                            vec[idx] = vec.get(idx, Fraction(0)) + c
                            if vec[idx] == 0:
                                del vec[idx]
                if vec:
                    rows.append(vec)

        pivots = _rref(rows, len(cands))
        new_ids: dict[int, int] = {}
        added = 0
        for idx, (aid, bid) in enumerate(cands):
            if idx in pivots:
                continue
            b = basis[bid]
            a = next(x for x in arrows if x.id == aid)
            nb = add_basis(b.start, a.tgt, d, b.path + (aid,))
            new_ids[idx] = nb.bid
            added += 1
        for idx, (aid, bid) in enumerate(cands):
            if idx in pivots:
                expr: dict[int, Fraction] = {}
                for col, v in pivots[idx].items():
                    expr[new_ids[col]] = v
                mult[(aid, bid)] = expr
            else:
                mult[(aid, bid)] = {new_ids[idx]: Fraction(1)}
        empty_run = empty_run + 1 if added == 0 else 0

    # assemble dimension and socle data
    dims: dict[tuple, list[int]] = {}
    paths: dict[tuple, list[tuple[int, ...]]] = {}
    maxdeg: dict[tuple, int] = {}
    for b in basis:
        key = (b.start, b.end)
        maxdeg[key] = max(maxdeg.get(key, 0), b.degree)
    for b in basis:
        key = (b.start, b.end)
        if key not in dims:
            dims[key] = [0] * (maxdeg[key] + 1)
            paths[key] = []
        dims[key][b.degree] += 1
        paths[key].append(b.path)

    out_arrows: dict[object, list] = {}
    for a in arrows:
        out_arrows.setdefault(a.src, []).append(a)

    socle: dict[object, Counter] = {lbl: Counter() for lbl in labels}
    socle_dims: dict[tuple, int] = {}
    groups: dict[tuple, list[_Basis]] = {}
    for b in basis:
        groups.setdefault((b.start, b.end, b.degree), []).append(b)
    for (start, end, degree), els in groups.items():
        # kernel of all left multiplications out of `end`
        rows = []
        for a in out_arrows.get(end, []):
            row_map: dict[int, dict[int, Fraction]] = {}
            for j, b in enumerate(els):
                for nbid, v in mult.get((a.id, b.bid), {}).items():
                    row_map.setdefault(nbid, {})[j] = v
            rows.extend(row_map.values())
        # rank of the stacked matrix (columns = els)
        dense = [[r.get(j, Fraction(0)) for j in range(len(els))] for r in rows]
        rank = _dense_rank(dense)
        kdim = len(els) - rank
        if kdim:
            socle[start][end] += kdim
            socle_dims[(start, end)] = socle_dims.get((start, end), 0) + kdim

    table = AlgebraTable(
        tuple(labels),
        {k: tuple(v) for k, v in dims.items()},
        socle=socle,
        basis_paths=paths if with_basis else None,
        socle_dims=socle_dims,
    )
    return table


def _dense_rank(rows: list[list[Fraction]]) -> int:
    rows = [r[:] for r in rows if any(r)]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def jacobian_by_stable_hom(coll: Collection) -> AlgebraTable:
    """Dimensions only, straight from the stable Hom calculus (t-graded)."""
    internal = sorted(coll.internal_members())
    dims = {}
    for I in internal:
        for J in internal:
            d = stable_hom_dim(I, J)
            if d:
                dims[(I, J)] = tuple([1] * d)
    return AlgebraTable(tuple(internal), dims)


@dataclass
class SelfInjectivityReport:
    self_injective: bool
    sigma: Optional[dict]
    socle_simple: dict
    dim_matched: dict

    def sigma_cycles(self) -> list[list]:
        if not self.sigma:
            return []
        cycles = []
        seen = set()
        for start in sorted(self.sigma):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            cur = self.sigma[start]
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                cur = self.sigma[cur]
            cycles.append(cyc)
        return cycles


def self_injectivity(table: AlgebraTable) -> SelfInjectivityReport:
    """Simple socles + a socle permutation + matching dimensions."""
    if table.socle is None:
        raise ValueError("self-injectivity needs socle data (use jacobian_by_paths)")
    sigma = {}
    socle_simple = {}
    for i in table.vertices:
        comp = table.socle[i]
        total = sum(comp.values())
        socle_simple[i] = total == 1
        if total == 1:
            sigma[i] = next(iter(comp))
    ok = all(socle_simple.values())
    is_perm = ok and sorted(sigma.values(), key=str) == sorted(table.vertices, key=str)
    dim_matched = {}
    if is_perm:
        for i in table.vertices:
            dim_matched[i] = table.left_dim(i) == table.right_dim(sigma[i])
    selfinj = ok and is_perm and all(dim_matched.values())
    return SelfInjectivityReport(
        selfinj, sigma if selfinj else None, socle_simple, dim_matched
    )


def verify_main_theorem(coll: Collection) -> bool:
    """Self-injectivity of the Jacobian algebra must match rotational
    symmetry of the collection, with socle permutation I -> I-k."""
    from .subsets import is_symmetric

    qp = underline(quiver_from_collection(coll))
    table = jacobian_by_paths(qp)
    report = self_injectivity(table)
    symmetric = is_symmetric(coll)
    if report.self_injective != symmetric:
        return False
    if symmetric:
        for I, J in report.sigma.items():
            if shift(I, -coll.k) != J:
                return False
    return True
