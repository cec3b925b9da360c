"""JSON, DOT and TikZ serialization.  One layer for CLI and HTTP alike."""
from __future__ import annotations

import json
from typing import Optional

from .cuts import Cut, enumerate_cuts, has_enough_cuts, is_cut, is_homogeneous_cut
from .errors import IceQuiverError
from .jacobian import jacobian_by_paths, self_injectivity
from .quiver import IceQP, QP, permutation_order, quiver_from_collection, underline
from .subsets import Collection, KSubset, is_symmetric, subset, validate_collection


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1)


def collection_to_json(coll: Collection) -> dict:
    return {
        "k": coll.k,
        "n": coll.n,
        "labels": [list(m.elems) for m in sorted(coll.members)],
    }


def collection_from_json(data: dict) -> Collection:
    try:
        k, n = int(data["k"]), int(data["n"])
        members = [subset(lbl, n) for lbl in data["labels"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise IceQuiverError(f"malformed collection payload: {exc}") from exc
    return validate_collection(members, k, n)


def _pos(p) -> list[float]:
    return [float(p[0]), float(p[1])]


def _label(lbl) -> object:
    if isinstance(lbl, KSubset):
        return list(lbl.elems)
    if isinstance(lbl, tuple):
        return list(lbl)
    return lbl


def quiver_to_json(q: IceQP) -> dict:
    return {
        "k": q.k,
        "n": q.n,
        "vertices": [
            {"label": _label(v.label), "frozen": v.frozen, "pos": _pos(v.pos)}
            for v in q.vertices
        ],
        "arrows": [
            {"id": a.id, "src": _label(a.src), "tgt": _label(a.tgt)} for a in q.arrows
        ],
        "faces": [{"arrows": list(f.arrows), "sign": f.sign} for f in q.faces],
    }


def qp_to_json(qp: QP) -> dict:
    return {
        "k": qp.k,
        "n": qp.n,
        "vertices": [
            {"label": _label(lbl), "frozen": False, "pos": _pos(p)}
            for lbl, p in qp.vertices
        ],
        "arrows": [
            {"id": a.id, "src": _label(a.src), "tgt": _label(a.tgt)} for a in qp.arrows
        ],
        "faces": [{"arrows": list(f.arrows), "sign": f.sign} for f in qp.faces],
    }


def cut_to_json(cut: Cut) -> dict:
    return {"arrows": cut.sorted_ids()}


def report_json(coll: Collection, cut: Optional[Cut] = None) -> dict:
    """Self-injectivity report plus symmetry, Nakayama order, cut census."""
    q = quiver_from_collection(coll)
    qp = underline(q)
    table = jacobian_by_paths(qp)
    rep = self_injectivity(table)
    symmetric = is_symmetric(coll)
    sigma_json = None
    order = None
    if rep.self_injective:
        sigma_json = [[_label(x) for x in cyc] for cyc in rep.sigma_cycles()]
        order = permutation_order(rep.sigma)
    cuts = enumerate_cuts(qp)
    homog = sum(1 for c in cuts if symmetric and is_homogeneous_cut(qp, c))
    out = {
        "k": coll.k,
        "n": coll.n,
        "memberCount": len(coll.members),
        "maximal": coll.maximal,
        "symmetric": symmetric,
        "selfInjective": rep.self_injective,
        "sigma": sigma_json,
        "nakayamaOrder": order,
        "dimTotal": table.total_dim(),
        "vertices": [_label(v) for v in table.vertices],
        "dimMatrix": table.dim_matrix(),
        "cuts": {
            "count": len(cuts),
            "homogeneousCount": homog,
            "enoughCuts": has_enough_cuts(qp),
        },
    }
    if cut is not None:
        valid = is_cut(qp, cut.arrow_ids)
        out["cut"] = {
            "arrows": cut.sorted_ids(),
            "valid": valid,
            "homogeneous": bool(valid and symmetric and is_homogeneous_cut(qp, cut)),
        }
    return out


def quiver_to_dot(q) -> str:
    """Arrows only, stable order."""
    lines = ["digraph quiver {"]
    arrows = q.arrows if hasattr(q, "arrows") else ()
    for a in arrows:
        lines.append(f'  "{_name(a.src)}" -> "{_name(a.tgt)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def exchange_graph_to_dot(graph) -> str:
    """Nodes are collection hashes, edges carry the mutated label."""
    import hashlib

    def node_id(key):
        return hashlib.sha256(str(key).encode()).hexdigest()[:12]

    lines = ["graph exchange {"]
    for key in sorted(graph.nodes):
        lines.append(f'  "{node_id(key)}";')
    seen = set()
    for a, b, lbl in graph.edges:
        e = frozenset({a, b})
        if e in seen:
            continue
        seen.add(e)
        lines.append(f'  "{node_id(a)}" -- "{node_id(b)}" [label="{_name(lbl)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _name(lbl) -> str:
    if isinstance(lbl, KSubset):
        return str(lbl)
    if isinstance(lbl, tuple):
        return "_".join(str(x) for x in lbl)
    return str(lbl)


def quiver_to_tikz(q: IceQP, cut: Optional[Cut] = None) -> str:
    """Nodes at the embedding positions; frozen vertices on a dashed
    boundary circle; cut arrows dotted."""
    cut_ids = set(cut.arrow_ids) if cut else set()
    lines = [
        "\\begin{tikzpicture}[scale=2.2,",
        "    quivarrow/.style={black, -latex, very thick},",
        "    cutarrow/.style={black, -latex, very thick, dotted}]",
    ]
    frozen = getattr(q, "frozen_labels", lambda: set())()
    if frozen:
        import math

        radius = max(
            math.hypot(float(v.pos[0]), float(v.pos[1]))
            for v in q.vertices
            if v.frozen
        )
        lines.append(f"\\draw (0,0) circle({radius:.4f}) [thick, dashed];")
    for v in q.vertices:
        lbl, pos = (v.label, v.pos) if isinstance(q, IceQP) else v
        x, y = float(pos[0]), float(pos[1])
        lines.append(f"\\node (q{_name(lbl)}) at ({x:.4f},{y:.4f}) {{${_name(lbl)}$}};")
    for a in q.arrows:
        style = "cutarrow" if a.id in cut_ids else "quivarrow"
        lines.append(f"\\draw [{style}] (q{_name(a.src)}) edge (q{_name(a.tgt)});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
