"""Generators for the known self-injective quiver families and the search
that matches each family quiver with a symmetric collection.

Grids and triangles come from closed-form rules; cobwebs from the ring
construction; the five sporadic quivers are shipped as fixture files
transcribed from published coordinate lists and never edited by hand.
Faces are always recomputed from the plane embedding.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import InternalError, SearchExhausted, UnsupportedParameter
from .quiver import QP, Arrow, plane_faces, qp_canonical_code, quiver_from_collection, underline
from .search import SearchConfig, iter_symmetric
from .subsets import Collection

FAMILY_NAMES = ("grid", "triangle", "cobwebPlus", "cobwebMinus", "sporadic")
SPORADIC_IDS = ("3-12", "4-16", "5-20", "6-15", "6-21")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    parameter: object  # k, x, or a sporadic id string

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise UnsupportedParameter(f"unknown family {self.family!r}")
        p = self.parameter
        if self.family == "grid" and not (isinstance(p, int) and p > 1):
            raise UnsupportedParameter("grid needs an integer k > 1")
        if self.family == "triangle" and p not in (2, 3, 4):
            raise UnsupportedParameter("triangle is built for k in {2, 3, 4}")
        if self.family in ("cobwebPlus", "cobwebMinus") and not (
            isinstance(p, int) and p >= 3 and p % 2 == 1
        ):
            raise UnsupportedParameter("cobweb needs odd x >= 3")
        if self.family == "sporadic" and p not in SPORADIC_IDS:
            raise UnsupportedParameter(f"sporadic id must be one of {SPORADIC_IDS}")

    def kn(self) -> tuple[int, int]:
        """(k, n) of the matching symmetric collections."""
        p = self.parameter
        if self.family == "grid":
            return (p, 2 * p)
        if self.family == "triangle":
            return (p, 3 * p)
        if self.family == "cobwebPlus":
            return (p - 1, 2 * p)
        if self.family == "cobwebMinus":
            return (p + 1, 2 * p)
        k, n = self.parameter.split("-")
        return (int(k), int(n))


def _qp(k, n, positions, pairs) -> QP:
    order = sorted(positions, key=str)
    pairs = sorted(pairs, key=lambda p: (str(p[0]), str(p[1])))
    arrows = tuple(Arrow(i, s, t) for i, (s, t) in enumerate(pairs))
    faces, nondirected = plane_faces(positions, arrows)
    if nondirected:
        raise UnsupportedParameter("family embedding has a non-cyclic region")
    vertices = tuple((lbl, positions[lbl]) for lbl in order)
    return QP(k, n, vertices, arrows, tuple(faces))


def grid_quiver(k: int) -> QP:
    """(k-1) x (k-1) checkerboard grid: horizontal arrows leave even
    parity, vertical arrows leave odd parity, so every unit square is a
    cycle."""
    m = k - 1
    positions = {}
    pairs = []
    for r in range(m):
        for c in range(m):
            positions[(r, c)] = (Fraction(c), Fraction(-r))
    for r in range(m):
        for c in range(m - 1):
            a, b = (r, c), (r, c + 1)
            pairs.append((a, b) if (r + c) % 2 == 0 else (b, a))
    for r in range(m - 1):
        for c in range(m):
            a, b = (r, c), (r + 1, c)
            pairs.append((a, b) if (r + c) % 2 == 1 else (b, a))
    if m == 1:
        return QP(k, 2 * k, (((0, 0), (Fraction(0), Fraction(0))),), (), ())
    return _qp(k, 2 * k, positions, pairs)


def triangle_quiver(k: int) -> QP:
    """Triangular array with 2(k-1) rows; every small triangle is a cycle
    (arrows: up, left, and down-right)."""
    rows = 2 * (k - 1)
    positions = {}
    pairs = []
    h = Fraction(7, 8)  # any positive row height keeps the drawing planar
    for r in range(rows):
        for c in range(r + 1):
            positions[(r, c)] = (Fraction(2 * c - r, 2), -h * r)
    for r in range(rows):
        for c in range(r + 1):
            if c + 1 <= r:
                pairs.append(((r, c + 1), (r, c)))      # left
            if r + 1 < rows:
                pairs.append(((r, c), (r + 1, c + 1)))  # down-right
            if r > 0 and c <= r - 1:
                pairs.append(((r, c), (r - 1, c)))      # up
    return _qp(k, 3 * k, positions, pairs)


def cobweb_quiver(x: int, plus: bool) -> QP:
    """Cobweb on x(x-2) vertices: central x-gon c_1..c_x and rings
    d_{s,1}..d_{s,2x} for s = 1..(x-3)/2, all faces cyclic.  The minus
    variant runs the x-gon clockwise, the plus variant counterclockwise."""
    rings = (x - 3) // 2
    positions = {}
    pairs = []

    def pol(radius, deg):
        rad = math.radians(deg)
        s = 1 << 30
        return (
            Fraction(round(radius * math.sin(rad) * s), s),
            Fraction(round(radius * math.cos(rad) * s), s),
        )

    for t in range(1, x + 1):
        positions[("c", t)] = pol(1.0, 360.0 * t / x - 90.0 / x)
    for s in range(1, rings + 1):
        for t in range(1, 2 * x + 1):
            positions[("d", s, t)] = pol(s + 1.0, 180.0 * t / x)

    def c(t):
        return ("c", (t - 1) % x + 1)

    def d(s, t):
        return ("d", s, (t - 1) % (2 * x) + 1)

    for t in range(1, x + 1):
        pairs.append((c(t), c(t + 1)))  # x-gon clockwise
    for t in range(1, x + 1):
        if rings:
            pairs.append((c(t), d(1, 2 * t - 1)))
            pairs.append((d(1, 2 * t), c(t)))
    for s in range(1, rings + 1):
        for t in range(1, 2 * x + 1):
            if t % 2 == s % 2:
                pairs.append((d(s, t), d(s, t + 1)))
                pairs.append((d(s, t), d(s, t - 1)))
        if s < rings:
            for t in range(1, 2 * x + 1):
                if t % 2 == 1:
                    pairs.append((d(s + 1, t), d(s, t)))
                else:
                    pairs.append((d(s, t), d(s + 1, t)))
    if plus:
        pairs = [(b, a) for a, b in pairs]
    k = (x - 1) if plus else (x + 1)
    return _qp(k, 2 * x, positions, pairs)


def sporadic_quiver(fixture_id: str) -> QP:
    name = f"sporadic_{fixture_id.replace('-', '_')}.json"
    data = json.loads(resources.files("icequiver.fixtures").joinpath(name).read_text())
    positions = {
        v["id"]: (Fraction(v["pos"][0]), Fraction(v["pos"][1])) for v in data["vertices"]
    }
    pairs = [(a["src"], a["tgt"]) for a in data["arrows"]]
    return _qp(data["k"], data["n"], positions, pairs)


def family_quiver(spec: FamilySpec) -> QP:
    if spec.family == "grid":
        return grid_quiver(spec.parameter)
    if spec.family == "triangle":
        return triangle_quiver(spec.parameter)
    if spec.family == "cobwebPlus":
        return cobweb_quiver(spec.parameter, plus=True)
    if spec.family == "cobwebMinus":
        return cobweb_quiver(spec.parameter, plus=False)
    return sporadic_quiver(spec.parameter)


def face_census(qp: QP) -> dict[int, int]:
    census: dict[int, int] = {}
    for f in qp.faces:
        census[len(f.arrows)] = census.get(len(f.arrows), 0) + 1
    return census


def match_symmetric_collection(
    spec: FamilySpec, max_candidates: int = 100_000
) -> tuple[Collection, dict]:
    """A symmetric collection whose underline quiver is isomorphic, as a
    plane digraph, to the family quiver; returns the vertex witness."""
    target = family_quiver(spec)
    k, n = spec.kn()
    if target.k != k or target.n != n:
        raise UnsupportedParameter("family quiver carries unexpected (k, n)")
    target_code, target_order = qp_canonical_code(target)
    for coll in iter_symmetric(SearchConfig(k, n, max_solutions=max_candidates)):
        qp = underline(quiver_from_collection(coll))
        if len(qp.vertices) != len(target.vertices) or len(qp.arrows) != len(target.arrows):
            continue
        try:
            code, order = qp_canonical_code(qp)
        except InternalError:
            continue  # disconnected candidate cannot match a connected target
        if code == target_code:
            inv = {i: lbl for lbl, i in order.items()}
            witness = {lbl: inv[idx] for lbl, idx in target_order.items()}
            return coll, witness
    raise SearchExhausted(f"no symmetric collection matches {spec}")
