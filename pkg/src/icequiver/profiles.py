"""Rank-1 modules as rim profiles and the combinatorial Hom calculus.

A k-subset I of Z/n defines a periodic height profile: walking columns
0..n, step down at i in I, up otherwise, anchored at height 0 on column 0.
The minimal embedding of one profile into another gives the generator of
the (rank one) Hom space; its shift is the vertical offset measured in
half steps of the central parameter t (t itself lowers a profile by 2).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterMismatch
from .subsets import KSubset, interval, shift, subset, weakly_separated


@dataclass(frozen=True)
class RimProfile:
    I: KSubset
    anchor: int = 0

    @property
    def steps(self) -> tuple[str, ...]:
        members = set(self.I.elems)
        return tuple("down" if i in members else "up" for i in range(1, self.I.n + 1))

    def heights(self) -> tuple[int, ...]:
        """Heights on columns 0..n; h(n) - h(0) = n - 2k."""
        h = [self.anchor]
        members = set(self.I.elems)
        for i in range(1, self.I.n + 1):
            h.append(h[-1] + (-1 if i in members else 1))
        return tuple(h)

    def render(self) -> str:
        """Small ASCII picture of one period of the rim walk."""
        hs = self.heights()
        top, bottom = max(hs), min(hs)
        rows = []
        for level in range(top, bottom - 1, -1):
            rows.append(
                "".join("*" if h == level else " " for h in hs)
            )
        return "\n".join(rows)


@lru_cache(maxsize=None)
def _heights(I: KSubset) -> tuple[int, ...]:
    return RimProfile(I).heights()


def _check(I: KSubset, J: KSubset):
    if I.n != J.n or I.k != J.k:
        raise ParameterMismatch(f"{I} and {J} do not share (k, n)")


def hom_shift(I: KSubset, J: KSubset) -> int:
    """Shift of the minimal-cokernel embedding generating Hom(L_I, L_J).

    With both profiles anchored at height 0 on column 0, the embedded copy
    of I's profile must not rise above J's; the least admissible drop is
    the maximum of f_I - f_J over one period.  Always even and >= 0.
    """
    _check(I, J)
    fi, fj = _heights(I), _heights(J)
    s = max(fi[i] - fj[i] for i in range(I.n))
    assert s >= 0 and s % 2 == 0
    return s


@dataclass(frozen=True)
class MapGenerator:
    """t^(shift/2) times the minimal embedding src -> tgt, up to scalar."""

    src: KSubset
    tgt: KSubset
    shift: int

    def __post_init__(self):
        base = hom_shift(self.src, self.tgt)
        if self.shift < base or (self.shift - base) % 2:
            raise ValueError(f"no generator {self.src}->{self.tgt} at shift {self.shift}")

    @property
    def t_degree(self) -> int:
        return (self.shift - hom_shift(self.src, self.tgt)) // 2

    def compose(self, other: "MapGenerator") -> "MapGenerator":
        """self after other (other first); shifts add."""
        if other.tgt != self.src:
            raise ParameterMismatch("maps not composable")
        return MapGenerator(other.src, self.tgt, self.shift + other.shift)


def generator(I: KSubset, J: KSubset) -> MapGenerator:
    return MapGenerator(I, J, hom_shift(I, J))


def ext1_vanishes(I: KSubset, J: KSubset) -> bool:
    """Rigidity of the pair of rank-1 modules; coincides with weak separation."""
    _check(I, J)
    return weakly_separated(I, J)


def successors_u_v(I: KSubset) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """U = {u not in I : u+1 in I}, V = {v in I : v+1 not in I}."""
    n = I.n
    members = set(I.elems)
    U = tuple(u for u in range(1, n + 1) if u not in members and (u % n) + 1 in members)
    V = tuple(v for v in range(1, n + 1) if v in members and (v % n) + 1 not in members)
    return U, V


@dataclass(frozen=True)
class Presentation:
    """0 -> L_{I+k} -f-> (+)_V L_{v+[k]} -d-> (+)_U L_{u+[k]} -h-> L_I -> 0."""

    I: KSubset
    U: tuple[int, ...]
    V: tuple[int, ...]
    f: tuple[MapGenerator, ...]  # indexed by V
    h: tuple[MapGenerator, ...]  # indexed by U
    d: tuple[tuple[int, ...], ...]  # sign matrix, rows U, columns V
    d_maps: tuple[tuple[MapGenerator | None, ...], ...]

    @property
    def is_projective(self) -> bool:
        return all(all(s == 0 for s in row) for row in self.d)


def presentation(I: KSubset) -> Presentation:
    n, k = I.n, I.k
    U, V = successors_u_v(I)
    assert len(U) == len(V)
    Ik = shift(I, k)
    f = tuple(MapGenerator(Ik, interval(v, k, n), hom_shift(Ik, interval(v, k, n))) for v in V)
    h = tuple(MapGenerator(interval(u, k, n), I, hom_shift(interval(u, k, n), I)) for u in U)

    projective = len(U) == 1 and set(I.elems) == set(interval(U[0], k, n).elems)
    cyc = sorted(set(U) | set(V))
    signs = []
    maps = []
    for u in U:
        row_s = []
        row_m = []
        for v in V:
            s = 0
            if not projective:
                iu, iv = cyc.index(u), cyc.index(v)
                m = len(cyc)
                if (iv - iu) % m == 1:
                    s = +1  # u is the predecessor of v
                elif (iu - iv) % m == 1:
                    s = -1  # u is the successor of v
            row_s.append(s)
            row_m.append(
                MapGenerator(
                    interval(v, k, n),
                    interval(u, k, n),
                    hom_shift(interval(v, k, n), interval(u, k, n)),
                )
                if s
                else None
            )
        signs.append(tuple(row_s))
        maps.append(tuple(row_m))
    return Presentation(I, U, V, f, h, tuple(signs), tuple(maps))


def stable_hom_dim(I: KSubset, J: KSubset) -> int:
    """dim of Hom(L_I, L_J) modulo maps factoring through the projectives.

    t^N times the generator factors through the projective at P as soon as
    N reaches (hom_shift(I,P) + hom_shift(P,J) - hom_shift(I,J))/2, so the
    stable dimension is the minimum of that excess over the n intervals.
    """
    _check(I, J)
    base = hom_shift(I, J)
    best = None
    for i in range(I.n):
        P = interval(i, I.k, I.n)
        excess = (hom_shift(I, P) + hom_shift(P, J) - base) // 2
        best = excess if best is None else min(best, excess)
    return best
