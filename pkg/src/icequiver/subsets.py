"""Cyclic k-subsets of Z/n, weak separation, and validated collections.

Subsets are kept as canonical strictly increasing tuples of residues in
1..n.  All cyclic arithmetic derives from this representation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import CrossingPair, ParameterMismatch


@dataclass(frozen=True, order=True)
class KSubset:
    """A k-element subset of Z/n, stored as sorted 1-based residues."""

    n: int
    elems: tuple[int, ...]

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError("modulus must be positive")
        if not all(1 <= e <= self.n for e in self.elems):
            raise ValueError(f"elements {self.elems} out of range 1..{self.n}")
        if any(a >= b for a, b in zip(self.elems, self.elems[1:])):
            raise ValueError(f"elements {self.elems} not strictly increasing")

    @property
    def k(self) -> int:
        return len(self.elems)

    def __contains__(self, item: int) -> bool:
        return item in set(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __str__(self):
        if self.n < 10:
            return "".join(str(e) for e in self.elems)
        return "{" + ",".join(str(e) for e in self.elems) + "}"

    def mask(self) -> int:
        """Bitmask with bit e-1 set for every element e."""
        m = 0
        for e in self.elems:
            m |= 1 << (e - 1)
        return m


def subset(elems: Iterable[int], n: int) -> KSubset:
    return KSubset(n, tuple(sorted(set(elems))))


def interval(i: int, k: int, n: int) -> KSubset:
    """The cyclic interval {i+1, ..., i+k} of Z/n."""
    return subset(((i + j - 1) % n + 1 for j in range(1, k + 1)), n)


def all_intervals(k: int, n: int) -> list[KSubset]:
    return [interval(i, k, n) for i in range(n)]


def shift(I: KSubset, s: int) -> KSubset:
    """Add s to every element mod n; a bijection on k-subsets for each s."""
    return subset((((e - 1 + s) % I.n) + 1 for e in I.elems), I.n)


def weakly_separated(I: KSubset, J: KSubset) -> bool:
    """No cyclically ordered a, b, c, d with a, c in I\\J and b, d in J\\I.

    Linear-time arc test: walk the circle once and count how often the
    symmetric-difference pattern switches between the two sides.  The pair
    crosses exactly when the cyclic block count exceeds two.
    """
    if I.n != J.n or I.k != J.k:
        raise ParameterMismatch(f"cannot compare {I} (k={I.k},n={I.n}) with {J} (k={J.k},n={J.n})")
    a_mask = set(I.elems) - set(J.elems)
    b_mask = set(J.elems) - set(I.elems)
    first = last = 0
    switches = 0
    for i in range(1, I.n + 1):
        t = 1 if i in a_mask else 2 if i in b_mask else 0
        if not t:
            continue
        if last and t != last:
            switches += 1
        if not first:
            first = t
        last = t
    if first and last != first:
        switches += 1
    return switches <= 2


@dataclass(frozen=True)
class Collection:
    """A family of pairwise weakly separated k-subsets of Z/n."""

    k: int
    n: int
    members: tuple[KSubset, ...]
    maximal: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __contains__(self, item: KSubset) -> bool:
        return item in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    @property
    def expected_size(self) -> int:
        return self.k * (self.n - self.k) + 1

    def internal_members(self) -> list[KSubset]:
        frozen = set(all_intervals(self.k, self.n))
        return [m for m in self.members if m not in frozen]

    def replace(self, old: KSubset, new: KSubset) -> "Collection":
        members = [new if m == old else m for m in self.members]
        return validate_collection(members, self.k, self.n)


def validate_collection(members: Iterable[KSubset], k: int, n: int) -> Collection:
    """Check pairwise weak separation and set the maximal flag.

    Maximal means: exactly k(n-k)+1 members including all n cyclic
    intervals.  A crossing pair raises; anything else comes back as a
    validated (possibly non-maximal) Collection.
    """
    members = sorted(set(members))
    for m in members:
        if m.n != n or m.k != k:
            raise ParameterMismatch(f"{m} does not have (k,n)=({k},{n})")
    for I, J in combinations(members, 2):
        if not weakly_separated(I, J):
            raise CrossingPair(I, J)
    maximal = (
        len(members) == k * (n - k) + 1
        and all(iv in set(members) for iv in all_intervals(k, n))
    )
    return Collection(k, n, tuple(members), maximal)


def shift_collection(coll: Collection, s: int) -> Collection:
    return Collection(coll.k, coll.n, tuple(shift(m, s) for m in coll.members), coll.maximal)


def reflect_subset(I: KSubset) -> KSubset:
    """Apply the reflection i -> -i mod n (with n fixed)."""
    return subset((((-e) % I.n) or I.n for e in I.elems), I.n)


def reflect_collection(coll: Collection) -> Collection:
    """Apply i -> -i mod n to every member; preserves weak separation."""
    return Collection(coll.k, coll.n, tuple(reflect_subset(m) for m in coll.members), coll.maximal)


def is_symmetric(coll: Collection) -> bool:
    """True iff adding k to every member permutes the collection."""
    members = set(coll.members)
    return {shift(m, coll.k) for m in members} == members
