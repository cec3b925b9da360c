"""Shared reference fixtures: the symmetric (3,9) collection, its quiver,
the single-mutation quiver, and the two reference cuts."""
from icequiver.subsets import subset, validate_collection


def s39(digits):
    return subset((int(c) for c in digits), 9)


REFERENCE_39_LABELS = [
    "789", "891", "912", "123", "234", "345", "456", "567", "678",
    "179", "134", "467", "178", "124", "457", "147", "127", "145", "478",
]


def reference_39():
    return validate_collection([s39(d) for d in REFERENCE_39_LABELS], 3, 9)


# the full 36-arrow quiver of the symmetric (3,9) collection
REFERENCE_39_ARROWS = [
    ("456", "457"), ("457", "145"), ("145", "147"), ("134", "145"),
    ("124", "134"), ("134", "234"), ("457", "467"), ("467", "567"),
    ("145", "345"), ("345", "134"), ("123", "124"), ("147", "124"),
    ("127", "147"), ("147", "178"), ("478", "147"), ("147", "457"),
    ("124", "127"), ("179", "127"), ("178", "179"), ("178", "478"),
    ("467", "478"), ("127", "912"), ("912", "179"), ("179", "891"),
    ("789", "178"), ("478", "678"), ("678", "467"), ("234", "123"),
    ("234", "345"), ("567", "456"), ("567", "678"), ("891", "912"),
    ("891", "789"), ("345", "456"), ("678", "789"), ("912", "123"),
]

# internal arrows after mutating the reference collection at 134
MUTATED_39_INTERNAL_ARROWS = [
    ("145", "147"), ("127", "147"), ("147", "178"), ("457", "467"),
    ("457", "145"), ("145", "245"), ("124", "145"), ("147", "124"),
    ("245", "124"), ("478", "147"), ("147", "457"), ("124", "127"),
    ("179", "127"), ("178", "179"), ("178", "478"), ("467", "478"),
]

REFERENCE_CUT = [("457", "145"), ("457", "467"), ("147", "178"), ("147", "124")]
MUTATED_CUT = [("147", "457"), ("147", "178"), ("147", "124")]


def arrow_pairs(pairs):
    return {(s39(a), s39(b)) for a, b in pairs}
