"""Exception types shared across the package."""


class IceQuiverError(Exception):
    """Base class for all package errors."""


class ParameterMismatch(IceQuiverError):
    """Two objects with incompatible (k, n) were combined."""


class CrossingPair(IceQuiverError):
    """A pair of k-subsets in a collection is not weakly separated."""

    def __init__(self, first, second):
        self.first = first
        self.second = second
        super().__init__(f"crossing pair: {first} / {second}")


class EmbeddingDegenerate(IceQuiverError):
    """Two collection members map to the same point of the plane."""


class NotSymmetric(IceQuiverError):
    """The operation needs a collection invariant under adding k."""


class NotMutable(IceQuiverError):
    """Geometric exchange requested at a vertex that is frozen or has valency != 4."""

    def __init__(self, label, valency=None):
        self.label = label
        self.valency = valency
        msg = f"vertex {label} is not mutable"
        if valency is not None:
            msg += f" (valency {valency})"
        super().__init__(msg)


class OrbitNotIndependent(IceQuiverError):
    """Two vertices of the same Nakayama orbit are joined by an arrow."""


class NotStrict(IceQuiverError):
    """Cut-mutation requested at a vertex that is not a strict source or sink."""

    def __init__(self, label):
        self.label = label
        super().__init__(f"vertex {label} is not a strict source or sink for this cut")


class NoStabilization(IceQuiverError):
    """The path-quotient computation hit its degree cap without stabilizing."""

    def __init__(self, max_degree):
        self.max_degree = max_degree
        super().__init__(f"dimension growth did not stabilize below degree {max_degree}")


class UnsupportedParameter(IceQuiverError):
    """A family generator was asked for a parameter outside its range."""


class SearchExhausted(IceQuiverError):
    """No symmetric collection matching the requested quiver within bounds."""


class InternalError(IceQuiverError):
    """An internal consistency check failed; indicates a construction bug."""
