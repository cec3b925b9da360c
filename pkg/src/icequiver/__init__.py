"""Ice quivers with potential from maximal weakly separated collections.

The package builds the plane tiling of a maximal weakly separated
collection, reads off the ice quiver with potential, computes the
finite-dimensional Jacobian algebra of its frozen-free part by two
independent routes, decides self-injectivity via socles, and explores
geometric exchanges and cuts.  A small HTTP service exposes the same
operations to the interactive explorer under frontend/.
"""

from .subsets import (
    Collection,
    KSubset,
    all_intervals,
    interval,
    is_symmetric,
    shift,
    subset,
    validate_collection,
    weakly_separated,
)
from .tiling import Tiling, build_tiling, embed
from .quiver import (
    IceQP,
    QP,
    fz_mutate_quiver,
    geometric_exchange,
    nakayama_permutation,
    orbit_exchange,
    quiver_from_collection,
    rho_automorphism,
    rotation_order,
    underline,
)
from .profiles import (
    MapGenerator,
    Presentation,
    RimProfile,
    ext1_vanishes,
    hom_shift,
    presentation,
    stable_hom_dim,
)
from .oracle import TruncatedOracle
from .jacobian import (
    AlgebraTable,
    SelfInjectivityReport,
    jacobian_by_paths,
    jacobian_by_stable_hom,
    self_injectivity,
    verify_main_theorem,
)
from .cuts import (
    Cut,
    cut_mutation,
    enumerate_cuts,
    has_enough_cuts,
    is_homogeneous_cut,
    truncated_presentation,
)
from .families import FamilySpec, face_census, family_quiver, match_symmetric_collection
from .search import SearchConfig, enumerate_maximal, enumerate_symmetric, exchange_graph

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
