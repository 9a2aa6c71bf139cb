"""Mixed graphs with prescribed degrees and girth: generators, exact
verification, order bounds, and serialization."""

from .analysis import (
    BoundsReport,
    GirthReport,
    VerifyReport,
    ahm_bound,
    bounds_report,
    diameter,
    enumerate_cycles_upto,
    girth,
    is_strongly_connected,
    is_valid_mixed_cycle,
    mixed_lower_bound,
    moore_bound,
    regularity,
    verify_zrg,
)
from .generators import (
    FamilyParams,
    biaffine,
    bipartite_circulant,
    cage_136,
    circulant,
    family,
    lower_bound_witness,
    moore_tree,
    projective_incidence,
)
from .gf import FieldElement
from .graph import GraphError, MixedGraph
from .labels import Label
from .serialize import DocumentError, from_json, to_dot, to_json

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DocumentError",
    "FamilyParams",
    "FieldElement",
    "GirthReport",
    "GraphError",
    "Label",
    "MixedGraph",
    "VerifyReport",
    "ahm_bound",
    "biaffine",
    "bipartite_circulant",
    "bounds_report",
    "cage_136",
    "circulant",
    "diameter",
    "enumerate_cycles_upto",
    "family",
    "from_json",
    "girth",
    "is_strongly_connected",
    "is_valid_mixed_cycle",
    "lower_bound_witness",
    "mixed_lower_bound",
    "moore_bound",
    "moore_tree",
    "projective_incidence",
    "regularity",
    "to_dot",
    "to_json",
    "verify_zrg",
]
