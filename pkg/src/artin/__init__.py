"""Algebraic invariants of Artin groups given by labelled presentation graphs."""

from .centralisers import (
    Decision,
    DihedralElliptic,
    GeneratorPower,
    Hyperbolic,
    IsolatedOddEdgeWarning,
    classify_centraliser,
    free_rank,
    generator_centraliser,
    generator_centralisers,
    has_ZxF2_centraliser,
)
from .deligne import DeligneBall, CosetVertex, build_ball, export_complex, fixed_slice, slice_intersection
from .dihedral import (
    DihedralWord,
    GarsideNF,
    central_power_order,
    dihedral_centraliser_shape,
    garside_nf,
    has_central_power,
    is_central,
    is_conjugate_to_generator_power,
    words_equal,
)
from .graph import (
    EdgeKind,
    GraphError,
    ParseError,
    PresentationGraph,
    abelianisation_rank,
    cut_graph,
    edge_kind,
    even_leaf_retraction,
    is_extra_large,
    is_large_type,
    is_two_dimensional,
    label_multiset,
    load_graph,
    parse_graph,
    serialize_graph,
)
from .isomorphism import (
    OutsideLargeTypeWarning,
    TwistMove,
    apply_twist,
    canonical_form,
    graphs_isomorphic,
    is_rigid,
    large_type_isomorphic,
    theorem_a_gate,
    twist_class,
    twist_moves,
)
from .report import analyze
from .shapes import CentraliserShape

__version__ = "0.1.0"

__all__ = [
    "CentraliserShape",
    "CosetVertex",
    "Decision",
    "DeligneBall",
    "DihedralElliptic",
    "DihedralWord",
    "EdgeKind",
    "GarsideNF",
    "GeneratorPower",
    "GraphError",
    "Hyperbolic",
    "IsolatedOddEdgeWarning",
    "OutsideLargeTypeWarning",
    "ParseError",
    "PresentationGraph",
    "TwistMove",
    "abelianisation_rank",
    "analyze",
    "apply_twist",
    "build_ball",
    "canonical_form",
    "central_power_order",
    "classify_centraliser",
    "cut_graph",
    "dihedral_centraliser_shape",
    "edge_kind",
    "even_leaf_retraction",
    "export_complex",
    "fixed_slice",
    "free_rank",
    "garside_nf",
    "generator_centraliser",
    "generator_centralisers",
    "graphs_isomorphic",
    "has_ZxF2_centraliser",
    "has_central_power",
    "is_central",
    "is_conjugate_to_generator_power",
    "is_extra_large",
    "is_large_type",
    "is_rigid",
    "is_two_dimensional",
    "label_multiset",
    "large_type_isomorphic",
    "load_graph",
    "parse_graph",
    "serialize_graph",
    "slice_intersection",
    "theorem_a_gate",
    "twist_class",
    "twist_moves",
    "words_equal",
]
