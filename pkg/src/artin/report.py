"""Aggregate analysis report for a presentation graph."""

from __future__ import annotations

from .centralisers import generator_centraliser
from .graph import (
    GraphError,
    PresentationGraph,
    abelianisation_rank,
    edge_kind,
    graph_to_dict,
    is_extra_large,
    is_large_type,
    is_two_dimensional,
    label_multiset,
    large_type_advisory,
)
from .isomorphism import rigidity_report, theorem_a_gate


def analyze(G: PresentationGraph) -> dict:
    large = is_large_type(G)
    two_dim = is_two_dimensional(G)
    if two_dim or large:
        centralisers = {v: generator_centraliser(G, v).to_dict() for v in G.vertices}
        note = None
    else:
        centralisers = None
        note = "rank formula needs a two-dimensional or large-type graph"
    report = {
        "graph": graph_to_dict(G),
        "summary": {"vertices": len(G.vertices), "edges": len(G.edges)},
        "largeType": large,
        "largeTypeAdvisory": large_type_advisory(G),
        "extraLarge": is_extra_large(G),
        "twoDimensional": two_dim,
        "labelMultiset": list(label_multiset(G)),
        "edgeKinds": [
            {"edge": [u, v], "m": m, "kind": edge_kind(G, u, v).value} for u, v, m in G.edges
        ],
        "abelianisationRank": abelianisation_rank(G),
        "centralisers": centralisers,
        "centraliserNote": note,
        "rigidity": rigidity_report(G),
        "gate": theorem_a_gate(G).to_dict(),
    }
    if (report["gate"]["gate"] == "large-type") != (large and two_dim):
        raise GraphError("inconsistent report: gate disagrees with the type predicates")
    return report
