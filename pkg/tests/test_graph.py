from __future__ import annotations

import json
from importlib import resources

import jsonschema
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin.graph import (
    EdgeKind,
    GraphError,
    ParseError,
    PresentationGraph,
    abelianisation_rank,
    component_of,
    connected_components,
    cut_graph,
    cycle_rank,
    defining_relations,
    edge_kind,
    even_leaf_retraction,
    graph_from_json,
    graph_to_dict,
    graph_to_dot,
    graph_to_json,
    is_extra_large,
    is_large_type,
    is_spherical_triangle,
    is_two_dimensional,
    label_multiset,
    large_type_advisory,
    load_graph,
    parse_graph,
    parse_word,
    random_graph,
    separating_odd_edges,
    serialize_graph,
    spherical_triangles,
)
from oracles import abelianisation_rank_snf


def E(*edges, vertices=()):
    return PresentationGraph.from_edges(edges, vertices)


TRIANGLE_333 = E(("a", "b", 3), ("a", "c", 3), ("b", "c", 3))
PATH_436 = E(("c", "a", 4), ("a", "b", 3), ("b", "d", 6))


@st.composite
def graphs(draw, max_n=7, labels=(2, 3, 4, 5, 6)):
    n = draw(st.integers(min_value=1, max_value=max_n))
    verts = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(st.sampled_from((0,) + tuple(labels)))
            if m:
                edges.append((verts[i], verts[j], m))
    return PresentationGraph(tuple(verts), tuple(edges))


# -- construction and parsing --------------------------------------------------


def test_graph_normalises_order():
    G = PresentationGraph(("b", "a"), (("b", "a", 3),))
    assert G.vertices == ("a", "b")
    assert G.edges == (("a", "b", 3),)
    assert G.label("b", "a") == 3
    assert G == E(("a", "b", 3))


@pytest.mark.parametrize(
    "vertices, edges",
    [
        (("a", "a"), ()),
        (("a",), (("a", "a", 3),)),
        (("a", "b"), (("a", "c", 3),)),
        (("a", "b"), (("a", "b", 1),)),
        (("a", "b"), (("a", "b", 3), ("b", "a", 4))),
        (("a", "b"), (("a", "b", True),)),
        (("1x",), ()),
    ],
)
def test_graph_rejects_invalid(vertices, edges):
    with pytest.raises(GraphError):
        PresentationGraph(vertices, edges)


def test_parse_graph_with_comments():
    G = parse_graph("# header\ngen a\ngen b  # trailing\n\nrel a b 3\n")
    assert G == E(("a", "b", 3))


@pytest.mark.parametrize(
    "text, line, kind",
    [
        ("gen a\nrel a b 3\n", 2, "unknown-vertex"),
        ("gen a\ngen a\n", 2, "duplicate-vertex"),
        ("gen a\ngen b\nrel a b x\n", 3, "non-integer-label"),
        ("gen a\ngen b\nrel a b 1\n", 3, "label-too-small"),
        ("gen a\ngen b\nrel a b 3\nrel b a 4\n", 4, "duplicate-edge"),
        ("gen a\nrel a a 3\n", 2, "loop"),
        ("gen 9a\n", 1, "bad-name"),
        ("gen a b\n", 1, "syntax"),
        ("edge a b\n", 1, "syntax"),
        ("# nothing\n", 0, "empty"),
    ],
)
def test_parse_errors_carry_line_and_kind(text, line, kind):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert info.value.kind == kind
    assert str(info.value).startswith(f"line {line}:")


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_dsl_and_json_round_trip(G):
    assert parse_graph(serialize_graph(G)) == G
    assert graph_from_json(graph_to_json(G)) == G
    assert load_graph(graph_to_json(G)) == G
    assert load_graph(serialize_graph(G)) == G


def test_graph_json_validates_against_schema():
    schema = json.loads(resources.files("artin").joinpath("schemas", "graph.schema.json").read_text())
    jsonschema.validate(graph_to_dict(PATH_436), schema)
    with pytest.raises(GraphError):
        graph_from_json('{"vertices": ["a"], "edges": [], "extra": 1}')


def test_dot_export_lists_labels():
    dot = graph_to_dot(PATH_436)
    assert dot.startswith("graph G {")
    assert '"a" -- "b" [label=3];' in dot


def test_bundled_corpus_parses():
    folder = resources.files("artin").joinpath("data")
    names = sorted(f.name for f in folder.iterdir() if f.name.endswith(".graph"))
    assert "triangle_333.graph" in names
    for name in names:
        parse_graph(folder.joinpath(name).read_text())


# -- type predicates --------------------------------------------------------------


def test_type_predicates():
    assert is_large_type(TRIANGLE_333) and not is_extra_large(TRIANGLE_333)
    assert is_extra_large(E(("a", "b", 4)))
    assert not is_large_type(E(("a", "b", 2)))
    assert label_multiset(PATH_436) == (3, 4, 6)


def test_discrete_graph_is_vacuously_large_but_not_two_dimensional():
    G = E(vertices=("a", "b"))
    assert is_large_type(G)
    assert large_type_advisory(G) == "vacuous (no edges)"
    assert not is_two_dimensional(G)
    assert large_type_advisory(TRIANGLE_333) is None


@pytest.mark.parametrize(
    "labels, spherical",
    [((2, 3, 5), True), ((2, 3, 4), True), ((2, 2, 7), True), ((2, 3, 6), False), ((3, 3, 3), False), ((2, 4, 4), False)],
)
def test_spherical_triangles(labels, spherical):
    assert is_spherical_triangle(*labels) is spherical
    G = E(("a", "b", labels[0]), ("a", "c", labels[1]), ("b", "c", labels[2]))
    assert bool(spherical_triangles(G)) is spherical
    assert is_two_dimensional(G) is not spherical


def test_open_triangle_is_two_dimensional():
    # a 3-generator parabolic with a missing edge has an infinite Coxeter group
    assert is_two_dimensional(E(("a", "b", 2), ("a", "c", 2)))


# -- edge kinds, cut graph, ranks ----------------------------------------------------


def test_edge_kinds():
    G = E(("x", "y", 2), ("x", "z", 3), ("p", "q", 5))
    assert edge_kind(G, "x", "y") is EdgeKind.OUTER
    assert edge_kind(G, "y", "x") is EdgeKind.OUTER
    assert edge_kind(G, "p", "q") is EdgeKind.ISOLATED
    assert edge_kind(TRIANGLE_333, "a", "b") is EdgeKind.INNER
    with pytest.raises(GraphError):
        edge_kind(G, "y", "z")


def test_cut_graph_severs_even_edges():
    cut = cut_graph(PATH_436)
    assert ("a", "b") in cut.edges
    assert len(cut.vertices) == 4 + 4
    stubs = [v for v in cut.vertices if "@" in v]
    assert sorted(stubs) == ["ac@a", "ac@c", "bd@b", "bd@d"]
    assert cut.provenance[("a", "ac@a")] == ("a", "c")
    comp = component_of(cut, "a")
    assert sorted(comp.vertices) == ["a", "ac@a", "b", "bd@b"]
    assert cycle_rank(comp) == 0


def test_cycle_rank_matches_networkx():
    rng = np.random.default_rng(1)
    for _ in range(50):
        G = random_graph(rng, int(rng.integers(1, 9)))
        g = nx.Graph()
        g.add_nodes_from(G.vertices)
        g.add_edges_from(G.edge_pairs())
        expected = g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)
        assert cycle_rank(G) == expected
        assert len(connected_components(G)) == nx.number_connected_components(g)


def test_component_of_unknown_vertex():
    with pytest.raises(GraphError):
        component_of(PATH_436, "zz")


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_abelianisation_rank_matches_smith_form(G):
    assert abelianisation_rank(G) == abelianisation_rank_snf(G.vertices, G.edges)
    assert abelianisation_rank(G) >= 1


# -- separating edges ------------------------------------------------------------------


def test_separating_odd_edges():
    assert separating_odd_edges(PATH_436) == [("a", "b")]
    assert separating_odd_edges(TRIANGLE_333) == []
    # a pendant odd edge does not split the graph into two proper pieces
    assert separating_odd_edges(E(("a", "b", 3), ("b", "c", 4))) == []


# -- words and the even-leaf retraction -------------------------------------------------


def test_parse_word():
    assert parse_word("z x y y^-1 y") == [("z", 1), ("x", 1), ("y", 1), ("y", -1), ("y", 1)]
    assert parse_word("x⁻¹ y^0") == [("x", -1)]
    with pytest.raises(GraphError):
        parse_word("x^")


def test_defining_relations():
    rels = defining_relations(E(("a", "b", 3)))
    assert rels == [([("a", 1), ("b", 1), ("a", 1)], [("b", 1), ("a", 1), ("b", 1)])]


def test_even_leaf_retraction():
    G = E(("x", "y", 2), ("x", "z", 3))
    r = even_leaf_retraction(G, "y")
    assert r.respects_relations()
    assert r.evaluate("y x y^-1 z y") == 1
    assert r.evaluate("x z x^-1") == 0
    with pytest.raises(GraphError):
        r.evaluate("w")


@pytest.mark.parametrize("vertex", ["z", "x"])
def test_even_leaf_retraction_refuses(vertex):
    G = E(("x", "y", 2), ("x", "z", 3))
    with pytest.raises(GraphError):
        even_leaf_retraction(G, vertex)


@settings(max_examples=100, deadline=None)
@given(graphs(labels=(2, 4, 6, 3, 5)))
def test_retraction_exists_exactly_at_even_leaves(G):
    for y in G.vertices:
        nbrs = G.neighbours(y)
        expected = len(nbrs) == 1 and next(iter(nbrs.values())) % 2 == 0
        try:
            r = even_leaf_retraction(G, y)
        except GraphError:
            assert not expected
        else:
            assert expected and r.respects_relations()
