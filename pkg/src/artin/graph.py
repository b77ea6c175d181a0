"""Presentation graphs and their purely graph-theoretic invariants.

A presentation graph is a finite simple graph whose edges carry integer
labels ``m >= 2``. A missing edge stands for the label infinity and is never
stored.
"""

from __future__ import annotations

import enum
import json
import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class GraphError(ValueError):
    """Invalid graph data or a query that does not apply to the graph."""


class ParseError(GraphError):
    def __init__(self, line: int, kind: str, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.kind = kind


Edge = tuple[str, str]


def edge_key(u: str, v: str) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class PresentationGraph:
    """Immutable labelled graph; vertices and edges are kept sorted."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, int], ...] = ()
    _labels: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _adj: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        if len(set(verts)) != len(verts):
            dup = [v for v, c in Counter(verts).items() if c > 1]
            raise GraphError(f"duplicate vertex {dup[0]!r}")
        for v in verts:
            if not isinstance(v, str) or not NAME_RE.match(v):
                raise GraphError(f"invalid vertex name {v!r}")
        vset = set(verts)
        labels: dict[Edge, int] = {}
        for u, v, m in self.edges:
            if u not in vset or v not in vset:
                raise GraphError(f"edge {u}-{v} uses an unknown vertex")
            if u == v:
                raise GraphError(f"loop at {u}")
            if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 2:
                raise GraphError(f"edge {u}-{v}: label must be an integer >= 2, got {m!r}")
            key = edge_key(u, v)
            if key in labels:
                raise GraphError(f"duplicate edge {key[0]}-{key[1]}")
            labels[key] = int(m)
        adj: dict[str, dict[str, int]] = {v: {} for v in verts}
        for (u, v), m in labels.items():
            adj[u][v] = m
            adj[v][u] = m
        object.__setattr__(self, "vertices", tuple(sorted(verts)))
        object.__setattr__(self, "edges", tuple(sorted((u, v, m) for (u, v), m in labels.items())))
        object.__setattr__(self, "_labels", labels)
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str, int]], vertices: Iterable[str] = ()) -> PresentationGraph:
        edges = list(edges)
        verts = list(dict.fromkeys([*vertices, *(x for u, v, _ in edges for x in (u, v))]))
        return cls(tuple(verts), tuple(edges))

    def label(self, u: str, v: str) -> int | None:
        return self._labels.get(edge_key(u, v))

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._labels

    def neighbours(self, v: str) -> dict[str, int]:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")
        return dict(self._adj[v])

    def valence(self, v: str) -> int:
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")
        return len(self._adj[v])

    def edge_pairs(self) -> list[Edge]:
        return [(u, v) for u, v, _ in self.edges]

    def induced(self, keep: Iterable[str]) -> PresentationGraph:
        keep = set(keep)
        return PresentationGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def relabel(self, mapping: dict[str, str]) -> PresentationGraph:
        return PresentationGraph(
            tuple(mapping[v] for v in self.vertices),
            tuple((mapping[u], mapping[v], m) for u, v, m in self.edges),
        )

    def __len__(self) -> int:
        return len(self.vertices)


# -- serialisation ---------------------------------------------------------


def parse_graph(text: str) -> PresentationGraph:
    """Parse the line-oriented ``gen``/``rel`` DSL.

    >>> parse_graph("gen a\\ngen b\\nrel a b 3").edges
    (('a', 'b', 3),)
    """
    verts: list[str] = []
    seen: set[str] = set()
    labels: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "gen":
            if len(tokens) != 2:
                raise ParseError(lineno, "syntax", "expected 'gen <name>'")
            name = tokens[1]
            if not NAME_RE.match(name):
                raise ParseError(lineno, "bad-name", f"invalid generator name {name!r}")
            if name in seen:
                raise ParseError(lineno, "duplicate-vertex", f"duplicate generator {name!r}")
            seen.add(name)
            verts.append(name)
        elif head == "rel":
            if len(tokens) != 4:
                raise ParseError(lineno, "syntax", "expected 'rel <name> <name> <int>'")
            u, v, m_text = tokens[1:]
            for name in (u, v):
                if name not in seen:
                    raise ParseError(lineno, "unknown-vertex", f"unknown generator {name!r}")
            if u == v:
                raise ParseError(lineno, "loop", f"loop edge at {u!r}")
            if not re.fullmatch(r"[+-]?\d+", m_text):
                raise ParseError(lineno, "non-integer-label", f"label {m_text!r} is not an integer")
            m = int(m_text)
            if m < 2:
                raise ParseError(lineno, "label-too-small", f"label {m} is smaller than 2")
            key = edge_key(u, v)
            if key in labels:
                raise ParseError(lineno, "duplicate-edge", f"duplicate edge {key[0]}-{key[1]}")
            labels[key] = m
        else:
            raise ParseError(lineno, "syntax", f"unknown directive {head!r}")
    if not verts:
        raise ParseError(0, "empty", "graph has no generators")
    return PresentationGraph(tuple(verts), tuple((u, v, m) for (u, v), m in labels.items()))


def serialize_graph(G: PresentationGraph) -> str:
    lines = [f"gen {v}" for v in G.vertices]
    lines += [f"rel {u} {v} {m}" for u, v, m in G.edges]
    return "\n".join(lines) + "\n"


def graph_to_dict(G: PresentationGraph) -> dict:
    return {"vertices": list(G.vertices), "edges": [{"u": u, "v": v, "m": m} for u, v, m in G.edges]}


def graph_from_dict(data: dict) -> PresentationGraph:
    if set(data) != {"vertices", "edges"}:
        raise GraphError("graph JSON needs exactly the keys 'vertices' and 'edges'")
    edges = []
    for e in data["edges"]:
        if set(e) != {"u", "v", "m"}:
            raise GraphError("edge JSON needs exactly the keys 'u', 'v' and 'm'")
        edges.append((e["u"], e["v"], e["m"]))
    return PresentationGraph(tuple(data["vertices"]), tuple(edges))


def graph_to_json(G: PresentationGraph) -> str:
    return json.dumps(graph_to_dict(G))


def graph_from_json(text: str) -> PresentationGraph:
    return graph_from_dict(json.loads(text))


def graph_to_dot(G: PresentationGraph, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    out += [f'  "{v}";' for v in G.vertices]
    out += [f'  "{u}" -- "{v}" [label={m}];' for u, v, m in G.edges]
    out.append("}")
    return "\n".join(out) + "\n"


def load_graph(text: str) -> PresentationGraph:
    """Accept either the DSL or the JSON form."""
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return parse_graph(text)


# -- type predicates -------------------------------------------------------


def is_large_type(G: PresentationGraph) -> bool:
    return all(m >= 3 for _, _, m in G.edges)


def large_type_advisory(G: PresentationGraph) -> str | None:
    """Non-empty when `is_large_type` holds only vacuously."""
    return "vacuous (no edges)" if not G.edges else None


def is_extra_large(G: PresentationGraph) -> bool:
    return all(m >= 4 for _, _, m in G.edges)


def triangles(G: PresentationGraph) -> list[tuple[str, str, str]]:
    out = []
    for u, v, _ in G.edges:
        for w in sorted(set(G._adj[u]) & set(G._adj[v])):
            if w > v:
                out.append((u, v, w))
    return out


def is_spherical_triangle(p: int, q: int, r: int) -> bool:
    # 1/p + 1/q + 1/r > 1, cleared of denominators
    return q * r + p * r + p * q > p * q * r


def spherical_triangles(G: PresentationGraph) -> list[tuple[str, str, str]]:
    return [
        (a, b, c)
        for a, b, c in triangles(G)
        if is_spherical_triangle(G.label(a, b), G.label(a, c), G.label(b, c))
    ]


def is_two_dimensional(G: PresentationGraph) -> bool:
    # a 3-generator parabolic with a missing edge is never spherical
    return bool(G.edges) and not spherical_triangles(G)


def label_multiset(G: PresentationGraph) -> tuple[int, ...]:
    return tuple(sorted(m for _, _, m in G.edges))


# -- edge trichotomy -------------------------------------------------------


class EdgeKind(enum.Enum):
    ISOLATED = "isolated"
    INNER = "inner"
    OUTER = "outer"


def edge_kind(G: PresentationGraph, u: str, v: str) -> EdgeKind:
    if not G.has_edge(u, v):
        raise GraphError(f"unknown edge {u}-{v}")
    leaves = (G.valence(u) == 1) + (G.valence(v) == 1)
    return (EdgeKind.INNER, EdgeKind.OUTER, EdgeKind.ISOLATED)[leaves]


# -- plain graph helpers ---------------------------------------------------


@dataclass(frozen=True)
class CutGraph:
    """Graph obtained by severing every even edge at its midpoint.

    ``provenance`` maps each cut-graph edge to the original edge it came
    from. Stubs are named ``"<u><v>@<endpoint>"``.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    provenance: dict = field(hash=False, compare=False)

    def edge_pairs(self) -> list[Edge]:
        return list(self.edges)

    def induced(self, keep: Iterable[str]) -> CutGraph:
        keep = set(keep)
        edges = tuple(e for e in self.edges if e[0] in keep and e[1] in keep)
        return CutGraph(
            tuple(v for v in self.vertices if v in keep),
            edges,
            {e: self.provenance[e] for e in edges},
        )


@dataclass(frozen=True)
class SimpleGraph:
    """Unlabelled graph on arbitrary hashable, sortable vertices."""

    vertices: tuple
    edges: tuple = ()

    def edge_pairs(self) -> list:
        return list(self.edges)

    def induced(self, keep: Iterable) -> SimpleGraph:
        keep = set(keep)
        return SimpleGraph(
            tuple(v for v in self.vertices if v in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )


def stub_name(u: str, v: str, endpoint: str) -> str:
    a, b = edge_key(u, v)
    return f"{a}{b}@{endpoint}"


def cut_graph(G: PresentationGraph) -> CutGraph:
    verts = list(G.vertices)
    edges: list[Edge] = []
    prov: dict[Edge, Edge] = {}
    for u, v, m in G.edges:
        if m % 2:
            edges.append((u, v))
            prov[(u, v)] = (u, v)
        else:
            for end in (u, v):
                s = stub_name(u, v, end)
                verts.append(s)
                edges.append((end, s))
                prov[(end, s)] = (u, v)
    return CutGraph(tuple(verts), tuple(edges), prov)


def _adjacency(H) -> dict[str, list[str]]:
    adj: dict[str, list[str]] = {v: [] for v in H.vertices}
    for u, v in H.edge_pairs():
        adj[u].append(v)
        adj[v].append(u)
    return adj


def connected_components(H) -> list[list[str]]:
    """Vertex sets of the components, each sorted, in order of least vertex."""
    adj = _adjacency(H)
    seen: set[str] = set()
    comps = []
    for v in sorted(adj):
        if v in seen:
            continue
        seen.add(v)
        stack = [v]
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def component_of(H, x: str):
    if x not in set(H.vertices):
        raise GraphError(f"unknown vertex {x!r}")
    for comp in connected_components(H):
        if x in comp:
            return H.induced(comp)
    raise AssertionError("unreachable")


def cycle_rank(H) -> int:
    return len(H.edge_pairs()) - len(H.vertices) + len(connected_components(H))


def abelianisation_rank(G: PresentationGraph) -> int:
    """Rank of the free abelian group A_G / [A_G, A_G].

    Odd edges identify their endpoints; even edges impose nothing.
    """
    odd = PresentationGraph(G.vertices, tuple(e for e in G.edges if e[2] % 2))
    return len(connected_components(odd))


# -- separating edges ------------------------------------------------------


def edge_complement_components(G: PresentationGraph, u: str, v: str) -> list[list[str]]:
    """Components of G with the closed edge {u, v} removed."""
    rest = G.induced(x for x in G.vertices if x not in (u, v))
    return connected_components(rest)


def separating_odd_edges(G: PresentationGraph) -> list[Edge]:
    """Odd edges e with G = G1 u_e G2, G1 n G2 = e and both pieces proper.

    Both pieces are proper exactly when removing the closed edge leaves at
    least two components.
    """
    return [
        (u, v)
        for u, v, m in G.edges
        if m % 2 and len(edge_complement_components(G, u, v)) >= 2
    ]


# -- words over arbitrary generators ---------------------------------------

Word = list[tuple[str, int]]

_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)(?:\^([+-]?\d+)|(⁻¹))?\Z")


def parse_word(text: str) -> Word:
    """Parse ``"z x y y^-1 y"``-style words into ``(generator, exponent)`` pairs."""
    out: Word = []
    for tok in text.split():
        match = _TOKEN_RE.match(tok)
        if not match:
            raise GraphError(f"bad word token {tok!r}")
        name, power, sup = match.groups()
        exp = -1 if sup else int(power) if power is not None else 1
        if exp:
            out.append((name, exp))
    return out


def alternating(a: str, b: str, m: int) -> Word:
    return [((a, b)[i % 2], 1) for i in range(m)]


def defining_relations(G: PresentationGraph) -> list[tuple[Word, Word]]:
    return [(alternating(u, v, m), alternating(v, u, m)) for u, v, m in G.edges]


@dataclass(frozen=True)
class LeafRetraction:
    """Homomorphism A_G -> <y> sending y to itself and every other generator to 1."""

    graph: PresentationGraph
    target: str

    def evaluate(self, word: Word | str) -> int:
        if isinstance(word, str):
            word = parse_word(word)
        known = set(self.graph.vertices)
        total = 0
        for g, e in word:
            if g not in known:
                raise GraphError(f"unknown generator {g!r}")
            if g == self.target:
                total += e
        return total

    def respects_relations(self) -> bool:
        return all(
            self.evaluate(lhs) == self.evaluate(rhs)
            for lhs, rhs in defining_relations(self.graph)
        )


def even_leaf_retraction(G: PresentationGraph, y: str) -> LeafRetraction:
    nbrs = G.neighbours(y)
    if len(nbrs) != 1:
        raise GraphError(f"{y!r} is not a leaf (valence {len(nbrs)})")
    (x, m), = nbrs.items()
    if m % 2:
        raise GraphError(
            f"edge {y}-{x} has odd label {m}: the relation forces exponent "
            f"{(m + 1) // 2} = {(m - 1) // 2}, so no such homomorphism exists"
        )
    return LeafRetraction(G, y)


def random_graph(rng, n: int, p: float = 0.4, labels: Sequence[int] = (2, 3, 4, 5, 6), prefix: str = "v") -> PresentationGraph:
    verts = [f"{prefix}{i}" for i in range(n)]
    edges = [(u, v, int(rng.choice(labels))) for u, v in combinations(verts, 2) if rng.random() < p]
    return PresentationGraph(tuple(verts), tuple(edges))
