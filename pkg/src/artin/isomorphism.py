"""Labelled-graph isomorphism, twist-equivalence, rigidity and the large-type gate.

A twist along a separating odd edge {a, b} with decomposition
G = G1 u_e G2 swaps the roles of a and b inside G2: every edge {a, z} with
z in G2 - {a, b} becomes {b, z} and vice versa. Twists preserve the Artin
group up to isomorphism; for large-type graphs they generate every graph
with an isomorphic Artin group.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .graph import (
    Edge,
    EdgeKind,
    GraphError,
    PresentationGraph,
    abelianisation_rank,
    connected_components,
    edge_complement_components,
    edge_kind,
    is_large_type,
    is_two_dimensional,
    label_multiset,
    separating_odd_edges,
    spherical_triangles,
)


class OutsideLargeTypeWarning(UserWarning):
    """A criterion proved for large-type graphs was applied outside that class."""


# -- canonical labelling ---------------------------------------------------


def _refine(adj: dict[str, dict[str, int]], colour: dict[str, int]) -> dict[str, int]:
    """Colour refinement by (colour, multiset of (neighbour colour, label))."""
    n_classes = len(set(colour.values()))
    while True:
        sig = {
            v: (colour[v], tuple(sorted((colour[u], m) for u, m in adj[v].items())))
            for v in adj
        }
        ids = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        colour = {v: ids[sig[v]] for v in adj}
        k = len(ids)
        if k == n_classes:
            return colour
        n_classes = k


def _twin_classes(adj: dict[str, dict[str, int]], cell: list[str]) -> list[str]:
    # u ~ w when the transposition (u w) is an automorphism
    reps: list[str] = []
    for v in cell:
        for r in reps:
            if all(adj[v].get(z) == adj[r].get(z) for z in adj if z not in (v, r)):
                break
        else:
            reps.append(v)
    return reps


def _component_certificate(adj: dict[str, dict[str, int]]) -> tuple[tuple, list[str]]:
    init = {v: (len(adj[v]), tuple(sorted(adj[v].values()))) for v in adj}
    ids = {s: i for i, s in enumerate(sorted(set(init.values())))}
    start = _refine(adj, {v: ids[init[v]] for v in adj})
    best: tuple | None = None
    best_order: list[str] = []

    def search(colour: dict[str, int]) -> None:
        nonlocal best, best_order
        cells: dict[int, list[str]] = {}
        for v, c in colour.items():
            cells.setdefault(c, []).append(v)
        multi = [(len(vs), c) for c, vs in cells.items() if len(vs) > 1]
        if not multi:
            order = sorted(adj, key=colour.__getitem__)
            pos = {v: i for i, v in enumerate(order)}
            cert = tuple(sorted(
                (min(pos[u], pos[v]), max(pos[u], pos[v]), m)
                for u in adj for v, m in adj[u].items() if u < v
            ))
            if best is None or cert < best:
                best, best_order = cert, order
            return
        _, target = min(multi)
        for v in _twin_classes(adj, sorted(cells[target])):
            sig = {x: (colour[x], x != v) for x in adj}
            ids = {s: i for i, s in enumerate(sorted(set(sig.values())))}
            search(_refine(adj, {x: ids[sig[x]] for x in adj}))

    search(start)
    return (len(adj), best), best_order


@dataclass(frozen=True)
class CanonicalGraph:
    """Canonical representative with vertex names erased.

    ``key`` is equal for two graphs exactly when they are isomorphic as
    labelled graphs; ``order[i]`` is the original vertex placed at index i.
    """

    key: tuple
    order: tuple[str, ...] = field(compare=False)

    @property
    def n_vertices(self) -> int:
        return len(self.order)

    def edges(self) -> list[tuple[int, int, int]]:
        out = []
        offset = 0
        for n, cert in self.key:
            out += [(i + offset, j + offset, m) for i, j, m in cert]
            offset += n
        return out

    def as_graph(self) -> PresentationGraph:
        names = [f"v{i}" for i in range(self.n_vertices)]
        return PresentationGraph(tuple(names), tuple((names[i], names[j], m) for i, j, m in self.edges()))


@lru_cache(maxsize=8192)
def canonical_form(G: PresentationGraph) -> CanonicalGraph:
    parts = []
    for comp in connected_components(G):
        adj = {v: {u: m for u, m in G._adj[v].items()} for v in comp}
        parts.append(_component_certificate(adj))
    parts.sort(key=lambda p: p[0])
    key = tuple(cert for cert, _ in parts)
    order = tuple(v for _, o in parts for v in o)
    return CanonicalGraph(key, order)


def graphs_isomorphic(G: PresentationGraph, H: PresentationGraph) -> dict[str, str] | None:
    """A label-preserving vertex bijection G -> H, or None."""
    if len(G.vertices) != len(H.vertices) or label_multiset(G) != label_multiset(H):
        return None
    cg, ch = canonical_form(G), canonical_form(H)
    if cg.key != ch.key:
        return None
    bijection = dict(zip(cg.order, ch.order))
    if G.relabel(bijection) != H:
        raise AssertionError("canonical labelling produced an invalid bijection")
    return bijection


# -- twists ----------------------------------------------------------------


@dataclass(frozen=True)
class TwistMove:
    edge: Edge
    side: frozenset[str]

    def to_dict(self) -> dict:
        return {"edge": list(self.edge), "side": sorted(self.side)}


def _validate(G: PresentationGraph, t: TwistMove) -> list[list[str]]:
    a, b = t.edge
    m = G.label(a, b)
    if m is None:
        raise GraphError(f"{a}-{b} is not an edge")
    if m % 2 == 0:
        raise GraphError(f"twist edge {a}-{b} has even label {m}")
    if not {a, b} <= t.side:
        raise GraphError("the twist side must contain both endpoints of the edge")
    comps = edge_complement_components(G, a, b)
    inner = t.side - {a, b}
    chosen = [c for c in comps if set(c) <= inner]
    if sum(len(c) for c in chosen) != len(inner):
        raise GraphError("the twist side must be a union of components of G minus the edge")
    if comps and len(chosen) == len(comps):
        raise GraphError("the twist side must leave a piece other than the edge itself")
    return chosen


def twist_moves(G: PresentationGraph) -> list[TwistMove]:
    moves = []
    for a, b in separating_odd_edges(G):
        comps = edge_complement_components(G, a, b)
        for size in range(1, len(comps)):
            for pick in combinations(range(len(comps)), size):
                side = frozenset({a, b}.union(*(comps[i] for i in pick)))
                moves.append(TwistMove((a, b), side))
    return moves


def apply_twist(G: PresentationGraph, t: TwistMove) -> PresentationGraph:
    _validate(G, t)
    a, b = t.edge
    inner = t.side - {a, b}
    swap = {a: b, b: a}
    edges = []
    for u, v, m in G.edges:
        if u in swap and v in inner:
            u = swap[u]
        elif v in swap and u in inner:
            v = swap[v]
        edges.append((u, v, m))
    return PresentationGraph(G.vertices, tuple(edges))


@dataclass
class TwistClass:
    """Twist-equivalence class of a graph, as canonical keys.

    ``representatives[key]`` is a concrete graph reached from the start
    graph by the moves returned by `path_to`.
    """

    start: PresentationGraph
    representatives: dict[tuple, PresentationGraph]
    parent: dict[tuple, tuple[tuple, TwistMove] | None]

    def __len__(self) -> int:
        return len(self.representatives)

    def __contains__(self, G: PresentationGraph) -> bool:
        return canonical_form(G).key in self.representatives

    @property
    def keys(self) -> list[tuple]:
        return sorted(self.representatives)

    def path_to(self, key: tuple) -> list[TwistMove]:
        moves = []
        step = self.parent[key]
        while step is not None:
            key, move = step
            moves.append(move)
            step = self.parent[key]
        return moves[::-1]


def twist_class(G: PresentationGraph) -> TwistClass:
    start = canonical_form(G).key
    reps = {start: G}
    parent: dict[tuple, tuple[tuple, TwistMove] | None] = {start: None}
    queue = deque([start])
    while queue:
        key = queue.popleft()
        H = reps[key]
        for move in twist_moves(H):
            H2 = apply_twist(H, move)
            k2 = canonical_form(H2).key
            if k2 not in reps:
                reps[k2] = H2
                parent[k2] = (key, move)
                queue.append(k2)
    return TwistClass(G, reps, parent)


def is_rigid(G: PresentationGraph) -> bool:
    """No separating edge with an odd label."""
    if not is_large_type(G):
        warnings.warn(
            "rigidity criterion is only established for large-type graphs",
            OutsideLargeTypeWarning,
            stacklevel=2,
        )
    return not separating_odd_edges(G)


def rigidity_report(G: PresentationGraph) -> dict:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutsideLargeTypeWarning)
        rigid = is_rigid(G)
    size = len(twist_class(G))
    out = {
        "rigid": rigid,
        "separatingOddEdges": [list(e) for e in separating_odd_edges(G)],
        "twistClassSize": size,
    }
    notes = []
    if not is_large_type(G):
        notes.append("criterion established for large-type graphs only")
    if not rigid and size == 1:
        notes.append("separating odd edges exist but every twist gives an isomorphic graph")
    if notes:
        out["notes"] = notes
    return out


# -- isomorphism within the large-type class --------------------------------


@dataclass(frozen=True)
class IsomorphismCertificate:
    """Apply ``moves`` to the first graph in order, then rename by ``bijection``."""

    moves: tuple[TwistMove, ...]
    bijection: dict = field(hash=False)

    def replay(self, G: PresentationGraph) -> PresentationGraph:
        for move in self.moves:
            G = apply_twist(G, move)
        return G.relabel(self.bijection)


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    certificate: IsomorphismCertificate | None = None

    def __bool__(self) -> bool:
        return self.isomorphic

    def to_dict(self) -> dict:
        out: dict = {"isomorphic": self.isomorphic, "certificate": []}
        if self.certificate is not None:
            out["certificate"] = [m.to_dict() for m in self.certificate.moves]
            out["bijection"] = dict(sorted(self.certificate.bijection.items()))
        return out


def large_type_isomorphic(G: PresentationGraph, H: PresentationGraph) -> IsomorphismResult:
    """Decide A_G = A_H for large-type G and H via twist-equivalence."""
    for X in (G, H):
        if not is_large_type(X):
            raise GraphError("both graphs must be of large type")
    if len(G.vertices) != len(H.vertices) or label_multiset(G) != label_multiset(H):
        return IsomorphismResult(False)
    tc = twist_class(G)
    key = canonical_form(H).key
    if key not in tc.representatives:
        return IsomorphismResult(False)
    moves = tuple(tc.path_to(key))
    bijection = graphs_isomorphic(tc.representatives[key], H)
    cert = IsomorphismCertificate(moves, bijection)
    if cert.replay(G) != H:
        raise AssertionError("isomorphism certificate failed to replay")
    return IsomorphismResult(True, cert)


# -- the large-type gate ----------------------------------------------------

_PROPERTY = {EdgeKind.ISOLATED: "IsolatedZ2", EdgeKind.OUTER: "P1", EdgeKind.INNER: "P2"}


@dataclass(frozen=True)
class GateVerdict:
    kind: str  # "large-type" | "not-large-type" | "not-2d" | "discrete"
    witness: Edge | None = None
    edge_kind: EdgeKind | None = None
    property: str | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        witness: dict = {}
        if self.witness is not None:
            witness = {
                "edge": list(self.witness),
                "kind": self.edge_kind.value,
                "property": self.property,
            }
        return {"gate": self.kind, "witness": witness, "reason": self.reason}


def theorem_a_gate(G: PresentationGraph) -> GateVerdict:
    """Which structural property, if any, rules A_G out of the large-type class."""
    if not G.edges:
        return GateVerdict("discrete", reason="no edges: large type holds only vacuously and the graph is not two-dimensional")
    if not is_two_dimensional(G):
        tri = spherical_triangles(G)[0]
        return GateVerdict(
            "not-2d",
            reason=(
                f"spherical triangle {'-'.join(tri)}: cannot conclude from the edge criteria, "
                "which only separate two-dimensional graphs"
            ),
        )
    for u, v, m in G.edges:
        if m == 2:
            kind = edge_kind(G, u, v)
            prop = _PROPERTY[kind]
            return GateVerdict(
                "not-large-type",
                witness=(u, v),
                edge_kind=kind,
                property=prop,
                reason=f"{kind.value} edge {u}-{v} labelled 2 gives property {prop}",
            )
    return GateVerdict("large-type", reason="two-dimensional with every label at least 3")


def twist_invariants(G: PresentationGraph) -> tuple:
    """Quantities every twist preserves."""
    return (len(G.vertices), len(G.edges), label_multiset(G), abelianisation_rank(G))
