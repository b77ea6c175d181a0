"""Centraliser shapes of elements of A_G.

Powers of standard generators are handled by the cut-graph rank formula:
C(x) = <x> x F with rank(F) = |E(cut_x)| + cycle_rank(cut_x), where cut_x is
the component of x after severing every even edge at its midpoint. Other
elements are described by an `ElementDescriptor` and classified by case.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import dihedral, kernels
from .graph import (
    GraphError,
    PresentationGraph,
    connected_components,
    cut_graph,
    is_large_type,
    is_two_dimensional,
    parse_word,
)
from .shapes import CentraliserShape


class IsolatedOddEdgeWarning(UserWarning):
    """A generator on an isolated odd edge: rank formula gives Z^2 although the
    generator is neither an isolated vertex nor an even leaf."""


@lru_cache(maxsize=4096)
def _cut_ranks(G: PresentationGraph) -> dict[str, tuple[int, int]]:
    cut = cut_graph(G)
    comps = connected_components(cut)
    where = {v: i for i, verts in enumerate(comps) for v in verts}
    n_edges = [0] * len(comps)
    for u, _ in cut.edges:
        n_edges[where[u]] += 1
    # components are connected, so cycle rank is |E| - |V| + 1
    return {
        v: (n_edges[where[v]], n_edges[where[v]] - len(comps[where[v]]) + 1)
        for v in G.vertices
    }


def free_rank(G: PresentationGraph, x: str) -> int:
    if x not in G._adj:
        raise GraphError(f"unknown vertex {x!r}")
    n_edges, rank = _cut_ranks(G)[x]
    return n_edges + rank


@lru_cache(maxsize=4096)
def _check_domain(G: PresentationGraph) -> None:
    if not (is_two_dimensional(G) or is_large_type(G)):
        raise GraphError("the centraliser rank formula needs a two-dimensional or large-type graph")


def _is_even_leaf(G: PresentationGraph, x: str) -> bool:
    nbrs = G._adj[x]
    return len(nbrs) == 1 and next(iter(nbrs.values())) % 2 == 0


def _is_isolated_odd_edge(G: PresentationGraph, x: str) -> bool:
    nbrs = G._adj[x]
    if len(nbrs) != 1:
        return False
    (y, m), = nbrs.items()
    return m % 2 == 1 and len(G._adj[y]) == 1


def generator_centraliser(G: PresentationGraph, x: str) -> CentraliserShape:
    """Shape of C(x^n) for any n != 0."""
    if x not in G._adj:
        raise GraphError(f"unknown vertex {x!r}")
    _check_domain(G)
    n_edges, rank = _cut_ranks(G)[x]
    r = n_edges + rank
    if not G._adj[x]:
        why = "isolated vertex"
    elif _is_even_leaf(G, x):
        why = "leaf of an even-labelled edge"
    else:
        why = f"cut-graph component: {n_edges} edges + cycle rank {rank}"
    return CentraliserShape.z_times_free(r, f"{why}; free rank {r}")


def generator_centralisers(G: PresentationGraph) -> dict[str, CentraliserShape]:
    """`generator_centraliser` for every vertex, via the compiled rank kernel."""
    _check_domain(G)
    index = {v: i for i, v in enumerate(G.vertices)}
    eu = np.array([index[u] for u, _, _ in G.edges], dtype=np.int64)
    ev = np.array([index[v] for _, v, _ in G.edges], dtype=np.int64)
    even = np.array([m % 2 == 0 for _, _, m in G.edges], dtype=np.bool_)
    ranks = kernels.centraliser_ranks(len(index), eu, ev, even)
    return {v: CentraliserShape.z_times_free(int(ranks[i]), f"free rank {int(ranks[i])}") for v, i in index.items()}


@dataclass(frozen=True)
class Decision:
    value: bool
    justification: str
    warnings: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.value


def has_ZxF2_centraliser(G: PresentationGraph, x: str, n: int = 1) -> Decision:
    """Whether C(x^n) is Z x F with F non-abelian free (independent of n)."""
    if n == 0:
        raise GraphError("exponent must be non-zero")
    if not is_large_type(G):
        raise GraphError("this characterisation is stated for large-type graphs only")
    shape = generator_centraliser(G, x)
    notes: tuple[str, ...] = ()
    if not G._adj[x]:
        why = "isolated vertex: C = Z"
    elif _is_even_leaf(G, x):
        why = "leaf of an even-labelled edge: C = Z^2"
    else:
        why = f"rank formula: C = {shape}"
        if _is_isolated_odd_edge(G, x):
            note = (
                f"{x!r} lies on an isolated odd-labelled edge: it is neither an isolated vertex "
                "nor an even leaf, yet the rank formula gives free rank 1 (C = Z^2); "
                "reporting the formula's answer"
            )
            warnings.warn(note, IsolatedOddEdgeWarning, stacklevel=2)
            notes = (note,)
    return Decision(shape.is_z_times_f2, why, notes)


# -- descriptors -----------------------------------------------------------


@dataclass(frozen=True)
class GeneratorPower:
    generator: str
    exponent: int = 1

    def __post_init__(self):
        if self.exponent == 0:
            raise GraphError("exponent must be non-zero")


@dataclass(frozen=True)
class DihedralElliptic:
    """An element of the standard dihedral parabolic on ``edge``; in ``word`` the
    first endpoint plays ``a`` and the second ``b``."""

    edge: tuple[str, str]
    word: Union[str, dihedral.DihedralWord]


@dataclass(frozen=True)
class Hyperbolic:
    transverse_tree: str  # "bounded" | "line"
    axis_in_standard_tree: bool

    def __post_init__(self):
        if self.transverse_tree not in ("bounded", "line"):
            raise GraphError("transverse_tree must be 'bounded' or 'line'")


ElementDescriptor = Union[GeneratorPower, DihedralElliptic, Hyperbolic]

# Worked loxodromic examples in the (3, 3, 3) triangle group; tags are
# user-supplied, nothing here is computed from the words.
HYPERBOLIC_CATALOGUE: dict[str, Hyperbolic] = {
    "b^n abcabc (n != 0)": Hyperbolic("bounded", True),
    "(ab^-1)^n (cb^-1)^n (n large)": Hyperbolic("bounded", False),
    "abcabc": Hyperbolic("line", True),
    "babc": Hyperbolic("line", False),
}


def dihedral_word_on_edge(G: PresentationGraph, d: DihedralElliptic) -> dihedral.DihedralWord:
    u, v = d.edge
    m = G.label(u, v)
    if m is None:
        raise GraphError(f"{u}-{v} is not an edge")
    if isinstance(d.word, dihedral.DihedralWord):
        if d.word.m != m:
            raise GraphError(f"word is over A({d.word.m}) but the edge has label {m}")
        return d.word
    try:
        if {u, v} == {"a", "b"}:
            # compact spellings like "ab^-1" are allowed on an a-b edge
            w = dihedral.DihedralWord.parse(m, d.word)
            if u == "b":
                w = dihedral.DihedralWord(m, tuple(_swap(x) for x in w.letters))
            return w
        return _translate(d.word, u, v, m)
    except dihedral.DihedralError as exc:
        raise GraphError(str(exc)) from exc


def _swap(x: int) -> int:
    return (3 - abs(x)) * (1 if x > 0 else -1)


def _translate(text: str, u: str, v: str, m: int) -> dihedral.DihedralWord:
    letters: list[int] = []
    for g, e in parse_word(text):
        if g == u:
            letter = dihedral.A
        elif g == v:
            letter = dihedral.B
        else:
            raise GraphError(f"generator {g!r} is not an endpoint of {u}-{v}")
        letters += [letter if e > 0 else -letter] * abs(e)
    return dihedral.DihedralWord(m, tuple(letters))


def classify_centraliser(G: PresentationGraph, d: ElementDescriptor) -> CentraliserShape:
    if isinstance(d, GeneratorPower):
        return generator_centraliser(G, d.generator)
    if isinstance(d, DihedralElliptic):
        w = dihedral_word_on_edge(G, d)
        if w.m < 3:
            raise GraphError("dihedral elliptic elements need an edge label >= 3")
        if dihedral.is_trivial(w):
            raise GraphError("the word is trivial")
        return dihedral.dihedral_centraliser_shape(w)
    if isinstance(d, Hyperbolic):
        if d.transverse_tree == "bounded":
            if d.axis_in_standard_tree:
                return CentraliserShape.abelian_z2("bounded transverse tree, axis in a standard tree")
            return CentraliserShape.cyclic("bounded transverse tree, no axis in a standard tree")
        if d.axis_in_standard_tree:
            return CentraliserShape.dihedral(4, "transverse tree is a line, axis in a standard tree: <x, y | xyxy = yxyx>")
        return CentraliserShape.abelian_z2("transverse tree is a line, no axis in a standard tree")
    raise GraphError(f"malformed descriptor {d!r}")
